//! Named small extensions used by tests, examples and benchmarks.

use crate::bicrossed::ExtensionData;
use crate::classify::ClassTriple;
use crate::cocycle::{SigmaTable, TauTable};
use crate::groups::{AbGroup, AutAction, FinGroup, MatchedPair};

fn klein() -> AbGroup {
    AbGroup::new(vec![2, 2]).expect("valid invariants")
}

/// `(−1)^{s_1 t_2}` on `Z_2 × Z_2` as an exponent of `ζ_N`.
pub fn kp_exponent(s: usize, t: usize, n: u32) -> i64 {
    let a = klein();
    let (x, y) = (a.element(s), a.element(t));
    (x[0] * y[1]) as i64 * (n / 2) as i64
}

/// `k^{Z_2} ⊗ kZ_2`: trivial actions and cocycles.
pub fn e_triv() -> ExtensionData {
    ExtensionData::trivial(AbGroup::cyclic(2), FinGroup::cyclic(2), 4)
}

/// Eight-dimensional extension of `kZ_2` by `k^{Z_2×Z_2}`: trivial
/// actions, `σ ≡ 1`, `τ_u(s,t) = (−1)^{s_1 t_2}`.
pub fn e_kp8() -> ExtensionData {
    let n = 4;
    let a = klein();
    let f = FinGroup::cyclic(2);
    let tau = TauTable::from_fn(2, 4, n, |x, s, t| x as i64 * kp_exponent(s, t, n));
    ExtensionData::new(
        a.clone(),
        MatchedPair::trivial(a.to_fingroup(), f),
        SigmaTable::trivial(4, 2, n),
        tau,
    )
    .expect("valid datum")
}

/// Sixteen-dimensional example: `A = F = Z_2 × Z_2`, trivial actions,
/// `σ ≡ 1`, `τ_x = (−1)^{s_1 t_2}` exactly when `x` has first coordinate 1.
/// With `F` indexed as `(x_1, x_2)`, `a = 1`, `b = 2`, `ab = 3`.
pub fn e_16() -> ExtensionData {
    let n = 4;
    let a = klein();
    let f = klein();
    let tau = TauTable::from_fn(4, 4, n, |x, s, t| f.element(x)[0] as i64 * kp_exponent(s, t, n));
    ExtensionData::new(
        a.clone(),
        MatchedPair::trivial(a.to_fingroup(), f.to_fingroup()),
        SigmaTable::trivial(4, 4, n),
        tau,
    )
    .expect("valid datum")
}

/// `k^{Z_3} # kZ_2` from `S_3 = A_3 ⋊ Z_2`: `▷` trivial, `◁` inverts.
pub fn s3_conjugation() -> ExtensionData {
    let a = AbGroup::cyclic(3);
    let left = (0..3u32).map(|s| vec![s, (3 - s) % 3]).collect();
    let right = (0..3).map(|_| vec![0, 1]).collect();
    let mp = MatchedPair {
        gamma: a.to_fingroup(),
        f: FinGroup::cyclic(2),
        left,
        right,
    };
    ExtensionData::new(a, mp, SigmaTable::trivial(3, 2, 6), TauTable::trivial(2, 3, 6)).expect("valid datum")
}

/// `k^{Z_2} # kZ_3` from `S_3 = A_3·⟨(12)⟩`: `◁` trivial, `▷` inverts.
/// Not cocentral.
pub fn s3_dual() -> ExtensionData {
    let a = AbGroup::cyclic(2);
    let left = (0..2u32).map(|s| vec![s; 3]).collect();
    let right = vec![vec![0, 1, 2], vec![0, 2, 1]];
    let mp = MatchedPair {
        gamma: a.to_fingroup(),
        f: FinGroup::cyclic(3),
        left,
        right,
    };
    ExtensionData::new(a, mp, SigmaTable::trivial(2, 3, 6), TauTable::trivial(3, 2, 6)).expect("valid datum")
}

/// `A = Z_2`, `F = Z_2 × Z_2`, trivial actions, `τ ≡ 1`,
/// `σ_s(x, y) = (−1)^{s x_1 y_2}`.
pub fn sigma_twisted_8() -> ExtensionData {
    let a = AbGroup::cyclic(2);
    let f = klein();
    let sigma = SigmaTable::from_fn(2, 4, 2, |s, x, y| (s as u32 * f.element(x)[0] * f.element(y)[1]) as i64);
    ExtensionData::new(
        a.clone(),
        MatchedPair::trivial(a.to_fingroup(), f.to_fingroup()),
        sigma,
        TauTable::trivial(4, 2, 2),
    )
    .expect("valid datum")
}

/// Every named example with its name.
pub fn all() -> Vec<(&'static str, ExtensionData)> {
    vec![
        ("E_triv", e_triv()),
        ("E_KP8", e_kp8()),
        ("E_16", e_16()),
        ("S3_conjugation", s3_conjugation()),
        ("S3_dual", s3_dual()),
        ("sigma_twisted_8", sigma_twisted_8()),
    ]
}

fn triple_from(data: ExtensionData) -> ClassTriple {
    let action = AutAction::trivial(data.mp.f.clone(), data.a.clone());
    ClassTriple {
        gamma: data.a,
        f: data.mp.f,
        action,
        sigma: data.sigma,
        tau: data.tau,
        modulus: data.modulus,
    }
}

/// [`e_kp8`] as a classification triple: `Γ = Z_2 × Z_2`, `F = Z_2`,
/// trivial action.
pub fn kp8_triple() -> ClassTriple {
    triple_from(e_kp8())
}

/// [`e_16`] as a classification triple.
pub fn e16_triple() -> ClassTriple {
    triple_from(e_16())
}
