//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopfext::bicrossed::{
    compute_antipode, grouplikes_oracle, grouplikes_structural, verify_bialgebra, BicrossedHopf,
    VerifiedHopf, ORACLE_DIM_LIMIT,
};
use hopfext::classify::{
    construct_from_triple, crossed_product, enumerate_triples, ty_specialize, validate_triple,
    ClassTriple, EnumerationBudget, TripleCondition,
};
use hopfext::cocycle::{
    canonical_cocycle, compute_f0, is_nondegenerate, twisted_algebra_simple_oracle, Cocycle,
    SigmaTable, TauTable,
};
use hopfext::comodrep::{
    normality_alternativo, normality_chardual, verify_ty_rules, Side,
};
use hopfext::corpus;
use hopfext::groups::{enumerate_actions, group_iso_test, AbGroup, AutAction, FinGroup};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn klein() -> AbGroup {
    AbGroup::new(vec![2, 2]).unwrap()
}

/// `Γ` with `F = Z_2` acting by `t` and `τ_u = β_k`, `σ ≡ 1`.
fn z2_triple(gamma: AbGroup, t: Vec<Vec<u32>>, k: &[u32], n: u32) -> ClassTriple {
    let f = FinGroup::cyclic(2);
    let beta = canonical_cocycle(&gamma, k, n).unwrap();
    let na = gamma.order();
    let id: Vec<Vec<u32>> = (0..gamma.rank())
        .map(|i| (0..gamma.rank()).map(|j| u32::from(i == j)).collect())
        .collect();
    ClassTriple {
        action: AutAction::new(f.clone(), gamma.clone(), vec![id, t]).unwrap(),
        sigma: SigmaTable::trivial(na, 2, n),
        tau: TauTable::from_fn(2, na, n, |x, s, u| if x == 1 { beta.exp(s, u) as i64 } else { 0 }),
        gamma,
        f,
        modulus: n,
    }
}

/// Enumeration survivors used by several criteria: `Γ = Z_2²` against
/// `Z_2`, `Z_4`, `Z_2²` with every action, and the order-6 groups with
/// rotating actions.
fn survivors() -> Vec<ClassTriple> {
    let gamma = klein();
    let budget = EnumerationBudget::default();
    let mut out = Vec::new();
    for f in [
        FinGroup::cyclic(2),
        FinGroup::cyclic(4),
        klein().to_fingroup(),
        FinGroup::cyclic(6),
        FinGroup::s3(),
    ] {
        for action in enumerate_actions(&f, &gamma) {
            let e = enumerate_triples(&gamma, &f, &action, &budget).unwrap();
            out.extend(e.triples);
        }
    }
    out
}

fn axiom_soundness() -> Outcome {
    for (name, data) in [("E_triv", corpus::e_triv()), ("E_KP8", corpus::e_kp8()), ("E_16", corpus::e_16())] {
        let h = BicrossedHopf::build(data);
        let r = verify_bialgebra(&h);
        ensure!(r.passed(), "{name}: {:?}", r.first_failure());
        ensure!(compute_antipode(&h).map_err(|e| e.to_string())?.is_some(), "{name}: no antipode");
    }
    let base = corpus::e_kp8();
    for (s, t) in [(1, 2), (2, 3), (3, 1), (3, 3), (2, 2), (1, 3)] {
        let mut data = base.clone();
        let old = data.tau.exp(1, s, t);
        data.tau.set(1, s, t, (old + 2) % 4);
        let r = verify_bialgebra(&BicrossedHopf::build(data));
        let f = r.first_failure().ok_or(format!("mutation at ({s},{t}) passes"))?;
        ensure!(f.witness.is_some(), "mutation at ({s},{t}): {} has no witness", f.axiom);
    }
    Ok(())
}

fn grouplike_oracle_agreement() -> Outcome {
    let mut data: Vec<(String, _)> = corpus::all().into_iter().map(|(n, d)| (n.to_string(), d)).collect();
    for (i, t) in survivors().iter().enumerate() {
        data.push((format!("survivor {i}"), t.extension_data().map_err(|e| e.to_string())?));
    }
    for (name, d) in data {
        let h = VerifiedHopf::from_data(d).map_err(|f| format!("{name}: {}", f.axiom()))?;
        if h.dim() > ORACLE_DIM_LIMIT {
            continue;
        }
        let s = grouplikes_structural(&h).map_err(|e| e.to_string())?;
        let o = grouplikes_oracle(&h, ORACLE_DIM_LIMIT).map_err(|e| e.to_string())?;
        ensure!(s == o, "{name}: structural and oracle group-likes differ");
        let f0 = compute_f0(&h.data.tau, &h.data.mp).map_err(|e| e.to_string())?;
        ensure!(s.order() == h.data.a.order() * f0.len(), "{name}: |G(H)| = {}", s.order());
    }
    Ok(())
}

fn coalgebra_shape() -> Outcome {
    let mut triples = vec![("E_KP8".to_string(), corpus::kp8_triple()), ("E_16".to_string(), corpus::e16_triple())];
    triples.extend(survivors().into_iter().enumerate().map(|(i, t)| (format!("survivor {i}"), t)));
    for (name, t) in triples {
        let c = construct_from_triple(&t).map_err(|e| format!("{name}: {e}"))?;
        let d = c.degree;
        let n = c.f0.len();
        ensure!(d * d == t.gamma.order(), "{name}: degree {d}");
        let expected = format!("(1, {}; {d}, {n})", d * d * n);
        ensure!(c.coalgebra_type.to_string() == expected, "{name}: type {}", c.coalgebra_type);
        let sum: usize = c.ring.degrees.iter().map(|k| k * k).sum();
        ensure!(sum == c.hopf.dim(), "{name}: Σ dim² = {sum}");
    }
    let kp8 = construct_from_triple(&corpus::kp8_triple()).map_err(|e| e.to_string())?;
    ensure!(kp8.coalgebra_type.to_string() == "(1, 4; 2, 1)", "E_KP8 type {}", kp8.coalgebra_type);
    let e16 = construct_from_triple(&corpus::e16_triple()).map_err(|e| e.to_string())?;
    ensure!(e16.coalgebra_type.to_string() == "(1, 8; 2, 2)", "E_16 type {}", e16.coalgebra_type);
    Ok(())
}

fn fusion_properties() -> Outcome {
    let mut triples = vec![corpus::kp8_triple(), corpus::e16_triple()];
    triples.extend(survivors().into_iter().filter(|t| t.gamma.order() * t.f.order() <= 32));
    for (idx, t) in triples.iter().enumerate() {
        let c = construct_from_triple(t).map_err(|e| e.to_string())?;
        let (h, ring) = (&c.hopf, &c.ring);
        let d = c.degree;
        let n = c.f0.len();
        let g = &ring.grouplikes;
        let xs: Vec<usize> = (0..ring.len()).filter(|&i| ring.degrees[i] > 1).collect();
        ensure!(xs.len() == n, "case {idx}: {} non-invertible simples", xs.len());
        let stab = ring.stabilizer(h, xs[0], Side::Left);
        ensure!(stab.len() == d * d, "case {idx}: |G[χ]| = {}", stab.len());
        let mut gamma_mult = vec![0u32; ring.len()];
        for &s in &stab {
            gamma_mult[ring.grouplike_chars[s]] = 1;
        }
        for &x in &xs {
            ensure!(ring.degrees[x] == d, "case {idx}: degree {}", ring.degrees[x]);
            let xd = ring.duals[x];
            let left = ring.product(h, x, xd).map_err(|e| e.to_string())?;
            let right = ring.product(h, xd, x).map_err(|e| e.to_string())?;
            ensure!(left == gamma_mult, "case {idx}: χχ* ≠ Σ Γ");
            ensure!(left == right, "case {idx}: χχ* ≠ χ*χ");
            for side in [Side::Left, Side::Right] {
                ensure!(ring.stabilizer(h, x, side) == stab, "case {idx}: stabilizers differ");
            }
            let orbit: std::collections::BTreeSet<usize> = (0..g.order())
                .map(|a| {
                    let p = ring.product(h, ring.grouplike_chars[a], x).unwrap();
                    p.iter().position(|&m| m > 0).unwrap()
                })
                .collect();
            ensure!(orbit.len() == n && orbit.iter().all(|o| xs.contains(o)), "case {idx}: orbit {orbit:?}");
            for &y in &xs {
                let p = ring.product(h, x, y).map_err(|e| e.to_string())?;
                ensure!(
                    p.iter().enumerate().all(|(k, &m)| m == 0 || ring.degrees[k] == 1),
                    "case {idx}: x_i x_j has a non-invertible constituent"
                );
            }
        }
        let ty = verify_ty_rules(h, ring).map_err(|e| e.to_string())?;
        ensure!(ty.passed, "case {idx}: {:?}", ty.failures);
    }
    Ok(())
}

fn nondegeneracy_equivalence() -> Outcome {
    let compare = |alpha: &Cocycle| -> Outcome {
        let oracle = twisted_algebra_simple_oracle(alpha).map_err(|e| e.to_string())?;
        ensure!(is_nondegenerate(alpha) == oracle, "disagreement on {:?}", alpha);
        Ok(())
    };
    let mut exhaustive = 0;
    for a in [AbGroup::cyclic(2), klein()] {
        let g = a.to_fingroup();
        let m = g.order() - 1;
        let cells = m * m;
        for code in 0..4usize.pow(cells as u32) {
            let mut values = vec![0u32; g.order() * g.order()];
            let mut c = code;
            for i in 0..cells {
                values[(i / m + 1) * g.order() + (i % m + 1)] = (c % 4) as u32;
                c /= 4;
            }
            if let Ok(alpha) = Cocycle::new(g.clone(), 4, values) {
                if alpha.check().passed {
                    compare(&alpha)?;
                    exhaustive += 1;
                }
            }
        }
    }
    ensure!(exhaustive > 0, "no cocycles enumerated");
    let groups: Vec<Vec<u32>> = vec![
        vec![2], vec![3], vec![4], vec![2, 2], vec![6], vec![8], vec![2, 4], vec![2, 2, 2],
        vec![3, 3], vec![9], vec![12], vec![2, 6], vec![4, 4], vec![2, 8], vec![2, 2, 4],
        vec![2, 2, 2, 2], vec![16], vec![15], vec![14],
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..200 {
        let a = AbGroup::new(groups[i % groups.len()].clone()).unwrap();
        let r = a.rank();
        let inv = a.invariants();
        let mut k = Vec::new();
        for p in 0..r {
            for q in p + 1..r {
                k.push(rng.gen_range(0..num_integer::gcd(inv[p], inv[q])));
            }
        }
        let n = a.exponent() * rng.gen_range(1..=2);
        let beta = canonical_cocycle(&a, &k, n).map_err(|e| e.to_string())?;
        let gamma: Vec<u32> = (0..a.order())
            .map(|s| if s == 0 { 0 } else { rng.gen_range(0..n) })
            .collect();
        let alpha = beta
            .mul(&Cocycle::coboundary(a.to_fingroup(), n, &gamma))
            .map_err(|e| e.to_string())?;
        compare(&alpha)?;
    }
    Ok(())
}

fn round_trip() -> Outcome {
    let mut triples = vec![corpus::kp8_triple(), corpus::e16_triple()];
    triples.extend(survivors());
    for (idx, t) in triples.iter().enumerate() {
        let c = construct_from_triple(t).map_err(|e| format!("case {idx}: {e}"))?;
        ensure!(c.grouplikes.order() * 2 == c.hopf.dim(), "case {idx}: |G(H)| = {}", c.grouplikes.order());
        let cp = crossed_product(t, &c.hopf, &c.f0).map_err(|e| e.to_string())?;
        let iso = group_iso_test(&c.grouplikes.table, &cp).map_err(|e| e.to_string())?;
        ensure!(iso.is_some(), "case {idx}: G(H) is not Γ ⋊ F_0");
    }
    let mut t = corpus::kp8_triple();
    t.tau = TauTable::trivial(2, 4, 4);
    let r = validate_triple(&t);
    ensure!(
        r.first_failure().map(|c| c.condition) == Some(TripleCondition::IndexTwo),
        "trivial τ: {:?}",
        r.first_failure()
    );
    let t = z2_triple(AbGroup::new(vec![2, 2, 2]).unwrap(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], &[1, 0, 0], 2);
    let r = validate_triple(&t);
    ensure!(
        r.first_failure().map(|c| c.condition) == Some(TripleCondition::TauNondegenerate),
        "degenerate τ: {:?}",
        r.first_failure()
    );
    ensure!(construct_from_triple(&t).is_err(), "invalid triple constructed");
    Ok(())
}

fn a4_existence() -> Outcome {
    let gamma = klein();
    let a4 = FinGroup::a4();
    let budget = EnumerationBudget::default();
    let mut found = 0;
    for f in [FinGroup::cyclic(6), FinGroup::s3()] {
        for action in enumerate_actions(&f, &gamma) {
            let rotates = (0..f.order())
                .any(|x| f.element_order(x) == 3 && (0..gamma.order()).any(|s| action.apply(x, s) != s));
            if !rotates {
                continue;
            }
            let e = enumerate_triples(&gamma, &f, &action, &budget).map_err(|e| e.to_string())?;
            for t in &e.triples {
                let c = construct_from_triple(t).map_err(|e| e.to_string())?;
                ensure!(c.hopf.dim() == 24, "dim {}", c.hopf.dim());
                ensure!(c.coalgebra_type.to_string() == "(1, 12; 2, 3)", "type {}", c.coalgebra_type);
                ensure!(
                    group_iso_test(&c.grouplikes.table, &a4).map_err(|e| e.to_string())?.is_some(),
                    "G(H) is not A_4"
                );
                found += 1;
            }
        }
    }
    ensure!(found >= 1, "no triple found");
    Ok(())
}

fn square_free_obstruction() -> Outcome {
    let budget = EnumerationBudget {
        max_order: 64,
        ..EnumerationBudget::default()
    };
    let fs = [
        FinGroup::trivial(),
        FinGroup::cyclic(2),
        FinGroup::cyclic(3),
        FinGroup::cyclic(4),
        klein().to_fingroup(),
    ];
    for m in [1u32, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15] {
        let gamma = if m == 1 { AbGroup::trivial() } else { AbGroup::cyclic(m) };
        for f in &fs {
            for action in enumerate_actions(f, &gamma) {
                let e = enumerate_triples(&gamma, f, &action, &budget).map_err(|e| e.to_string())?;
                ensure!(!e.truncated, "|Γ| = {m}, |F| = {}: truncated", f.order());
                ensure!(e.triples.is_empty(), "|Γ| = {m}, |F| = {}: {} triples", f.order(), e.triples.len());
            }
        }
    }
    Ok(())
}

fn normality() -> Outcome {
    for t in [corpus::kp8_triple(), corpus::e16_triple()] {
        let c = construct_from_triple(&t).map_err(|e| e.to_string())?;
        let basis: Vec<_> = c
            .ty
            .common_stabilizer
            .iter()
            .map(|&g| c.ring.characters[c.ring.grouplike_chars[g]].clone())
            .collect();
        let v = normality_chardual(&c.hopf, &c.ring, &basis, &c.ty.noninvertible).map_err(|e| e.to_string())?;
        ensure!(v.normal, "dim {}: kΓ not certified: {:?}", c.hopf.dim(), v.witness);
    }
    let mut triples = vec![corpus::kp8_triple(), corpus::e16_triple()];
    triples.extend(survivors());
    for (idx, t) in triples.iter().enumerate() {
        let c = construct_from_triple(t).map_err(|e| e.to_string())?;
        for &x in &c.ty.noninvertible {
            let v = normality_alternativo(&c.hopf, &c.ring, x).map_err(|e| e.to_string())?;
            ensure!(v.normal, "case {idx}, character {x}: {:?}", v.witness);
        }
    }
    Ok(())
}

fn tambara() -> Outcome {
    let ty = ty_specialize(&corpus::kp8_triple()).map_err(|e| e.to_string())?;
    ensure!(ty.valid, "E_KP8: {:?}", ty.first_failure());
    let a = klein();
    let t = &ty.t;
    let square = hopfext::groups::apply_matrix;
    ensure!((0..a.order()).all(|s| square(&a, t, square(&a, t, s)) == s), "T² ≠ 1");
    ensure!(is_nondegenerate(&ty.xi), "ξ degenerate");
    ensure!(ty.chi_form.is_symmetric() && ty.chi_form.radical().len() == 1, "chi_form");

    let z33 = AbGroup::new(vec![3, 3]).unwrap();
    let swapped = z2_triple(z33.clone(), vec![vec![0, 1], vec![1, 0]], &[1], 3);
    let ty = ty_specialize(&swapped).map_err(|e| e.to_string())?;
    ensure!(ty.valid, "Z_3² with swap: {:?}", ty.first_failure());
    let fixed = z2_triple(z33, vec![vec![1, 0], vec![0, 1]], &[1], 3);
    let ty = ty_specialize(&fixed).map_err(|e| e.to_string())?;
    ensure!(
        ty.first_failure() == Some("t_star_xi_inverse"),
        "Z_3² with T = 1: {:?}",
        ty.first_failure()
    );
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("axiom soundness and tau mutations", axiom_soundness),
        ("structural group-likes agree with the oracle", grouplike_oracle_agreement),
        ("coalgebra type and sum rule", coalgebra_shape),
        ("fusion properties of constructed algebras", fusion_properties),
        ("nondegeneracy agrees with simplicity oracle", nondegeneracy_equivalence),
        ("triple round trip and rejections", round_trip),
        ("dimension 24 with A4 group-likes", a4_existence),
        ("square-free obstruction", square_free_obstruction),
        ("normality criteria", normality),
        ("Tambara-Yamagami specialization", tambara),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
