use serde::{Deserialize, Serialize};

use super::characters::{apply_antipode, CharacterRing, Side};
use crate::bicrossed::{HVec, VerifiedHopf};
use crate::error::{HopfError, Result};
use crate::exactarith::{CycloNum, EchelonSpan};

/// Verdict of a normality test; `witness` names a violating element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityVerdict {
    pub normal: bool,
    pub witness: Option<String>,
}

impl NormalityVerdict {
    fn yes() -> Self {
        NormalityVerdict {
            normal: true,
            witness: None,
        }
    }

    fn no(w: impl Into<String>) -> Self {
        NormalityVerdict {
            normal: false,
            witness: Some(w.into()),
        }
    }
}

fn span_of(vectors: &[HVec]) -> EchelonSpan {
    let mut span = EchelonSpan::new();
    for v in vectors {
        span.insert(v);
    }
    span
}

/// Whether the span of `basis` is a subcoalgebra: every `Δ(a)` lies in
/// `A ⊗ A`, tested on rows and columns of its coefficient matrix.
fn is_subcoalgebra(h: &VerifiedHopf, basis: &[HVec], span: &EchelonSpan) -> Option<usize> {
    let k = basis.first().map_or(1, |v| v.first().map_or(1, CycloNum::modulus));
    let dim = h.dim();
    for (n, a) in basis.iter().enumerate() {
        let delta = h.comult_vec(a);
        for fixed in 0..dim {
            let mut row = vec![CycloNum::zero(k); dim];
            let mut col = vec![CycloNum::zero(k); dim];
            for (&(i, j), c) in &delta {
                if i == fixed {
                    row[j] = c.clone();
                }
                if j == fixed {
                    col[i] = c.clone();
                }
            }
            if !span.contains(&row) || !span.contains(&col) {
                return Some(n);
            }
        }
    }
    None
}

/// Dimension of the subalgebra generated by the given subspaces.
fn generated_subalgebra_dim(h: &VerifiedHopf, generators: &[HVec], k: u32) -> usize {
    let mut span = EchelonSpan::new();
    let mut basis = vec![h.unit_vec(k)];
    span.insert(&basis[0]);
    let mut frontier = 0;
    while frontier < basis.len() && basis.len() < h.dim() {
        let b = basis[frontier].clone();
        frontier += 1;
        for g in generators {
            let p = h.mul_vec(&b, g);
            if span.insert(&p) {
                basis.push(p);
            }
        }
    }
    span.dim()
}

/// Normality of a subalgebra `A ⊆ H` tested on characters: with
/// generators `χ` whose simple subcoalgebras generate `H` as an algebra,
/// `A` is normal iff `χ a S(χ) ∈ A` for every generator and every basis
/// element `a` of `A`.
///
/// `subalg` is a basis of `A`, which must be a subcoalgebra; `generators`
/// are indices into the character ring.
pub fn normality_chardual(
    h: &VerifiedHopf,
    ring: &CharacterRing,
    subalg: &[HVec],
    generators: &[usize],
) -> Result<NormalityVerdict> {
    let k = ring.modulus;
    let span = span_of(subalg);
    if let Some(n) = is_subcoalgebra(h, subalg, &span) {
        return Err(HopfError::Precondition(format!(
            "basis vector {n} has a coproduct outside A ⊗ A"
        )));
    }
    let coeffs: Vec<HVec> = generators
        .iter()
        .flat_map(|&g| ring.simples[g].coefficients())
        .collect();
    let generated = generated_subalgebra_dim(h, &coeffs, k);
    if generated != h.dim() {
        return Err(HopfError::Precondition(format!(
            "simple subcoalgebras of the generators span a subalgebra of dimension {generated}, not {}",
            h.dim()
        )));
    }
    for &g in generators {
        let chi = &ring.characters[g];
        let chi_star = apply_antipode(h, chi)?;
        for (n, a) in subalg.iter().enumerate() {
            let v = h.mul_vec(&h.mul_vec(chi, a), &chi_star);
            if !span.contains(&v) {
                return Ok(NormalityVerdict::no(format!(
                    "χ_{g} a_{n} χ_{g}* lies outside the subalgebra"
                )));
            }
        }
    }
    Ok(NormalityVerdict::yes())
}

/// Normality test attached to a single simple character `χ`: holds when
/// `G[χ] = G[χ*]` (left stabilizers), `|G[χ]| = χ(1)²`, and `kG[χ]` is
/// stable under `a ↦ χ a χ*`.
pub fn normality_alternativo(h: &VerifiedHopf, ring: &CharacterRing, i: usize) -> Result<NormalityVerdict> {
    let stab = ring.stabilizer(h, i, Side::Left);
    let stab_dual = ring.stabilizer(h, ring.duals[i], Side::Left);
    if stab != stab_dual {
        return Ok(NormalityVerdict::no(format!("G[χ_{i}] ≠ G[χ_{i}*]")));
    }
    let d = ring.degrees[i];
    if stab.len() != d * d {
        return Ok(NormalityVerdict::no(format!(
            "|G[χ_{i}]| = {} but χ_{i}(1)² = {}",
            stab.len(),
            d * d
        )));
    }
    let basis: Vec<HVec> = stab
        .iter()
        .map(|&g| ring.characters[ring.grouplike_chars[g]].clone())
        .collect();
    let span = span_of(&basis);
    let chi = &ring.characters[i];
    let chi_star = &ring.characters[ring.duals[i]];
    for (n, a) in basis.iter().enumerate() {
        if !span.contains(&h.mul_vec(&h.mul_vec(chi, a), chi_star)) {
            return Ok(NormalityVerdict::no(format!(
                "χ_{i} g χ_{i}* leaves kG[χ_{i}] for g = group-like {}",
                stab[n]
            )));
        }
    }
    Ok(NormalityVerdict::yes())
}
