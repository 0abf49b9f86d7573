use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::characters::{CharacterRing, Side};
use crate::bicrossed::VerifiedHopf;
use crate::error::{HopfError, Result};

/// Outcome of checking the Tambara–Yamagami fusion rules on the
/// characters of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TyReport {
    pub passed: bool,
    pub failures: Vec<String>,
    pub grouplike_order: usize,
    /// Common degree of the non-invertible simples.
    pub degree: Option<usize>,
    /// Character indices of the non-invertible simples.
    pub noninvertible: Vec<usize>,
    /// Group-like indices of the common stabilizer `Γ`.
    pub common_stabilizer: Vec<usize>,
    /// Invariant factors of `Γ` when abelian.
    pub stabilizer_invariants: Option<Vec<u32>>,
}

/// Whether an abelian group with these invariant factors is of the form
/// `B × B`, i.e. carries a nondegenerate 2-cocycle.
pub fn admits_nondegenerate_cocycle(invariants: &[u32]) -> bool {
    let mut counts = std::collections::BTreeMap::new();
    for &m in invariants {
        let mut m = m;
        let mut p = 2;
        while m > 1 {
            let mut q = 1;
            while m % p == 0 {
                m /= p;
                q *= p;
            }
            if q > 1 {
                *counts.entry(q).or_insert(0usize) += 1;
            }
            p += 1;
        }
    }
    counts.values().all(|c| c % 2 == 0)
}

/// Check the fusion rules expected when `[H : kG(H)] = 2`: products of
/// group-likes follow `G(H)`; `G(H)` permutes the non-invertible simples
/// transitively from both sides with common stabilizer `Γ` of order `d²`,
/// abelian, normal and carrying a nondegenerate cocycle; `χχ* = Σ_{s∈Γ} s`;
/// and the product of two non-invertible simples is a sum over a coset
/// of `Γ`.
pub fn verify_ty_rules(h: &VerifiedHopf, ring: &CharacterRing) -> Result<TyReport> {
    let g = &ring.grouplikes;
    if h.dim() != 2 * g.order() {
        return Err(HopfError::Precondition(format!(
            "[H : kG(H)] = {}/{} is not 2",
            h.dim(),
            g.order()
        )));
    }
    let mut failures = Vec::new();
    let noninv: Vec<usize> = (0..ring.len()).filter(|&i| ring.degrees[i] > 1).collect();
    let mut report = TyReport {
        passed: false,
        failures: Vec::new(),
        grouplike_order: g.order(),
        degree: None,
        noninvertible: noninv.clone(),
        common_stabilizer: Vec::new(),
        stabilizer_invariants: None,
    };
    let Some(&x0) = noninv.first() else {
        report.failures.push("no non-invertible simple comodule".into());
        return Ok(report);
    };
    let d = ring.degrees[x0];
    report.degree = Some(d);
    if noninv.iter().any(|&x| ring.degrees[x] != d) {
        failures.push("non-invertible simples have different degrees".into());
    }

    for a in 0..g.order() {
        for b in 0..g.order() {
            let p = h.mul_vec(&ring.characters[ring.grouplike_chars[a]], &ring.characters[ring.grouplike_chars[b]]);
            if ring.index_of(&p) != Some(ring.grouplike_chars[g.table.mul(a, b)]) {
                failures.push(format!("group-likes {a}·{b} do not multiply as in G(H)"));
            }
        }
    }

    let gamma = ring.stabilizer(h, x0, Side::Left);
    for &x in &noninv {
        for side in [Side::Left, Side::Right] {
            if ring.stabilizer(h, x, side) != gamma {
                failures.push(format!("{side:?} stabilizer of χ_{x} differs from that of χ_{x0}"));
            }
        }
    }
    if gamma.len() != d * d {
        failures.push(format!("|Γ| = {} but d² = {}", gamma.len(), d * d));
    }
    if !g.table.is_normal(&gamma) {
        failures.push("Γ is not normal in G(H)".into());
    }
    let inv = g.table.subgroup(&gamma).ok().and_then(|s| s.abelian_invariants());
    match &inv {
        None => failures.push("Γ is not abelian".into()),
        Some(m) if !admits_nondegenerate_cocycle(m) => {
            failures.push(format!("Γ ≅ {m:?} carries no nondegenerate 2-cocycle"))
        }
        _ => {}
    }

    let xset: BTreeSet<usize> = noninv.iter().copied().collect();
    let mut orbit = BTreeSet::new();
    for a in 0..g.order() {
        let gv = &ring.characters[ring.grouplike_chars[a]];
        for &x in &noninv {
            for p in [h.mul_vec(gv, &ring.characters[x]), h.mul_vec(&ring.characters[x], gv)] {
                if !ring.index_of(&p).is_some_and(|i| xset.contains(&i)) {
                    failures.push(format!("g_{a} χ_{x} or χ_{x} g_{a} is not a non-invertible simple"));
                }
            }
        }
        if let Some(i) = ring.index_of(&h.mul_vec(gv, &ring.characters[x0])) {
            orbit.insert(i);
        }
    }
    if orbit != xset {
        failures.push("G(H) does not act transitively on the non-invertible simples".into());
    }

    let sum_gamma = ring.grouplike_sum(h, &gamma);
    for &x in &noninv {
        let p = h.mul_vec(&ring.characters[x], &ring.characters[ring.duals[x]]);
        if p != sum_gamma {
            failures.push(format!("χ_{x} χ_{x}* is not the sum over Γ"));
        }
        for &y in &noninv {
            let m = ring.product(h, x, y)?;
            let constituents: Vec<usize> = (0..m.len()).filter(|&k| m[k] > 0).collect();
            let linear = constituents.iter().all(|&k| ring.degrees[k] == 1 && m[k] == 1);
            let members: BTreeSet<usize> = constituents
                .iter()
                .filter_map(|&k| ring.grouplike_chars.iter().position(|&c| c == k))
                .collect();
            let coset = members.first().map(|&a| {
                gamma.iter().map(|&s| g.table.mul(a, s)).collect::<BTreeSet<usize>>()
            });
            if !linear || coset.as_ref() != Some(&members) {
                failures.push(format!("χ_{x} χ_{y} is not a sum over a coset of Γ"));
            }
        }
    }

    failures.dedup();
    report.passed = failures.is_empty();
    report.failures = failures;
    report.common_stabilizer = gamma;
    report.stabilizer_invariants = inv;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nondegenerate_cocycle_criterion() {
        assert!(admits_nondegenerate_cocycle(&[]));
        assert!(admits_nondegenerate_cocycle(&[2, 2]));
        assert!(admits_nondegenerate_cocycle(&[6, 6]));
        assert!(admits_nondegenerate_cocycle(&[2, 2, 4, 4]));
        assert!(!admits_nondegenerate_cocycle(&[4]));
        assert!(!admits_nondegenerate_cocycle(&[2, 4]));
        assert!(!admits_nondegenerate_cocycle(&[2, 2, 2]));
    }
}
