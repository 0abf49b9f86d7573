use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::monomial::MonomialMatrix;
use crate::cocycle::{alternating_form, coboundary_solve, restrict, Cocycle};
use crate::error::{HopfError, Result};
use crate::groups::CheckReport;

/// An irreducible representation of a twisted group algebra `k_α B`:
/// `u_b ↦ matrices[b]`, with `u_b u_c = α(b, c) u_{bc}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedIrrep {
    pub dim: usize,
    /// Scalar by which `u_r` acts, for `r` in the radical of `α`
    /// (in the order of [`TwistedIrreps::radical`]).
    pub central_character: Vec<u32>,
    pub matrices: Vec<MonomialMatrix>,
}

/// All irreducible representations of `k_α B` for abelian `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedIrreps {
    pub modulus: u32,
    pub radical: Vec<usize>,
    /// Maximal isotropic subgroup used for induction.
    pub lagrangian: Vec<usize>,
    pub irreps: Vec<TwistedIrrep>,
}

/// Irreps of `k_α B` over `Q(ζ_K)`.
///
/// Each irrep is induced from a one-dimensional representation `λ` of a
/// maximal isotropic subgroup `L ⊇ Rad(α)`, where `dλ = α|_L`. Distinct
/// irreps are told apart by how the radical acts. `characters` lists the
/// values of every character of `B` as exponents mod `K`; `K` must be a
/// multiple of `modulus(α) · exp(B)`.
pub fn twisted_irreps(alpha: &Cocycle, characters: &[Vec<u32>], k: u32) -> Result<TwistedIrreps> {
    let group = &alpha.group;
    let n = group.order();
    if !group.is_abelian() {
        return Err(HopfError::Precondition("twisted irreps need an abelian group".into()));
    }
    let alpha = alpha.embed(k)?;
    let form = alternating_form(&alpha)?;
    let radical = form.radical();

    let mut lagr = radical.clone();
    for b in 0..n {
        if !lagr.contains(&b) && lagr.iter().all(|&l| form.exp(b, l) == 0) {
            let mut gens = lagr.clone();
            gens.push(b);
            lagr = group.generated(&gens);
        }
    }
    let gamma = coboundary_solve(&restrict(&alpha, &lagr)?).ok_or_else(|| {
        HopfError::Consistency("cocycle restricted to an isotropic subgroup is not a coboundary".into())
    })?;

    // b = reps[j] · lagr[l]
    let mut reps = Vec::new();
    let mut coset = vec![None; n];
    for b in 0..n {
        if coset[b].is_none() {
            let j = reps.len();
            reps.push(b);
            for (li, &l) in lagr.iter().enumerate() {
                coset[group.mul(b, l)] = Some((j, li));
            }
        }
    }
    let coset: Vec<(usize, usize)> = coset.into_iter().map(|c| c.expect("cosets cover B")).collect();
    let dim = reps.len();

    let mut seen_restrictions = BTreeSet::new();
    let mut seen_central = BTreeSet::new();
    let mut irreps = Vec::new();
    for psi in characters {
        if psi.len() != n {
            return Err(HopfError::Dimension(format!("character has {} values, |B| = {n}", psi.len())));
        }
        let lambda: Vec<u32> = lagr
            .iter()
            .enumerate()
            .map(|(li, &l)| (gamma[li] + psi[l]) % k)
            .collect();
        if !seen_restrictions.insert(lambda.clone()) {
            continue;
        }
        let matrices: Vec<MonomialMatrix> = (0..n)
            .map(|b| {
                let cols = reps
                    .iter()
                    .map(|&r| {
                        let (j, li) = coset[group.mul(b, r)];
                        let e = alpha.exp(b, r) as u64 + (k - alpha.exp(reps[j], lagr[li])) as u64
                            + lambda[li] as u64;
                        Some((j as u32, (e % k as u64) as u32))
                    })
                    .collect();
                MonomialMatrix { modulus: k, cols }
            })
            .collect();
        let central: Option<Vec<u32>> = radical.iter().map(|&r| matrices[r].scalar_exponent()).collect();
        let central = central.ok_or_else(|| HopfError::Consistency("radical does not act by scalars".into()))?;
        if seen_central.insert(central.clone()) {
            irreps.push(TwistedIrrep {
                dim,
                central_character: central,
                matrices,
            });
        }
    }
    if irreps.len() != radical.len() || dim * dim * radical.len() != n {
        return Err(HopfError::Consistency(format!(
            "found {} irreps of dimension {dim} for |B| = {n}, |Rad| = {}",
            irreps.len(),
            radical.len()
        )));
    }
    Ok(TwistedIrreps {
        modulus: k,
        radical,
        lagrangian: lagr,
        irreps,
    })
}

/// Exhaustive check of `ρ(u_b) ρ(u_c) = α(b, c) ρ(u_{bc})`.
pub fn check_twisted_rep(alpha: &Cocycle, rep: &TwistedIrrep) -> CheckReport {
    let Some(m) = rep.matrices.first().map(|m| m.modulus) else {
        return CheckReport::fail("empty representation");
    };
    let Ok(alpha) = alpha.embed(m) else {
        return CheckReport::fail("cocycle modulus does not divide the representation modulus");
    };
    let g = &alpha.group;
    for b in 0..g.order() {
        for c in 0..g.order() {
            let lhs = rep.matrices[b].compose(&rep.matrices[c]);
            let scale = alpha.exp(b, c);
            let mut rhs = rep.matrices[g.mul(b, c)].clone();
            for col in rhs.cols.iter_mut().flatten() {
                col.1 = (col.1 + scale) % m;
            }
            if lhs != rhs {
                return CheckReport::fail(format!("multiplicativity fails at ({b}, {c})"));
            }
        }
    }
    CheckReport::pass()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{canonical_cocycle, Cocycle};
    use crate::groups::AbGroup;

    fn all_characters(a: &AbGroup, k: u32) -> Vec<Vec<u32>> {
        (0..a.order())
            .map(|i| {
                let chi = a.element(i);
                a.char_values(&chi, k).unwrap()
            })
            .collect()
    }

    fn check(a: &AbGroup, alpha: &Cocycle, k: u32) -> TwistedIrreps {
        let irr = twisted_irreps(alpha, &all_characters(a, k), k).unwrap();
        for rep in &irr.irreps {
            assert!(check_twisted_rep(alpha, rep).passed);
        }
        irr
    }

    #[test]
    fn untwisted_group_algebra_has_linear_characters() {
        let a = AbGroup::new(vec![2, 4]).unwrap();
        let alpha = Cocycle::trivial(a.to_fingroup(), 4);
        let irr = check(&a, &alpha, 16);
        assert_eq!(irr.irreps.len(), 8);
        assert!(irr.irreps.iter().all(|r| r.dim == 1));
    }

    #[test]
    fn nondegenerate_cocycle_gives_one_irrep() {
        let a = AbGroup::new(vec![2, 2]).unwrap();
        let alpha = canonical_cocycle(&a, &[1], 2).unwrap();
        let irr = check(&a, &alpha, 4);
        assert_eq!(irr.irreps.len(), 1);
        assert_eq!(irr.irreps[0].dim, 2);

        let z33 = AbGroup::new(vec![3, 3]).unwrap();
        let beta = canonical_cocycle(&z33, &[1], 3).unwrap();
        let irr = check(&z33, &beta, 9);
        assert_eq!((irr.irreps.len(), irr.irreps[0].dim), (1, 3));
    }

    #[test]
    fn degenerate_cocycle_splits_over_radical() {
        // Z2 × Z2 × Z2 with the form pairing only the last two factors
        let a = AbGroup::new(vec![2, 2, 2]).unwrap();
        let alpha = canonical_cocycle(&a, &[0, 0, 1], 2).unwrap();
        let irr = check(&a, &alpha, 4);
        assert_eq!(irr.radical.len(), 2);
        assert_eq!(irr.irreps.len(), 2);
        assert!(irr.irreps.iter().all(|r| r.dim == 2));
        assert_ne!(irr.irreps[0].central_character, irr.irreps[1].central_character);
    }

    #[test]
    fn coboundary_twist_is_equivalent_to_untwisted() {
        let a = AbGroup::new(vec![4]).unwrap();
        let g = a.to_fingroup();
        let alpha = Cocycle::coboundary(g, 4, &[0, 1, 3, 2]);
        let irr = check(&a, &alpha, 16);
        assert_eq!(irr.irreps.len(), 4);
    }
}
