//! 2-cocycles: plain group cocycles, the `(σ, τ)` tables of an extension,
//! coboundary solving, alternating forms and non-degeneracy.

mod forms;
mod oracle;
mod tables;

pub use forms::{
    alternating_form, canonical_cocycle, class_coordinates, is_nondegenerate, radical, Bichar,
};
pub use oracle::{twisted_algebra_simple_oracle, ORACLE_ORDER_LIMIT};
pub use tables::{check_sigma_cocycle, check_tau_cocycle, compute_f0, fixed_points, SigmaTable, TauTable};

use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};
use crate::exactarith::{diagonalize, solve_diagonalized, RootExp};
use crate::groups::{CheckReport, FinGroup};

/// A function `G × G → μ_N` stored as exponents of `ζ_N`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cocycle {
    pub group: FinGroup,
    pub modulus: u32,
    pub values: Vec<u32>,
}

impl Cocycle {
    pub fn new(group: FinGroup, modulus: u32, values: Vec<u32>) -> Result<Cocycle> {
        let n = group.order();
        if values.len() != n * n {
            return Err(HopfError::Dimension(format!(
                "cocycle table has {} entries, expected {}",
                values.len(),
                n * n
            )));
        }
        if modulus == 0 {
            return Err(HopfError::Precondition("modulus must be positive".into()));
        }
        let values = values.into_iter().map(|v| v % modulus).collect();
        Ok(Cocycle {
            group,
            modulus,
            values,
        })
    }

    pub fn trivial(group: FinGroup, modulus: u32) -> Cocycle {
        let n = group.order();
        Cocycle {
            group,
            modulus,
            values: vec![0; n * n],
        }
    }

    /// Build from a function returning exponents of `ζ_N`.
    pub fn from_fn(group: FinGroup, modulus: u32, f: impl Fn(usize, usize) -> i64) -> Cocycle {
        let n = group.order();
        let values = (0..n * n)
            .map(|i| f(i / n, i % n).rem_euclid(modulus as i64) as u32)
            .collect();
        Cocycle {
            group,
            modulus,
            values,
        }
    }

    /// The coboundary `dγ(s, t) = γ(s)γ(t)γ(st)⁻¹`.
    pub fn coboundary(group: FinGroup, modulus: u32, gamma: &[u32]) -> Cocycle {
        let g = group.clone();
        Cocycle::from_fn(group, modulus, |s, t| {
            gamma[s] as i64 + gamma[t] as i64 - gamma[g.mul(s, t)] as i64
        })
    }

    #[inline]
    pub fn exp(&self, s: usize, t: usize) -> u32 {
        self.values[s * self.group.order() + t]
    }

    pub fn get(&self, s: usize, t: usize) -> RootExp {
        RootExp::new(self.modulus, self.exp(s, t) as i64)
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_normalized(&self) -> bool {
        let e = self.group.identity();
        (0..self.order()).all(|s| self.exp(s, e) == 0 && self.exp(e, s) == 0)
    }

    /// Same values as powers of `ζ_M`.
    pub fn embed(&self, m: u32) -> Result<Cocycle> {
        if m == 0 || !m.is_multiple_of(self.modulus) {
            return Err(HopfError::NotADivisor {
                from: self.modulus,
                to: m,
            });
        }
        let k = m / self.modulus;
        Ok(Cocycle {
            group: self.group.clone(),
            modulus: m,
            values: self.values.iter().map(|&v| v * k).collect(),
        })
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Cocycle) -> Result<Cocycle> {
        if self.modulus != other.modulus {
            return Err(HopfError::ModulusMismatch(self.modulus, other.modulus));
        }
        if self.group != other.group {
            return Err(HopfError::Precondition("cocycles on different groups".into()));
        }
        let n = self.modulus;
        Ok(Cocycle {
            group: self.group.clone(),
            modulus: n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| (a + b) % n)
                .collect(),
        })
    }

    pub fn inverse(&self) -> Cocycle {
        let n = self.modulus;
        Cocycle {
            group: self.group.clone(),
            modulus: n,
            values: self.values.iter().map(|&a| (n - a) % n).collect(),
        }
    }

    /// `α(s,t)α(st,u) = α(t,u)α(s,tu)` for all triples.
    pub fn check(&self) -> CheckReport {
        let g = &self.group;
        let n = g.order();
        let m = self.modulus;
        for s in 0..n {
            for t in 0..n {
                let st = g.mul(s, t);
                for u in 0..n {
                    let lhs = self.exp(s, t) + self.exp(st, u);
                    let rhs = self.exp(t, u) + self.exp(s, g.mul(t, u));
                    if lhs % m != rhs % m {
                        return CheckReport::fail(format!("2-cocycle identity fails at ({s}, {t}, {u})"));
                    }
                }
            }
        }
        CheckReport::pass()
    }
}

/// Solve `dγ = α` for `γ : G → μ_N` (`N` = the cocycle's modulus).
///
/// Returns `None` when `α` is not a coboundary of a `μ_N`-valued function.
/// The returned `γ` has `γ(e) = α(e, e)`.
pub fn coboundary_solve(alpha: &Cocycle) -> Option<Vec<u32>> {
    let g = &alpha.group;
    let n = g.order();
    let m = alpha.modulus as u64;
    let rows = (0..n).flat_map(|s| {
        (0..n).map(move |t| {
            let mut row = vec![0u64; n + 1];
            row[s] += 1;
            row[t] += 1;
            let st = g.mul(s, t);
            row[st] = (row[st] + m - 1) % m;
            row[n] = alpha.exp(s, t) as u64;
            row.iter_mut().for_each(|v| *v %= m);
            row
        })
    });
    let sol = solve_diagonalized(&diagonalize(rows, n, 1, m));
    sol.particular.map(|p| p.into_iter().map(|v| v as u32).collect())
}

/// Restrict a cocycle to a subgroup given by its members; element `i` of
/// the result is `members[i]`.
pub fn restrict(alpha: &Cocycle, members: &[usize]) -> Result<Cocycle> {
    let sub = alpha.group.subgroup(members)?;
    let k = members.len();
    let values = (0..k * k)
        .map(|i| alpha.exp(members[i / k], members[i % k]))
        .collect();
    Ok(Cocycle {
        group: sub,
        modulus: alpha.modulus,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::AbGroup;
    use proptest::prelude::*;

    pub(crate) fn v4() -> AbGroup {
        AbGroup::new(vec![2, 2]).unwrap()
    }

    /// `(−1)^{s_1 t_2}` on `Z_2 × Z_2`, valued in `μ_N`.
    pub(crate) fn kp(n: u32) -> Cocycle {
        let a = v4();
        Cocycle::from_fn(a.to_fingroup(), n, |s, t| {
            let (x, y) = (a.element(s), a.element(t));
            (x[0] * y[1]) as i64 * (n / 2) as i64
        })
    }

    #[test]
    fn trivial_cocycle_is_a_coboundary() {
        let c = Cocycle::trivial(v4().to_fingroup(), 4);
        assert!(c.check().passed);
        let gamma = coboundary_solve(&c).unwrap();
        assert_eq!(Cocycle::coboundary(c.group.clone(), 4, &gamma), c);
    }

    #[test]
    fn kp_cocycle_is_not_a_coboundary() {
        let c = kp(4);
        assert!(c.check().passed);
        assert!(c.is_normalized());
        assert_eq!(coboundary_solve(&c), None);
        // exhaustive: no γ with values in μ_4 works
        let g = c.group.clone();
        for code in 0..256u32 {
            let gamma: Vec<u32> = (0..4).map(|i| (code >> (2 * i)) & 3).collect();
            assert_ne!(Cocycle::coboundary(g.clone(), 4, &gamma), c);
        }
    }

    #[test]
    fn corrupted_entry_fails_check() {
        let mut c = kp(2);
        c.values[5] ^= 1;
        let r = c.check();
        assert!(!r.passed && r.witness.is_some());
    }

    #[test]
    fn coboundary_needs_enough_roots() {
        // on Z_2, α(1,1) = −1 is dγ for γ(1) = i but not for μ_2-valued γ
        let z2 = AbGroup::cyclic(2).to_fingroup();
        let a = Cocycle::from_fn(z2, 2, |s, t| (s * t) as i64);
        assert!(coboundary_solve(&a).is_none());
        assert!(coboundary_solve(&a.embed(4).unwrap()).is_some());
    }

    proptest! {
        #[test]
        fn coboundary_round_trip(
            inv in prop_oneof![Just(vec![6u32]), Just(vec![2, 4]), Just(vec![2, 2, 2]), Just(vec![3, 3])],
            seed in proptest::collection::vec(0u32..1000, 16),
        ) {
            let a = AbGroup::new(inv).unwrap();
            let n = 12u32;
            let g = a.to_fingroup();
            let mut gamma: Vec<u32> = (0..a.order()).map(|i| seed[i % 16] % n).collect();
            gamma[0] = 0;
            let c = Cocycle::coboundary(g.clone(), n, &gamma);
            prop_assert!(c.check().passed);
            let back = coboundary_solve(&c).expect("coboundary");
            prop_assert_eq!(Cocycle::coboundary(g, n, &back), c);
        }
    }
}
