use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::FinGroup;
use crate::error::{HopfError, Result};

/// Matched pair `(Γ, F)` with `◁ : Γ×F → Γ` and `▷ : Γ×F → F`.
///
/// Convention: inside the factorized group `L = FΓ`, a product `s·x`
/// (`s ∈ Γ`, `x ∈ F`) is rewritten as `(s ▷ x)·(s ◁ x)`. Then `◁` is a
/// right action of `F` on `Γ` and `▷` a left action of `Γ` on `F`.
/// Tables are indexed `[s][x]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedPair {
    pub gamma: FinGroup,
    pub f: FinGroup,
    pub left: Vec<Vec<u32>>,
    pub right: Vec<Vec<u32>>,
}

/// Outcome of an exhaustive check; `witness` names the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn pass() -> CheckReport {
        CheckReport {
            passed: true,
            witness: None,
        }
    }

    pub fn fail(witness: impl Into<String>) -> CheckReport {
        CheckReport {
            passed: false,
            witness: Some(witness.into()),
        }
    }
}

impl MatchedPair {
    pub fn trivial(gamma: FinGroup, f: FinGroup) -> MatchedPair {
        let left = (0..gamma.order())
            .map(|s| vec![s as u32; f.order()])
            .collect();
        let right = (0..gamma.order())
            .map(|_| (0..f.order() as u32).collect())
            .collect();
        MatchedPair {
            gamma,
            f,
            left,
            right,
        }
    }

    /// `s ◁ x`.
    #[inline]
    pub fn left(&self, s: usize, x: usize) -> usize {
        self.left[s][x] as usize
    }

    /// `s ▷ x`.
    #[inline]
    pub fn right(&self, s: usize, x: usize) -> usize {
        self.right[s][x] as usize
    }

    pub fn right_is_trivial(&self) -> bool {
        self.right
            .iter()
            .all(|row| row.iter().enumerate().all(|(x, &y)| x == y as usize))
    }

    pub fn left_is_trivial(&self) -> bool {
        self.left
            .iter()
            .enumerate()
            .all(|(s, row)| row.iter().all(|&t| t as usize == s))
    }

    fn check_shapes(&self) -> Result<()> {
        let (ng, nf) = (self.gamma.order(), self.f.order());
        let ok = |t: &Vec<Vec<u32>>, bound: usize| {
            t.len() == ng && t.iter().all(|r| r.len() == nf && r.iter().all(|&v| (v as usize) < bound))
        };
        if !ok(&self.left, ng) || !ok(&self.right, nf) {
            return Err(HopfError::InvalidTable(format!(
                "action tables must be {ng}×{nf} with entries in range"
            )));
        }
        Ok(())
    }

    /// Product on pairs `(x, s)` standing for `x·s ∈ L`:
    /// `(x, s)(y, t) = (x·(s▷y), (s◁y)·t)`.
    pub fn pair_mul(&self, (x, s): (usize, usize), (y, t): (usize, usize)) -> (usize, usize) {
        (
            self.f.mul(x, self.right(s, y)),
            self.gamma.mul(self.left(s, y), t),
        )
    }

    /// Exhaustively check that the pair multiplication is a group law.
    pub fn verify(&self) -> CheckReport {
        if let Err(e) = self.check_shapes() {
            return CheckReport::fail(e.to_string());
        }
        let (ng, nf) = (self.gamma.order(), self.f.order());
        let pairs: Vec<(usize, usize)> = (0..nf)
            .flat_map(|x| (0..ng).map(move |s| (x, s)))
            .collect();
        let one = (self.f.identity(), self.gamma.identity());
        for &p in &pairs {
            if self.pair_mul(one, p) != p || self.pair_mul(p, one) != p {
                return CheckReport::fail(format!("identity fails at (x={}, s={})", p.0, p.1));
            }
        }
        for &p in &pairs {
            for &q in &pairs {
                let pq = self.pair_mul(p, q);
                for &r in &pairs {
                    if self.pair_mul(pq, r) != self.pair_mul(p, self.pair_mul(q, r)) {
                        return CheckReport::fail(format!(
                            "associativity fails at ({:?}, {:?}, {:?})",
                            p, q, r
                        ));
                    }
                }
            }
        }
        for &p in &pairs {
            if !pairs.iter().any(|&q| self.pair_mul(p, q) == one) {
                return CheckReport::fail(format!("no inverse for (x={}, s={})", p.0, p.1));
            }
        }
        CheckReport::pass()
    }

    /// The factorized group `L` on pairs `(x, s)`, index `x·|Γ| + s`.
    pub fn double_cross(&self) -> Result<FinGroup> {
        let report = self.verify();
        if !report.passed {
            return Err(HopfError::InvalidAction(
                report.witness.unwrap_or_default(),
            ));
        }
        let ng = self.gamma.order();
        let n = ng * self.f.order();
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let (x, s) = self.pair_mul((a / ng, a % ng), (b / ng, b % ng));
                        (x * ng + s) as u32
                    })
                    .collect()
            })
            .collect();
        FinGroup::from_table(rows)
    }

    /// Matched pair of an exact factorization `L = FΓ`.
    ///
    /// Element `i` of the returned `Γ` (resp. `F`) is `gamma_elems[i]`
    /// (resp. `f_elems[i]`) of `L`.
    pub fn from_factorization(l: &FinGroup, gamma_elems: &[usize], f_elems: &[usize]) -> Result<MatchedPair> {
        let gamma = l
            .subgroup(gamma_elems)
            .map_err(|_| HopfError::NotASubgroup("Γ subset".into()))?;
        let f = l
            .subgroup(f_elems)
            .map_err(|_| HopfError::NotASubgroup("F subset".into()))?;
        let shared = gamma_elems.iter().filter(|a| f_elems.contains(a)).count();
        if shared != 1 {
            return Err(HopfError::NotAFactorization(format!(
                "Γ ∩ F has {shared} elements"
            )));
        }
        if gamma_elems.len() * f_elems.len() != l.order() {
            return Err(HopfError::NotAFactorization(format!(
                "|Γ|·|F| = {} but |L| = {}",
                gamma_elems.len() * f_elems.len(),
                l.order()
            )));
        }
        let mut decomp: HashMap<usize, (usize, usize)> = HashMap::new();
        for (xi, &x) in f_elems.iter().enumerate() {
            for (si, &s) in gamma_elems.iter().enumerate() {
                if decomp.insert(l.mul(x, s), (xi, si)).is_some() {
                    return Err(HopfError::NotAFactorization("FΓ products are not distinct".into()));
                }
            }
        }
        let (ng, nf) = (gamma.order(), f.order());
        let mut left = vec![vec![0u32; nf]; ng];
        let mut right = vec![vec![0u32; nf]; ng];
        for (si, &s) in gamma_elems.iter().enumerate() {
            for (xi, &x) in f_elems.iter().enumerate() {
                let (y, t) = decomp[&l.mul(s, x)];
                left[si][xi] = t as u32;
                right[si][xi] = y as u32;
            }
        }
        Ok(MatchedPair {
            gamma,
            f,
            left,
            right,
        })
    }
}
