use std::collections::BTreeMap;

use super::structure::{BicrossedHopf, RootSums};
use crate::exactarith::CycloNum;
use crate::groups::CheckReport;

/// A finite-dimensional algebra whose structure constants are sums of
/// roots of unity: `f_i f_j = Σ ζ_N^c f_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructAlgebra {
    pub dim: usize,
    pub modulus: u32,
    /// Indexed `i·dim + j`, terms `(k, c)` sorted.
    pub mult: Vec<Vec<(u32, u32)>>,
    /// The unit as a sum of basis elements.
    pub unit: Vec<usize>,
}

/// `H*` on the dual basis `f_i` of `e_i`: the product transposes the
/// comultiplication of `H`, the unit is `ε`.
pub fn dual_algebra(h: &BicrossedHopf) -> StructAlgebra {
    let dim = h.dim();
    let mut mult = vec![Vec::new(); dim * dim];
    for k in 0..dim {
        for (i, j, c) in h.comult_basis(k) {
            mult[i * dim + j].push((k as u32, c));
        }
    }
    for terms in &mut mult {
        terms.sort_unstable();
    }
    StructAlgebra {
        dim,
        modulus: h.modulus(),
        mult,
        unit: (0..dim).filter(|&k| h.counit_basis(k)).collect(),
    }
}

impl StructAlgebra {
    pub fn terms(&self, i: usize, j: usize) -> &[(u32, u32)] {
        &self.mult[i * self.dim + j]
    }

    /// Exhaustive associativity and unit check.
    pub fn check_associative_unital(&self) -> CheckReport {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut sums = RootSums::new(self.modulus);
                    for &(m, c) in self.terms(i, j) {
                        for &(p, e) in self.terms(m as usize, k) {
                            sums.add(p, c + e, 1);
                        }
                    }
                    for &(m, c) in self.terms(j, k) {
                        for &(p, e) in self.terms(i, m as usize) {
                            sums.add(p, c + e, -1);
                        }
                    }
                    if let Some(p) = sums.first_nonzero() {
                        return CheckReport::fail(format!(
                            "associativity fails at ({i}, {j}, {k}), coordinate {p}"
                        ));
                    }
                }
            }
        }
        for i in 0..d {
            let mut left = RootSums::new(self.modulus);
            let mut right = RootSums::new(self.modulus);
            for &u in &self.unit {
                for &(m, c) in self.terms(u, i) {
                    left.add(m, c, 1);
                }
                for &(m, c) in self.terms(i, u) {
                    right.add(m, c, 1);
                }
            }
            left.add(i as u32, 0, -1);
            right.add(i as u32, 0, -1);
            if left.first_nonzero().is_some() || right.first_nonzero().is_some() {
                return CheckReport::fail(format!("unit fails at basis element {i}"));
            }
        }
        CheckReport::pass()
    }

    /// Transpose of the product: the comultiplication of the dual
    /// coalgebra, `[k] → (i, j, c)` sorted.
    pub fn transpose(&self) -> Vec<Vec<(u32, u32, u32)>> {
        let mut out = vec![Vec::new(); self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for &(k, c) in self.terms(i, j) {
                    out[k as usize].push((i as u32, j as u32, c));
                }
            }
        }
        for v in &mut out {
            v.sort_unstable();
        }
        out
    }

    /// Product of two dense vectors over `Q(ζ_K)`, `N | K`.
    pub fn mul_vec(&self, u: &[CycloNum], v: &[CycloNum]) -> Vec<CycloNum> {
        let k = u.first().map_or(1, CycloNum::modulus);
        let scale = k / self.modulus;
        let mut out: BTreeMap<usize, CycloNum> = BTreeMap::new();
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let uv = ui * vj;
                for &(m, c) in self.terms(i, j) {
                    let r = crate::exactarith::RootExp::new(k, (c * scale) as i64);
                    let t = &uv * &CycloNum::from_root(k, r).expect("modulus");
                    out.entry(m as usize).and_modify(|e| *e += &t).or_insert(t);
                }
            }
        }
        let mut dense = vec![CycloNum::zero(k); self.dim];
        for (m, c) in out {
            dense[m] = c;
        }
        dense
    }
}

/// Comultiplication table of `h` in the same sorted layout as
/// [`StructAlgebra::transpose`].
pub fn comult_table(h: &BicrossedHopf) -> Vec<Vec<(u32, u32, u32)>> {
    (0..h.dim())
        .map(|k| {
            let mut v: Vec<(u32, u32, u32)> = h
                .comult_basis(k)
                .map(|(i, j, c)| (i as u32, j as u32, c))
                .collect();
            v.sort_unstable();
            v
        })
        .collect()
}
