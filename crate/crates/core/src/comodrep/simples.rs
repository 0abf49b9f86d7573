use serde::{Deserialize, Serialize};

use super::monomial::MonomialMatrix;
use super::twisted::twisted_irreps;
use crate::bicrossed::{dual_algebra, BicrossedHopf, HVec, RootSums};
use crate::error::{HopfError, Result};
use crate::exactarith::{CycloNum, RootExp};
use crate::groups::CheckReport;

/// Size guard for the general Clifford induction (orbits of length > 1).
pub const CLIFFORD_DIM_LIMIT: usize = 32;

/// A simple comodule of `H`, given as a module over `H*`: `matrices[i]` is
/// the action of the dual basis element `f_i` (dual to `e_s # x` at
/// index `i`), over `Q(ζ_K)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleComodule {
    /// Orbit representative `x ∈ F` under `▷`.
    pub orbit_rep: usize,
    pub orbit: Vec<usize>,
    /// Stabilizer of `orbit_rep` in `A`.
    pub stabilizer: Vec<usize>,
    /// Index of the irrep of the twisted stabilizer algebra.
    pub label: usize,
    pub dim: usize,
    pub modulus: u32,
    pub matrices: Vec<MonomialMatrix>,
}

impl SimpleComodule {
    /// The character `Σ_i tr ρ(f_i) e_i ∈ H`.
    pub fn character(&self) -> HVec {
        self.matrices.iter().map(MonomialMatrix::trace).collect()
    }

    /// Matrix coefficients `Σ_i ρ(f_i)_{pq} e_i`, spanning the simple
    /// subcoalgebra attached to this comodule.
    pub fn coefficients(&self) -> Vec<HVec> {
        let k = self.modulus;
        let mut out = Vec::with_capacity(self.dim * self.dim);
        for p in 0..self.dim {
            for q in 0..self.dim {
                out.push(
                    self.matrices
                        .iter()
                        .map(|m| match m.entry(p, q) {
                            Some(e) => CycloNum::from_root(k, RootExp::new(k, e as i64)).expect("modulus"),
                            None => CycloNum::zero(k),
                        })
                        .collect(),
                );
            }
        }
        out
    }
}

/// All simple comodules of `H` via Clifford theory for the `▷`-orbits on
/// `F`, with the default size guard.
pub fn clifford_simples(h: &BicrossedHopf) -> Result<Vec<SimpleComodule>> {
    clifford_simples_with_limit(h, CLIFFORD_DIM_LIMIT)
}

/// As [`clifford_simples`]; `max_dim` bounds `dim H` whenever some orbit
/// has more than one point.
pub fn clifford_simples_with_limit(h: &BicrossedHopf, max_dim: usize) -> Result<Vec<SimpleComodule>> {
    let data = &h.data;
    let (a, mp) = (&data.a, &data.mp);
    let ag = &mp.gamma;
    let (na, nf) = (h.a_order(), h.f_order());
    let k = h.field_modulus();
    let n = h.modulus();
    let lift = |c: u32| c * (k / n);
    let characters: Vec<Vec<u32>> = (0..na)
        .map(|i| a.char_values(&a.element(i), k))
        .collect::<Result<_>>()?;

    let mut seen = vec![false; nf];
    let mut out = Vec::new();
    for x0 in 0..nf {
        if seen[x0] {
            continue;
        }
        // orbit and transversal c_z with c_z ▷ x0 = z
        let mut orbit = Vec::new();
        let mut transversal = vec![usize::MAX; nf];
        for s in 0..na {
            let z = mp.right(s, x0);
            if transversal[z] == usize::MAX {
                transversal[z] = s;
                orbit.push(z);
            }
        }
        orbit.sort_unstable();
        for &z in &orbit {
            seen[z] = true;
        }
        if orbit.len() > 1 && h.dim() > max_dim {
            return Err(HopfError::LimitExceeded {
                what: "dimension for Clifford induction over a nontrivial orbit",
                actual: h.dim(),
                limit: max_dim,
            });
        }
        let pos = |z: usize| orbit.binary_search(&z).expect("orbit member");
        let stab: Vec<usize> = (0..na).filter(|&s| mp.right(s, x0) == x0).collect();
        let stab_pos = |s: usize| stab.binary_search(&s).expect("stabilizer member");
        let alpha = data.tau.restrict(x0, ag, &stab)?;
        let restricted: Vec<Vec<u32>> = characters
            .iter()
            .map(|chi| stab.iter().map(|&s| chi[s]).collect())
            .collect();
        let irreps = twisted_irreps(&alpha, &restricted, k)?;

        for (label, w) in irreps.irreps.iter().enumerate() {
            let dw = w.dim;
            let dim = orbit.len() * dw;
            let mut matrices = vec![MonomialMatrix::zero(dim, k); h.dim()];
            for s in 0..na {
                for &y in &orbit {
                    let z2 = mp.right(s, y);
                    let (cy, cz2) = (transversal[y], transversal[z2]);
                    let hh = ag.mul(ag.inv(cz2), ag.mul(s, cy));
                    let rho = &w.matrices[stab_pos(hh)];
                    let scale = lift(data.tau.exp(x0, s, cy)) + k - lift(data.tau.exp(x0, cz2, hh));
                    let m = &mut matrices[h.index(s, y)];
                    for wi in 0..dw {
                        let (wj, e) = rho.cols[wi].expect("twisted irreps are invertible");
                        m.cols[pos(y) * dw + wi] =
                            Some(((pos(z2) * dw) as u32 + wj, (scale + e) % k));
                    }
                }
            }
            out.push(SimpleComodule {
                orbit_rep: x0,
                orbit: orbit.clone(),
                stabilizer: stab.clone(),
                label,
                dim,
                modulus: k,
                matrices,
            });
        }
    }
    let total: usize = out.iter().map(|s| s.dim * s.dim).sum();
    if total != h.dim() {
        return Err(HopfError::Consistency(format!(
            "simple comodules give Σ dim² = {total}, dim H = {}",
            h.dim()
        )));
    }
    Ok(out)
}

/// Exhaustive check that `f_i ↦ matrices[i]` is a unital representation
/// of `H*`.
pub fn check_comodule(h: &BicrossedHopf, v: &SimpleComodule) -> CheckReport {
    let dual = dual_algebra(h);
    let k = v.modulus;
    let lift = k / dual.modulus;
    let dim = h.dim();
    let mut unit = RootSums::new(k);
    for &u in &dual.unit {
        for (c, entry) in v.matrices[u].cols.iter().enumerate() {
            if let Some((r, e)) = *entry {
                unit.add((r as usize, c), e, 1);
            }
        }
    }
    for c in 0..v.dim {
        unit.add((c, c), 0, -1);
    }
    if let Some(pos) = unit.first_nonzero() {
        return CheckReport::fail(format!("unit does not act as identity at entry {pos:?}"));
    }
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = RootSums::new(k);
            let prod = v.matrices[i].compose(&v.matrices[j]);
            for (c, entry) in prod.cols.iter().enumerate() {
                if let Some((r, e)) = *entry {
                    acc.add((r as usize, c), e, 1);
                }
            }
            for &(m, e0) in dual.terms(i, j) {
                for (c, entry) in v.matrices[m as usize].cols.iter().enumerate() {
                    if let Some((r, e)) = *entry {
                        acc.add((r as usize, c), (e + e0 * lift) % k, -1);
                    }
                }
            }
            if let Some(pos) = acc.first_nonzero() {
                return CheckReport::fail(format!(
                    "ρ(f_{i})ρ(f_{j}) differs from ρ(f_{i} f_{j}) at entry {pos:?}"
                ));
            }
        }
    }
    CheckReport::pass()
}
