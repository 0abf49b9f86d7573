use serde::{Deserialize, Serialize};

use super::Cocycle;
use crate::error::{HopfError, Result};
use crate::exactarith::RootExp;
use crate::groups::{AbGroup, CheckReport, FinGroup};

/// A bicharacter `G × G → μ_N` on an abelian group, as exponents of `ζ_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bichar {
    pub group: FinGroup,
    pub modulus: u32,
    pub values: Vec<u32>,
}

impl Bichar {
    #[inline]
    pub fn exp(&self, s: usize, t: usize) -> u32 {
        self.values[s * self.group.order() + t]
    }

    pub fn get(&self, s: usize, t: usize) -> RootExp {
        RootExp::new(self.modulus, self.exp(s, t) as i64)
    }

    /// Multiplicativity in each argument.
    pub fn check_bimultiplicative(&self) -> CheckReport {
        let g = &self.group;
        let n = g.order();
        let m = self.modulus;
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    if (self.exp(g.mul(s, t), u)) % m != (self.exp(s, u) + self.exp(t, u)) % m {
                        return CheckReport::fail(format!("b(st, u) ≠ b(s, u)b(t, u) at ({s}, {t}, {u})"));
                    }
                    if (self.exp(s, g.mul(t, u))) % m != (self.exp(s, t) + self.exp(s, u)) % m {
                        return CheckReport::fail(format!("b(s, tu) ≠ b(s, t)b(s, u) at ({s}, {t}, {u})"));
                    }
                }
            }
        }
        CheckReport::pass()
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.group.order()).all(|s| self.exp(s, s) == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|s| (0..s).all(|t| self.exp(s, t) == self.exp(t, s)))
    }

    /// `{ s : b(s, t) = 1 for all t }`.
    pub fn radical(&self) -> Vec<usize> {
        radical(self)
    }
}

/// `b(s, t) = α(s, t)·α(t, s)⁻¹`, checked to be an alternating
/// bicharacter.
pub fn alternating_form(alpha: &Cocycle) -> Result<Bichar> {
    let b = alternating_form_unchecked(alpha);
    let report = b.check_bimultiplicative();
    if !report.passed {
        return Err(HopfError::NotACocycle(report.witness.unwrap_or_default()));
    }
    if !b.group.is_abelian() {
        return Err(HopfError::Precondition("alternating form needs an abelian group".into()));
    }
    Ok(b)
}

fn alternating_form_unchecked(alpha: &Cocycle) -> Bichar {
    let n = alpha.order();
    let m = alpha.modulus;
    let values = (0..n * n)
        .map(|i| {
            let (s, t) = (i / n, i % n);
            (alpha.exp(s, t) + m - alpha.exp(t, s)) % m
        })
        .collect();
    Bichar {
        group: alpha.group.clone(),
        modulus: m,
        values,
    }
}

/// Sorted members of the radical of `b`.
pub fn radical(b: &Bichar) -> Vec<usize> {
    let n = b.group.order();
    (0..n).filter(|&s| (0..n).all(|t| b.exp(s, t) == 0)).collect()
}

/// Whether the alternating form of `alpha` has trivial radical.
pub fn is_nondegenerate(alpha: &Cocycle) -> bool {
    radical(&alternating_form_unchecked(alpha)).len() == 1
}

/// Coordinates `k_ij` (`i < j`, lexicographic) of the class of `alpha`:
/// `b(e_i, e_j) = ζ_{m_i}^{k_ij}` where `b` is the alternating form and
/// `e_i` the standard generators of `a`. `alpha` must live on
/// `a.to_fingroup()`.
pub fn class_coordinates(a: &AbGroup, alpha: &Cocycle) -> Vec<u32> {
    let inv = a.invariants();
    let n = alpha.modulus as u64;
    let mut out = Vec::new();
    for i in 0..a.rank() {
        for j in i + 1..a.rank() {
            let (gi, gj) = (a.generator(i), a.generator(j));
            let e = (alpha.exp(gi, gj) as u64 + n - alpha.exp(gj, gi) as u64) % n;
            let k = e * inv[i] as u64;
            debug_assert_eq!(k % n, 0, "alternating form value has order dividing m_i");
            out.push(((k / n) % inv[i] as u64) as u32);
        }
    }
    out
}

/// The bimultiplicative representative
/// `β_k(s, t) = Π_{i<j} ζ_{m_i}^{k_ij s_i t_j}` of the class with
/// coordinates `k`, valued in `μ_N`.
pub fn canonical_cocycle(a: &AbGroup, k: &[u32], n: u32) -> Result<Cocycle> {
    let inv = a.invariants();
    let r = a.rank();
    if k.len() != r * r.saturating_sub(1) / 2 {
        return Err(HopfError::Dimension(format!(
            "{} class coordinates for rank {r}",
            k.len()
        )));
    }
    if !n.is_multiple_of(a.exponent()) {
        return Err(HopfError::NotADivisor {
            from: a.exponent(),
            to: n,
        });
    }
    let elems: Vec<Vec<u32>> = (0..a.order()).map(|s| a.element(s)).collect();
    Ok(Cocycle::from_fn(a.to_fingroup(), n, |s, t| {
        let mut acc = 0i64;
        let mut idx = 0;
        for i in 0..r {
            for j in i + 1..r {
                acc += k[idx] as i64 * elems[s][i] as i64 * elems[t][j] as i64 * (n / inv[i]) as i64;
                idx += 1;
            }
        }
        acc
    }))
}
