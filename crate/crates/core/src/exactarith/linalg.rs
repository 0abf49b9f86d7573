//! Exact Gaussian elimination over a cyclotomic field.

use super::cyclo::CycloNum;
use crate::error::{HopfError, Result};

pub type CycloMatrix = Vec<Vec<CycloNum>>;

/// Reduced row echelon form in place; returns the pivot columns.
///
/// `ncols` limits pivoting to the leading columns so augmented systems
/// can be reduced without pivoting on the right-hand side.
fn rref(m: &mut [Vec<CycloNum>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("pivot is nonzero");
        for x in m[row].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn field_of(m: &[Vec<CycloNum>], b: Option<&[CycloNum]>) -> Option<u32> {
    m.iter()
        .flat_map(|r| r.first())
        .next()
        .or_else(|| b.and_then(|b| b.first()))
        .map(CycloNum::modulus)
}

/// Solve `M x = b` exactly. `Ok(None)` means the system is inconsistent;
/// underdetermined systems return the solution with free variables zero.
pub fn solve_linear_cyclo(m: &[Vec<CycloNum>], b: &[CycloNum]) -> Result<Option<Vec<CycloNum>>> {
    if m.len() != b.len() {
        return Err(HopfError::Dimension(format!(
            "{} rows but right-hand side of length {}",
            m.len(),
            b.len()
        )));
    }
    let ncols = m.first().map_or(0, Vec::len);
    if m.iter().any(|r| r.len() != ncols) {
        return Err(HopfError::Dimension("ragged matrix".into()));
    }
    let Some(n) = field_of(m, Some(b)) else {
        return Ok(Some(vec![]));
    };
    let mut aug: CycloMatrix = m
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols);
    if aug[pivots.len()..].iter().any(|r| !r[ncols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![CycloNum::zero(n); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Ok(Some(x))
}

pub fn rank_cyclo(m: &[Vec<CycloNum>]) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut work = m.to_vec();
    rref(&mut work, ncols).len()
}

/// A basis of `{ x : M x = 0 }`.
pub fn nullspace_cyclo(m: &[Vec<CycloNum>], ncols: usize, modulus: u32) -> CycloMatrix {
    let mut work = m.to_vec();
    let pivots = rref(&mut work, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![CycloNum::zero(modulus); ncols];
        v[free] = CycloNum::one(modulus);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&work[r][free];
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, or `None` when singular.
pub fn invert_cyclo(m: &[Vec<CycloNum>]) -> Result<Option<CycloMatrix>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(HopfError::Dimension("matrix is not square".into()));
    }
    let Some(modulus) = field_of(m, None) else {
        return Ok(Some(vec![]));
    };
    let mut aug: CycloMatrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            for j in 0..n {
                r.push(if i == j {
                    CycloNum::one(modulus)
                } else {
                    CycloNum::zero(modulus)
                });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return Ok(None);
    }
    Ok(Some(aug.into_iter().map(|r| r[n..].to_vec()).collect()))
}

pub fn mat_vec(m: &[Vec<CycloNum>], v: &[CycloNum], modulus: u32) -> Vec<CycloNum> {
    m.iter()
        .map(|row| {
            let mut acc = CycloNum::zero(modulus);
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        })
        .collect()
}

/// A subspace of `Q(ζ_N)^n` kept as reduced echelon rows, for
/// incremental membership tests.
#[derive(Clone, Debug, Default)]
pub struct EchelonSpan {
    /// `(pivot column, row)` with the pivot entry equal to one.
    rows: Vec<(usize, Vec<CycloNum>)>,
}

impl EchelonSpan {
    pub fn new() -> EchelonSpan {
        EchelonSpan::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[CycloNum]) -> Vec<CycloNum> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[CycloNum]) -> bool {
        self.reduce(v).iter().all(CycloNum::is_zero)
    }

    /// Add `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[CycloNum]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("pivot is nonzero");
        for x in r.iter_mut().filter(|x| !x.is_zero()) {
            *x = &*x * &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        self.rows.push((p, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::RootExp;

    fn root(n: u32, k: i64) -> CycloNum {
        CycloNum::from_root(n, RootExp::new(n, k)).unwrap()
    }

    #[test]
    fn echelon_span_membership() {
        let n = 3;
        let w = root(n, 1);
        let one = CycloNum::one(n);
        let zero = CycloNum::zero(n);
        let mut span = EchelonSpan::new();
        assert!(span.insert(&[one.clone(), w.clone(), zero.clone()]));
        assert!(!span.insert(&[w.clone(), &w * &w, zero.clone()]));
        assert!(span.insert(&[zero.clone(), one.clone(), one.clone()]));
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&[one.clone(), &w + &one, one.clone()]));
        assert!(!span.contains(&[zero.clone(), zero.clone(), one.clone()]));
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let n = 5;
        let id: CycloMatrix = (0..3)
            .map(|i| (0..3).map(|j| CycloNum::from_integer(n, (i == j) as i64)).collect())
            .collect();
        let b = vec![root(n, 1), CycloNum::from_integer(n, 7), root(n, 3)];
        assert_eq!(solve_linear_cyclo(&id, &b).unwrap().unwrap(), b);
    }

    #[test]
    fn diagonal_solve() {
        let m = vec![
            vec![root(4, 1), CycloNum::zero(4)],
            vec![CycloNum::zero(4), CycloNum::one(4)],
        ];
        let b = vec![CycloNum::one(4), root(4, 1)];
        let x = solve_linear_cyclo(&m, &b).unwrap().unwrap();
        assert_eq!(x, vec![root(4, 3), root(4, 1)]);
    }

    #[test]
    fn inconsistent_singular_system() {
        let one = CycloNum::one(3);
        let m = vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]];
        let b = vec![CycloNum::one(3), CycloNum::from_integer(3, 2)];
        assert_eq!(solve_linear_cyclo(&m, &b).unwrap(), None);
        assert!(solve_linear_cyclo(&m, &b[..1]).is_err());
    }

    #[test]
    fn nullspace_and_inverse() {
        let n = 3;
        let w = root(n, 1);
        let m = vec![
            vec![CycloNum::one(n), w.clone(), &w * &w],
            vec![w.clone(), &w * &w, CycloNum::one(n)],
        ];
        assert_eq!(rank_cyclo(&m), 1);
        let ns = nullspace_cyclo(&m, 3, n);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&m, v, n).iter().all(CycloNum::is_zero));
        }
        let a = vec![
            vec![CycloNum::one(n), w.clone()],
            vec![CycloNum::zero(n), CycloNum::from_integer(n, 2)],
        ];
        let inv = invert_cyclo(&a).unwrap().unwrap();
        let col0 = mat_vec(&a, &[inv[0][0].clone(), inv[1][0].clone()], n);
        assert!(col0[0].is_one() && col0[1].is_zero());
        let singular = vec![
            vec![CycloNum::one(n), w.clone()],
            vec![w.clone(), &w * &w],
        ];
        assert_eq!(invert_cyclo(&singular).unwrap(), None);
    }
}
