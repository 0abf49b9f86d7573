use serde::{Deserialize, Serialize};

use crate::exactarith::{CycloNum, RootExp};

/// A square matrix with at most one nonzero entry per column, each entry a
/// root of unity `ζ_K^e`. Column `j` maps to `(row, e)` or to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialMatrix {
    pub modulus: u32,
    pub cols: Vec<Option<(u32, u32)>>,
}

impl MonomialMatrix {
    pub fn zero(dim: usize, modulus: u32) -> MonomialMatrix {
        MonomialMatrix {
            modulus,
            cols: vec![None; dim],
        }
    }

    pub fn identity(dim: usize, modulus: u32) -> MonomialMatrix {
        MonomialMatrix {
            modulus,
            cols: (0..dim as u32).map(|i| Some((i, 0))).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Option::is_none)
    }

    /// `self · other`.
    pub fn compose(&self, other: &MonomialMatrix) -> MonomialMatrix {
        debug_assert_eq!(self.modulus, other.modulus);
        let k = self.modulus;
        let cols = other
            .cols
            .iter()
            .map(|c| {
                let (r, e) = (*c)?;
                let (r2, e2) = self.cols[r as usize]?;
                Some((r2, (e + e2) % k))
            })
            .collect();
        MonomialMatrix { modulus: k, cols }
    }

    /// Entry `(row, col)` as an exponent, or `None` for a zero entry.
    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        match self.cols[col] {
            Some((r, e)) if r as usize == row => Some(e),
            _ => None,
        }
    }

    pub fn trace(&self) -> CycloNum {
        let k = self.modulus;
        let mut acc = CycloNum::zero(k);
        for (j, c) in self.cols.iter().enumerate() {
            if let Some((r, e)) = *c {
                if r as usize == j {
                    acc += &CycloNum::from_root(k, RootExp::new(k, e as i64)).expect("modulus");
                }
            }
        }
        acc
    }

    /// Exponent of the scalar `c` if the matrix equals `ζ^c · I`.
    pub fn scalar_exponent(&self) -> Option<u32> {
        let first = self.cols.first().copied().flatten()?;
        self.cols
            .iter()
            .enumerate()
            .all(|(j, c)| *c == Some((j as u32, first.1)))
            .then_some(first.1)
    }
}
