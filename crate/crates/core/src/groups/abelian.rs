use serde::{Deserialize, Serialize};

use super::FinGroup;
use crate::error::{HopfError, Result};
use crate::exactarith::RootExp;

/// Finite abelian group `Z_{m_1} × … × Z_{m_r}` with `m_1 | m_2 | … | m_r`.
///
/// Elements are exponent tuples, indexed in mixed radix with the first
/// coordinate most significant. The empty invariant list is the trivial
/// group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbGroup {
    invariants: Vec<u32>,
}

impl AbGroup {
    pub fn new(invariants: Vec<u32>) -> Result<AbGroup> {
        if let Some(&m) = invariants.iter().find(|&&m| m < 2) {
            return Err(HopfError::InvalidGroup(format!(
                "invariant factor {m} must be at least 2"
            )));
        }
        if let Some(w) = invariants.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(HopfError::InvalidGroup(format!(
                "invariant factors must form a divisibility chain, {} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(AbGroup { invariants })
    }

    pub fn cyclic(n: u32) -> AbGroup {
        if n == 1 {
            AbGroup::trivial()
        } else {
            AbGroup::new(vec![n]).expect("cyclic group of order >= 2")
        }
    }

    pub fn trivial() -> AbGroup {
        AbGroup { invariants: vec![] }
    }

    /// The abelian group with the given cyclic factors, rewritten in
    /// invariant-factor form. Coordinates are not preserved.
    pub fn from_factors(orders: &[u32]) -> AbGroup {
        // prime-power decomposition, then regroup by largest powers
        let mut by_prime: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        for &n in orders {
            let mut n = n;
            let mut p = 2;
            while n > 1 {
                if n % p == 0 {
                    let mut q = 1;
                    while n % p == 0 {
                        n /= p;
                        q *= p;
                    }
                    by_prime.entry(p).or_default().push(q);
                }
                p += 1;
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut inv = vec![1u32; len];
        for powers in by_prime.values_mut() {
            powers.sort_unstable();
            let off = len - powers.len();
            for (i, &q) in powers.iter().enumerate() {
                inv[off + i] *= q;
            }
        }
        AbGroup { invariants: inv }
    }

    pub fn invariants(&self) -> &[u32] {
        &self.invariants
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn order(&self) -> usize {
        self.invariants.iter().map(|&m| m as usize).product()
    }

    /// Exponent of the group (largest invariant factor, 1 if trivial).
    pub fn exponent(&self) -> u32 {
        self.invariants.last().copied().unwrap_or(1)
    }

    pub fn element(&self, index: usize) -> Vec<u32> {
        let mut out = vec![0; self.rank()];
        let mut k = index;
        for i in (0..self.rank()).rev() {
            let m = self.invariants[i] as usize;
            out[i] = (k % m) as u32;
            k /= m;
        }
        out
    }

    /// Index of an exponent tuple; entries are reduced modulo the invariants.
    pub fn index_of(&self, tuple: &[i64]) -> usize {
        debug_assert_eq!(tuple.len(), self.rank());
        tuple
            .iter()
            .zip(&self.invariants)
            .fold(0usize, |acc, (&a, &m)| {
                acc * m as usize + a.rem_euclid(m as i64) as usize
            })
    }

    pub fn index_of_u32(&self, tuple: &[u32]) -> usize {
        tuple
            .iter()
            .zip(&self.invariants)
            .fold(0usize, |acc, (&a, &m)| acc * m as usize + (a % m) as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let s: Vec<u32> = x
            .iter()
            .zip(&y)
            .zip(&self.invariants)
            .map(|((&p, &q), &m)| (p + q) % m)
            .collect();
        self.index_of_u32(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let x = self.element(a);
        let s: Vec<u32> = x
            .iter()
            .zip(&self.invariants)
            .map(|(&p, &m)| (m - p) % m)
            .collect();
        self.index_of_u32(&s)
    }

    /// Index of the `i`-th standard generator.
    pub fn generator(&self, i: usize) -> usize {
        let mut t = vec![0u32; self.rank()];
        t[i] = 1;
        self.index_of_u32(&t)
    }

    pub fn to_fingroup(&self) -> FinGroup {
        let n = self.order();
        let elems: Vec<Vec<u32>> = (0..n).map(|i| self.element(i)).collect();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u32> = elems[a]
                    .iter()
                    .zip(&elems[b])
                    .zip(&self.invariants)
                    .map(|((&p, &q), &m)| (p + q) % m)
                    .collect();
                table[a * n + b] = self.index_of_u32(&s) as u32;
            }
        }
        FinGroup::from_flat_unchecked(n, table, 0)
    }

    /// Evaluate the character with exponent tuple `chi` at element `a`,
    /// as a power of `ζ_N`.
    pub fn char_eval(&self, chi: &[u32], a: usize, n: u32) -> Result<RootExp> {
        let e = self.exponent();
        if n == 0 || !n.is_multiple_of(e) {
            return Err(HopfError::NotADivisor { from: e, to: n });
        }
        let x = self.element(a);
        let mut acc: u64 = 0;
        for ((&c, &ai), &m) in chi.iter().zip(&x).zip(&self.invariants) {
            acc += c as u64 * ai as u64 * (n / m) as u64;
        }
        Ok(RootExp::new(n, (acc % n as u64) as i64))
    }

    /// Character values at every element, as exponents of `ζ_N`.
    pub fn char_values(&self, chi: &[u32], n: u32) -> Result<Vec<u32>> {
        (0..self.order())
            .map(|a| self.char_eval(chi, a, n).map(RootExp::exponent))
            .collect()
    }
}
