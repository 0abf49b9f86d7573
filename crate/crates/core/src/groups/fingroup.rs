use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};

/// Finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupTable", into = "GroupTable")]
pub struct FinGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
}

/// Serialized form of a [`FinGroup`]: the Cayley table as nested rows.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupTable {
    pub table: Vec<Vec<u32>>,
}

impl TryFrom<GroupTable> for FinGroup {
    type Error = HopfError;
    fn try_from(t: GroupTable) -> Result<FinGroup> {
        FinGroup::from_table(t.table)
    }
}

impl From<FinGroup> for GroupTable {
    fn from(g: FinGroup) -> GroupTable {
        GroupTable { table: g.rows() }
    }
}

impl FinGroup {
    /// Validate and build a group from a Cayley table `table[a][b] = a·b`.
    pub fn from_table(rows: Vec<Vec<u32>>) -> Result<FinGroup> {
        let n = rows.len();
        if n == 0 {
            return Err(HopfError::InvalidGroup("empty table".into()));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(HopfError::InvalidGroup(format!(
                "row {i} has {} entries, expected {n}",
                r.len()
            )));
        }
        if let Some(&v) = rows.iter().flatten().find(|&&v| v as usize >= n) {
            return Err(HopfError::InvalidGroup(format!("entry {v} out of range")));
        }
        let table: Vec<u32> = rows.into_iter().flatten().collect();
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] as usize == a && table[a * n + e] as usize == a))
            .ok_or_else(|| HopfError::InvalidGroup("no identity element".into()))?;
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a * n + b] as usize == identity)
                .ok_or_else(|| HopfError::InvalidGroup(format!("element {a} has no right inverse")))?;
            if table[b * n + a] as usize != identity {
                return Err(HopfError::InvalidGroup(format!(
                    "right inverse of {a} is not a left inverse"
                )));
            }
            inverses[a] = b as u32;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(HopfError::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FinGroup {
            order: n,
            table,
            identity,
            inverses,
        })
    }

    /// Build from a table already known to be a group law.
    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<u32>, identity: usize) -> FinGroup {
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| table[a * n + b] as usize == identity)
                .expect("group table has inverses") as u32;
        }
        FinGroup {
            order: n,
            table,
            identity,
            inverses,
        }
    }

    pub fn trivial() -> FinGroup {
        FinGroup::from_flat_unchecked(1, vec![0], 0)
    }

    pub fn cyclic(n: usize) -> FinGroup {
        assert!(n > 0);
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        FinGroup::from_flat_unchecked(n, table, 0)
    }

    /// Closure of a set of permutations of `0..degree` under composition;
    /// the product `p·q` applies `q` first. Element 0 is the identity and
    /// the rest follow in breadth-first order over the generators.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<FinGroup> {
        let degree = gens.first().map_or(0, Vec::len);
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
                return Err(HopfError::InvalidGroup("generator is not a permutation".into()));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = compose(&elems[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elems[a], &elems[b])] as u32;
            }
        }
        Ok(FinGroup::from_flat_unchecked(n, table, 0))
    }

    /// Symmetric group on three letters.
    pub fn s3() -> FinGroup {
        FinGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).expect("valid permutations")
    }

    /// Alternating group on four letters.
    pub fn a4() -> FinGroup {
        FinGroup::from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).expect("valid permutations")
    }

    pub fn direct_product(g: &FinGroup, h: &FinGroup) -> FinGroup {
        let (m, k) = (g.order, h.order);
        let n = m * k;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let (a1, a2) = (a / k, a % k);
                let (b1, b2) = (b / k, b % k);
                table[a * n + b] = (g.mul(a1, b1) * k + h.mul(a2, b2)) as u32;
            }
        }
        FinGroup::from_flat_unchecked(n, table, g.identity * k + h.identity)
    }

    /// Semidirect product `N ⋊ H` on pairs `(n, h)` (index `n·|H| + h`)
    /// with `(n₁, h₁)(n₂, h₂) = (n₁ · act(h₁, n₂), h₁h₂)`, where `act` is a
    /// left action of `H` on `N` by automorphisms.
    pub fn semidirect(n_grp: &FinGroup, h_grp: &FinGroup, act: impl Fn(usize, usize) -> usize) -> Result<FinGroup> {
        let (m, k) = (n_grp.order, h_grp.order);
        let size = m * k;
        let mut rows = vec![vec![0u32; size]; size];
        for a in 0..size {
            for b in 0..size {
                let (n1, h1) = (a / k, a % k);
                let (n2, h2) = (b / k, b % k);
                rows[a][b] = (n_grp.mul(n1, act(h1, n2)) * k + h_grp.mul(h1, h2)) as u32;
            }
        }
        FinGroup::from_table(rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut r = self.identity;
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.table.chunks(self.order).map(<[u32]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted multiset of element orders.
    pub fn order_statistics(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Sorted member list of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if seen.insert(b) {
                    queue.push_back(b);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| a < self.order)
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, self.inv(b)))))
    }

    pub fn is_normal(&self, members: &[usize]) -> bool {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        self.is_subgroup(members)
            && (0..self.order).all(|g| {
                set.iter()
                    .all(|&a| set.contains(&self.mul(self.mul(g, a), self.inv(g))))
            })
    }

    /// The subgroup on `members` (in the given order) as a group in its own
    /// right; element `i` of the result is `members[i]`.
    pub fn subgroup(&self, members: &[usize]) -> Result<FinGroup> {
        if !self.is_subgroup(members) {
            return Err(HopfError::NotASubgroup(format!("{members:?}")));
        }
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        if pos.len() != members.len() {
            return Err(HopfError::NotASubgroup("repeated members".into()));
        }
        let n = members.len();
        let mut table = vec![0u32; n * n];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                table[i * n + j] = pos[&self.mul(a, b)] as u32;
            }
        }
        Ok(FinGroup::from_flat_unchecked(n, table, pos[&self.identity]))
    }

    /// Invariant factors when the group is abelian, recovered from the
    /// counts `#{g : g^{p^k} = 1}`.
    pub fn abelian_invariants(&self) -> Option<Vec<u32>> {
        if !self.is_abelian() {
            return None;
        }
        let mut n = self.order;
        let mut factors: Vec<u32> = Vec::new();
        let mut p = 2;
        while n > 1 {
            if n.is_multiple_of(p) {
                while n.is_multiple_of(p) {
                    n /= p;
                }
                // log_p #{g : g^{p^k} = 1} = Σ_i min(k, e_i)
                let mut logs = vec![0u32];
                let mut q = 1u64;
                loop {
                    q *= p as u64;
                    let count = (0..self.order)
                        .filter(|&g| self.pow(g, q) == self.identity)
                        .count();
                    let mut l = 0;
                    let mut c = count;
                    while c > 1 {
                        c /= p;
                        l += 1;
                    }
                    let done = l == *logs.last().expect("nonempty");
                    if done {
                        break;
                    }
                    logs.push(l);
                }
                // number of cyclic factors of order ≥ p^k is logs[k] − logs[k−1]
                let top = logs.len() - 1;
                let at_least: Vec<u32> = (1..=top).map(|k| logs[k] - logs[k - 1]).collect();
                for k in 1..=top {
                    let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
                    for _ in 0..exactly {
                        factors.push((p as u32).pow(k as u32));
                    }
                }
            }
            p += 1;
        }
        Some(crate::groups::AbGroup::from_factors(&factors).invariants().to_vec())
    }

    /// A small generating set, chosen greedily by decreasing element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut cands: Vec<usize> = (0..self.order).filter(|&a| a != self.identity).collect();
        cands.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in cands {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }
}
