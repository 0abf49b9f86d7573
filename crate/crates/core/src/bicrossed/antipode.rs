use std::collections::{BTreeMap, HashMap};

use super::structure::BicrossedHopf;
use crate::exactarith::{solve_linear_cyclo, CycloNum};

/// The antipode as sparse columns: `S(e_i) = Σ_k columns[i][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antipode {
    pub modulus: u32,
    pub columns: Vec<Vec<(usize, CycloNum)>>,
}

impl Antipode {
    /// Whether `S² = id`.
    pub fn is_involutive(&self) -> bool {
        self.columns.iter().enumerate().all(|(i, col)| {
            let mut acc: BTreeMap<usize, CycloNum> = BTreeMap::new();
            for (k, c) in col {
                for (m, d) in &self.columns[*k] {
                    let t = c * d;
                    acc.entry(*m).and_modify(|e| *e += &t).or_insert(t);
                }
            }
            acc.retain(|_, v| !v.is_zero());
            acc.len() == 1 && acc.get(&i).is_some_and(CycloNum::is_one)
        })
    }

    /// Image of a basis element as `(index, coefficient)` pairs.
    pub fn apply_basis(&self, i: usize) -> &[(usize, CycloNum)] {
        &self.columns[i]
    }
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut a = a;
        while self.0[a] != r {
            let next = self.0[a];
            self.0[a] = r;
            a = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Solve `S(h₁)h₂ = ε(h)1` for `S`, then check `h₁S(h₂) = ε(h)1`.
/// `None` means no convolution inverse of the identity exists.
///
/// The system is sparse; it is split into connected components of
/// unknowns and each component is solved exactly.
pub fn solve_antipode(h: &BicrossedHopf) -> Option<Antipode> {
    let dim = h.dim();
    let n = h.modulus();
    let unit: Vec<bool> = {
        let mut u = vec![false; dim];
        for &i in h.unit_terms() {
            u[i] = true;
        }
        u
    };
    // unknown (col i, row k) ↦ i·dim + k
    let mut equations: Vec<(HashMap<usize, CycloNum>, CycloNum)> = Vec::new();
    let mut by_output: HashMap<(usize, usize), usize> = HashMap::new();
    for b in 0..dim {
        for (b1, b2, c) in h.comult_basis(b) {
            for k in 0..dim {
                if let Some((m, d)) = h.mult_basis(k, b2) {
                    let eq = *by_output.entry((b, m)).or_insert_with(|| {
                        equations.push((HashMap::new(), CycloNum::zero(n)));
                        equations.len() - 1
                    });
                    let coeff = h.scalar((c + d) % n, n);
                    equations[eq]
                        .0
                        .entry(b1 * dim + k)
                        .and_modify(|e| *e += &coeff)
                        .or_insert(coeff);
                }
            }
        }
    }
    for ((b, m), &eq) in &by_output {
        if h.counit_basis(*b) && unit[*m] {
            equations[eq].1 = CycloNum::one(n);
        }
    }
    // outputs that receive no term must still have zero right-hand side
    for b in (0..dim).filter(|&b| h.counit_basis(b)) {
        for m in (0..dim).filter(|&m| unit[m]) {
            if !by_output.contains_key(&(b, m)) {
                return None;
            }
        }
    }
    for eq in &mut equations {
        eq.0.retain(|_, c| !c.is_zero());
        if eq.0.is_empty() && !eq.1.is_zero() {
            return None;
        }
    }

    let mut sets = DisjointSets((0..dim * dim).collect());
    for (terms, _) in &equations {
        let mut it = terms.keys();
        if let Some(&first) = it.next() {
            for &u in it {
                sets.union(first, u);
            }
        }
    }
    let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (e, (terms, _)) in equations.iter().enumerate() {
        if let Some(&u) = terms.keys().next() {
            components.entry(sets.find(u)).or_default().push(e);
        }
    }
    let mut values: HashMap<usize, CycloNum> = HashMap::new();
    for eqs in components.values() {
        let mut unknowns: Vec<usize> = eqs
            .iter()
            .flat_map(|&e| equations[e].0.keys().copied())
            .collect();
        unknowns.sort_unstable();
        unknowns.dedup();
        let pos: HashMap<usize, usize> = unknowns.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let mut m = vec![vec![CycloNum::zero(n); unknowns.len()]; eqs.len()];
        let mut rhs = Vec::with_capacity(eqs.len());
        for (r, &e) in eqs.iter().enumerate() {
            for (u, c) in &equations[e].0 {
                m[r][pos[u]] = c.clone();
            }
            rhs.push(equations[e].1.clone());
        }
        let sol = solve_linear_cyclo(&m, &rhs).ok()??;
        for (u, v) in unknowns.into_iter().zip(sol) {
            if !v.is_zero() {
                values.insert(u, v);
            }
        }
    }
    let mut columns = vec![Vec::new(); dim];
    let mut entries: Vec<(usize, CycloNum)> = values.into_iter().collect();
    entries.sort_by_key(|(u, _)| *u);
    for (u, v) in entries {
        columns[u / dim].push((u % dim, v));
    }
    let s = Antipode { modulus: n, columns };
    right_identity_holds(h, &s).then_some(s)
}

/// `h₁ S(h₂) = ε(h)1` on every basis element.
fn right_identity_holds(h: &BicrossedHopf, s: &Antipode) -> bool {
    let n = h.modulus();
    for b in 0..h.dim() {
        let mut acc: HashMap<usize, CycloNum> = HashMap::new();
        for (b1, b2, c) in h.comult_basis(b) {
            for (k, v) in s.apply_basis(b2) {
                if let Some((m, d)) = h.mult_basis(b1, *k) {
                    let t = v * &h.scalar((c + d) % n, n);
                    acc.entry(m).and_modify(|e| *e += &t).or_insert(t);
                }
            }
        }
        if h.counit_basis(b) {
            for &u in h.unit_terms() {
                let one = CycloNum::one(n);
                acc.entry(u).and_modify(|e| *e -= &one).or_insert(-one);
            }
        }
        if acc.values().any(|v| !v.is_zero()) {
            return false;
        }
    }
    true
}
