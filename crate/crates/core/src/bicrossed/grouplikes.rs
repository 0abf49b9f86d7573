use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::structure::{BicrossedHopf, RootSums};
use crate::cocycle::{coboundary_solve, fixed_points};
use crate::error::{HopfError, Result};
use crate::exactarith::{CycloNum, RootExp};
use crate::groups::FinGroup;

/// The group-like `Σ_s ζ_K^{gamma[s]} e_s # x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Grouplike {
    pub x: usize,
    pub gamma: Vec<u32>,
}

impl Grouplike {
    pub fn to_vec(&self, h: &BicrossedHopf, k: u32) -> Vec<CycloNum> {
        let mut v = h.zero_vec(k);
        for (s, &g) in self.gamma.iter().enumerate() {
            v[h.index(s, self.x)] = CycloNum::from_root(k, RootExp::new(k, g as i64)).expect("modulus");
        }
        v
    }
}

/// The group `G(H)`: elements in canonical order (by `x`, then values) and
/// their multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrouplikeSet {
    pub modulus: u32,
    pub elements: Vec<Grouplike>,
    pub table: FinGroup,
}

impl GrouplikeSet {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.table.identity()
    }

    /// Members lying over a given set of `F`-elements.
    pub fn over(&self, xs: &[usize]) -> Vec<usize> {
        (0..self.order()).filter(|&i| xs.contains(&self.elements[i].x)).collect()
    }

    fn from_elements(h: &BicrossedHopf, modulus: u32, mut elements: Vec<Grouplike>) -> Result<GrouplikeSet> {
        elements.sort();
        elements.dedup();
        let pos: HashMap<&Grouplike, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut rows = vec![vec![0u32; elements.len()]; elements.len()];
        for (i, g) in elements.iter().enumerate() {
            for (j, g2) in elements.iter().enumerate() {
                let p = multiply(h, modulus, g, g2)?;
                rows[i][j] = *pos.get(&p).ok_or_else(|| {
                    HopfError::Consistency(format!("product of group-likes {i} and {j} is not in the set"))
                })? as u32;
            }
        }
        let table = FinGroup::from_table(rows)?;
        Ok(GrouplikeSet {
            modulus,
            elements,
            table,
        })
    }
}

fn lift(h: &BicrossedHopf, c: u32, k: u32) -> u32 {
    c * (k / h.modulus())
}

/// Product of two group-likes, computed from the structure constants.
fn multiply(h: &BicrossedHopf, k: u32, g1: &Grouplike, g2: &Grouplike) -> Result<Grouplike> {
    let mut contributions: HashMap<usize, Vec<u32>> = HashMap::new();
    for (s, &a) in g1.gamma.iter().enumerate() {
        for (t, &b) in g2.gamma.iter().enumerate() {
            if let Some((m, c)) = h.mult_basis(h.index(s, g1.x), h.index(t, g2.x)) {
                contributions.entry(m).or_default().push((a + b + lift(h, c, k)) % k);
            }
        }
    }
    let x = h.data.mp.f.mul(g1.x, g2.x);
    let mut gamma = vec![0u32; h.a_order()];
    for s in 0..h.a_order() {
        let terms = contributions.remove(&h.index(s, x)).unwrap_or_default();
        gamma[s] = match terms.as_slice() {
            [single] => *single,
            _ => {
                return Err(HopfError::Consistency(
                    "product of group-likes is not a root-of-unity combination of one fiber".into(),
                ))
            }
        };
    }
    if !contributions.is_empty() {
        return Err(HopfError::Consistency("product of group-likes leaves its fiber".into()));
    }
    Ok(Grouplike { x, gamma })
}

/// `G(H)` from coboundary solving: for each `x ∈ F^Γ` with `τ_x = dγ₀`,
/// the group-likes over `x` are `γ₀·χ # x` for the characters `χ` of `A`.
pub fn grouplikes_structural(h: &BicrossedHopf) -> Result<GrouplikeSet> {
    let k = h.field_modulus();
    let a = &h.data.a;
    let ag = &h.data.mp.gamma;
    let chars: Vec<Vec<u32>> = (0..a.order())
        .map(|c| a.char_values(&a.element(c), k))
        .collect::<Result<_>>()?;
    let mut elements = Vec::new();
    for x in fixed_points(&h.data.mp) {
        let alpha = h.data.tau.component(x, ag).embed(k)?;
        if let Some(g0) = coboundary_solve(&alpha) {
            for chi in &chars {
                elements.push(Grouplike {
                    x,
                    gamma: g0.iter().zip(chi).map(|(&p, &q)| (p + q) % k).collect(),
                });
            }
        }
    }
    GrouplikeSet::from_elements(h, k, elements)
}

/// Largest dimension accepted by [`grouplikes_oracle`] by default.
pub const ORACLE_DIM_LIMIT: usize = 32;

/// `G(H)` by direct search: for each `x ∈ F`, try every assignment of
/// `μ_K` values to the generators of `A`, propagate along generators, and
/// keep the candidates with `Δ(g) = g ⊗ g` and `ε(g) = 1` exactly.
pub fn grouplikes_oracle(h: &BicrossedHopf, dim_limit: usize) -> Result<GrouplikeSet> {
    if h.dim() > dim_limit {
        return Err(HopfError::LimitExceeded {
            what: "dimension for the group-like oracle",
            actual: h.dim(),
            limit: dim_limit,
        });
    }
    let k = h.field_modulus();
    let a = &h.data.a;
    let ag = &h.data.mp.gamma;
    let gens: Vec<usize> = (0..a.rank()).map(|i| a.generator(i)).collect();
    let total = (k as u64).pow(gens.len() as u32);
    let mut elements = Vec::new();
    for x in 0..h.f_order() {
        for code in 0..total {
            let mut c = code;
            let values: Vec<u32> = gens
                .iter()
                .map(|_| {
                    let v = (c % k as u64) as u32;
                    c /= k as u64;
                    v
                })
                .collect();
            let mut gamma: Vec<Option<u32>> = vec![None; a.order()];
            gamma[ag.identity()] = Some(0);
            let mut queue = std::collections::VecDeque::from([ag.identity()]);
            while let Some(s) = queue.pop_front() {
                for (&g, &v) in gens.iter().zip(&values) {
                    let t = ag.mul(s, g);
                    if gamma[t].is_none() {
                        let tau = lift(h, h.data.tau.exp(x, s, g), k);
                        gamma[t] = Some((gamma[s].expect("visited") + v + k - tau) % k);
                        queue.push_back(t);
                    }
                }
            }
            let cand = Grouplike {
                x,
                gamma: gamma.into_iter().map(|g| g.expect("generators span A")).collect(),
            };
            if is_grouplike(h, k, &cand) {
                elements.push(cand);
            }
        }
    }
    GrouplikeSet::from_elements(h, k, elements)
}

/// Exact test of `Δ(g) = g ⊗ g` and `ε(g) = 1`.
pub fn is_grouplike(h: &BicrossedHopf, k: u32, g: &Grouplike) -> bool {
    let mut eps = RootSums::new(k);
    let mut sums = RootSums::new(k);
    for (s, &v) in g.gamma.iter().enumerate() {
        let b = h.index(s, g.x);
        if h.counit_basis(b) {
            eps.add(0usize, v, 1);
        }
        for (i, j, c) in h.comult_basis(b) {
            sums.add((i, j), (v + lift(h, c, k)) % k, 1);
        }
        for (t, &w) in g.gamma.iter().enumerate() {
            sums.add((b, h.index(t, g.x)), (v + w) % k, -1);
        }
    }
    eps.add(0usize, 0, -1);
    sums.first_nonzero().is_none() && eps.first_nonzero().is_none()
}
