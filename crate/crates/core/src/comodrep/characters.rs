use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::simples::{clifford_simples_with_limit, SimpleComodule, CLIFFORD_DIM_LIMIT};
use crate::bicrossed::{grouplikes_structural, GrouplikeSet, HVec, VerifiedHopf};
use crate::error::{HopfError, Result};
use crate::exactarith::{invert_cyclo, CycloMatrix, CycloNum};

/// Multiset of simple comodule dimensions as `(dimension, count)` pairs in
/// increasing dimension, written `(1, 4; 2, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoalgebraType(pub Vec<(usize, usize)>);

impl fmt::Display for CoalgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(d, n)| format!("{d}, {n}")).collect();
        write!(f, "({})", parts.join("; "))
    }
}

pub fn coalgebra_type(simples: &[SimpleComodule]) -> CoalgebraType {
    let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
    for s in simples {
        *counts.entry(s.dim).or_default() += 1;
    }
    CoalgebraType(counts.into_iter().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Fusion table: `table[i][j][k]` is the multiplicity of `χ_k` in `χ_i χ_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionRules {
    pub degrees: Vec<usize>,
    pub table: Vec<Vec<Vec<u32>>>,
}

impl FusionRules {
    /// Nonzero constituents of `χ_i χ_j` as `(k, multiplicity)`.
    pub fn constituents(&self, i: usize, j: usize) -> Vec<(usize, u32)> {
        self.table[i][j]
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, &m)| (k, m))
            .collect()
    }
}

/// The simple comodules of `H`, their characters inside `H`, and the
/// group-likes, with the linear algebra needed to decompose products.
#[derive(Clone, Debug)]
pub struct CharacterRing {
    pub modulus: u32,
    pub simples: Vec<SimpleComodule>,
    pub characters: Vec<HVec>,
    pub degrees: Vec<usize>,
    /// `duals[i]` is the index of `S(χ_i)`.
    pub duals: Vec<usize>,
    pub grouplikes: GrouplikeSet,
    /// Character index of each group-like.
    pub grouplike_chars: Vec<usize>,
    lookup: HashMap<HVec, usize>,
    pivots: Vec<usize>,
    inverse: CycloMatrix,
}

impl CharacterRing {
    pub fn new(h: &VerifiedHopf) -> Result<CharacterRing> {
        CharacterRing::with_limit(h, CLIFFORD_DIM_LIMIT)
    }

    pub fn with_limit(h: &VerifiedHopf, max_dim: usize) -> Result<CharacterRing> {
        let simples = clifford_simples_with_limit(h, max_dim)?;
        let modulus = h.field_modulus();
        let characters: Vec<HVec> = simples.iter().map(SimpleComodule::character).collect();
        let degrees: Vec<usize> = simples.iter().map(|s| s.dim).collect();
        let lookup: HashMap<HVec, usize> = characters.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        if lookup.len() != characters.len() {
            return Err(HopfError::Consistency("two simple comodules share a character".into()));
        }

        // pivot rows of the dim × r character matrix, then invert that block
        let r = characters.len();
        let mut pivots = Vec::with_capacity(r);
        let mut span = crate::exactarith::EchelonSpan::new();
        let rows: Vec<Vec<CycloNum>> = (0..h.dim())
            .map(|i| characters.iter().map(|c| c[i].clone()).collect())
            .collect();
        for (i, row) in rows.iter().enumerate() {
            if span.insert(row) {
                pivots.push(i);
                if pivots.len() == r {
                    break;
                }
            }
        }
        if pivots.len() != r {
            return Err(HopfError::Consistency("characters are linearly dependent".into()));
        }
        let block: CycloMatrix = pivots.iter().map(|&i| rows[i].clone()).collect();
        let inverse = invert_cyclo(&block)?.ok_or_else(|| HopfError::Consistency("singular pivot block".into()))?;

        let duals = characters
            .iter()
            .map(|c| {
                let s = apply_antipode(h, c)?;
                lookup
                    .get(&s)
                    .copied()
                    .ok_or_else(|| HopfError::Consistency("S(χ) is not an irreducible character".into()))
            })
            .collect::<Result<Vec<_>>>()?;

        let grouplikes = grouplikes_structural(h)?;
        let grouplike_chars = grouplikes
            .elements
            .iter()
            .map(|g| {
                let v = g.to_vec(h, modulus);
                lookup
                    .get(&v)
                    .copied()
                    .ok_or_else(|| HopfError::Consistency("group-like is not a degree-one character".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let linear = degrees.iter().filter(|&&d| d == 1).count();
        if linear != grouplikes.order() {
            return Err(HopfError::Consistency(format!(
                "{linear} degree-one characters but |G(H)| = {}",
                grouplikes.order()
            )));
        }
        Ok(CharacterRing {
            modulus,
            simples,
            characters,
            degrees,
            duals,
            grouplikes,
            grouplike_chars,
            lookup,
            pivots,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn coalgebra_type(&self) -> CoalgebraType {
        coalgebra_type(&self.simples)
    }

    pub fn index_of(&self, v: &HVec) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    /// Coordinates of `v` in the character basis, or `None` if `v` is not
    /// in their span.
    pub fn decompose(&self, v: &HVec) -> Option<Vec<CycloNum>> {
        let k = self.modulus;
        let coords: Vec<CycloNum> = self
            .inverse
            .iter()
            .map(|row| {
                let mut acc = CycloNum::zero(k);
                for (a, &p) in row.iter().zip(&self.pivots) {
                    if !a.is_zero() && !v[p].is_zero() {
                        acc += &(a * &v[p]);
                    }
                }
                acc
            })
            .collect();
        let mut recon: HVec = vec![CycloNum::zero(k); v.len()];
        for (c, chi) in coords.iter().zip(&self.characters) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in recon.iter_mut().zip(chi) {
                if !y.is_zero() {
                    *x += &(c * y);
                }
            }
        }
        (recon == *v).then_some(coords)
    }

    /// Multiplicities of the irreducible characters in `χ_i χ_j`.
    pub fn product(&self, h: &VerifiedHopf, i: usize, j: usize) -> Result<Vec<u32>> {
        let prod = h.mul_vec(&self.characters[i], &self.characters[j]);
        let coords = self
            .decompose(&prod)
            .ok_or_else(|| HopfError::Consistency(format!("χ_{i} χ_{j} is not a combination of characters")))?;
        coords
            .iter()
            .map(|c| {
                c.to_integer()
                    .filter(|z| !z.is_negative())
                    .and_then(|z| z.to_u32())
                    .ok_or_else(|| {
                        HopfError::Consistency(format!("χ_{i} χ_{j} has multiplicity {c}, not a natural number"))
                    })
            })
            .collect()
    }

    pub fn fusion_rules(&self, h: &VerifiedHopf) -> Result<FusionRules> {
        let r = self.len();
        let table = (0..r)
            .map(|i| (0..r).map(|j| self.product(h, i, j)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(FusionRules {
            degrees: self.degrees.clone(),
            table,
        })
    }

    /// Group-likes `g` with `gχ = χ` (left) or `χg = χ` (right), as
    /// indices into [`CharacterRing::grouplikes`].
    pub fn stabilizer(&self, h: &VerifiedHopf, i: usize, side: Side) -> Vec<usize> {
        let chi = &self.characters[i];
        (0..self.grouplikes.order())
            .filter(|&g| {
                let gv = &self.characters[self.grouplike_chars[g]];
                let p = match side {
                    Side::Left => h.mul_vec(gv, chi),
                    Side::Right => h.mul_vec(chi, gv),
                };
                p == *chi
            })
            .collect()
    }

    /// `Σ_{g ∈ members} g` as an element of `H`.
    pub fn grouplike_sum(&self, h: &VerifiedHopf, members: &[usize]) -> HVec {
        let mut v = h.zero_vec(self.modulus);
        for &g in members {
            for (x, y) in v.iter_mut().zip(&self.characters[self.grouplike_chars[g]]) {
                *x += y;
            }
        }
        v
    }
}

/// `S(v)` for `v` over `Q(ζ_K)`.
pub fn apply_antipode(h: &VerifiedHopf, v: &HVec) -> Result<HVec> {
    let k = v.first().map_or(h.field_modulus(), CycloNum::modulus);
    let mut out = h.zero_vec(k);
    for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (m, c) in h.antipode.apply_basis(i) {
            out[*m] += &(vi * &c.embed(k)?);
        }
    }
    Ok(out)
}
