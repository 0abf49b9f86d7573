use serde::{Deserialize, Serialize};

use super::{AbGroup, FinGroup};
use crate::error::{HopfError, Result};

/// Left action of a finite group on a finite abelian group by
/// automorphisms. `maps[x]` acts on exponent column vectors:
/// `(M a)_i = Σ_j M[i][j]·a_j mod m_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutAction {
    pub actor: FinGroup,
    pub target: AbGroup,
    pub maps: Vec<Vec<Vec<u32>>>,
}

/// Whether a matrix defines an endomorphism of `a`: the image of each
/// generator `e_j` must have order dividing `m_j`.
pub fn is_endomorphism(a: &AbGroup, m: &[Vec<u32>]) -> bool {
    let inv = a.invariants();
    let r = inv.len();
    m.len() == r
        && m.iter().all(|row| row.len() == r)
        && (0..r).all(|i| (0..r).all(|j| (m[i][j] as u64 * inv[j] as u64).is_multiple_of(inv[i] as u64)))
}

/// Apply a matrix to an element index.
pub fn apply_matrix(a: &AbGroup, m: &[Vec<u32>], s: usize) -> usize {
    let x = a.element(s);
    let inv = a.invariants();
    let y: Vec<u32> = (0..inv.len())
        .map(|i| {
            let acc: u64 = (0..inv.len()).map(|j| m[i][j] as u64 * x[j] as u64).sum();
            (acc % inv[i] as u64) as u32
        })
        .collect();
    a.index_of_u32(&y)
}

/// Permutation of element indices induced by a matrix, or `None` when the
/// matrix is not an automorphism.
pub fn matrix_permutation(a: &AbGroup, m: &[Vec<u32>]) -> Option<Vec<usize>> {
    if !is_endomorphism(a, m) {
        return None;
    }
    let perm: Vec<usize> = (0..a.order()).map(|s| apply_matrix(a, m, s)).collect();
    let mut seen = vec![false; perm.len()];
    for &p in &perm {
        if std::mem::replace(&mut seen[p], true) {
            return None;
        }
    }
    Some(perm)
}

/// Matrix of the automorphism with the given generator images.
fn matrix_from_images(a: &AbGroup, images: &[usize]) -> Vec<Vec<u32>> {
    let r = a.rank();
    let cols: Vec<Vec<u32>> = images.iter().map(|&s| a.element(s)).collect();
    (0..r).map(|i| (0..r).map(|j| cols[j][i]).collect()).collect()
}

/// Every automorphism of `a`, as matrices, in a deterministic order.
pub fn automorphisms(a: &AbGroup) -> Vec<Vec<Vec<u32>>> {
    let inv = a.invariants();
    let r = inv.len();
    let cands: Vec<Vec<usize>> = (0..r)
        .map(|j| {
            (0..a.order())
                .filter(|&s| {
                    let x = a.element(s);
                    x.iter()
                        .zip(inv)
                        .all(|(&xi, &mi)| (xi as u64 * inv[j] as u64).is_multiple_of(mi as u64))
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; r];
    loop {
        let images: Vec<usize> = (0..r).map(|j| cands[j][choice[j]]).collect();
        let m = matrix_from_images(a, &images);
        if matrix_permutation(a, &m).is_some() {
            out.push(m);
        }
        let mut j = r;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            choice[j] += 1;
            if choice[j] < cands[j].len() {
                break;
            }
            choice[j] = 0;
        }
    }
}

impl AutAction {
    /// Validate and build an action from per-element matrices.
    pub fn new(actor: FinGroup, target: AbGroup, maps: Vec<Vec<Vec<u32>>>) -> Result<AutAction> {
        if maps.len() != actor.order() {
            return Err(HopfError::InvalidAction(format!(
                "{} matrices for a group of order {}",
                maps.len(),
                actor.order()
            )));
        }
        let maps: Vec<Vec<Vec<u32>>> = maps
            .into_iter()
            .map(|m| {
                m.into_iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.into_iter()
                            .map(|v| v % target.invariants().get(i).copied().unwrap_or(1))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let perms: Vec<Vec<usize>> = maps
            .iter()
            .enumerate()
            .map(|(x, m)| {
                matrix_permutation(&target, m).ok_or_else(|| {
                    HopfError::InvalidAction(format!("matrix for element {x} is not an automorphism"))
                })
            })
            .collect::<Result<_>>()?;
        let e = actor.identity();
        if perms[e].iter().enumerate().any(|(s, &p)| s != p) {
            return Err(HopfError::InvalidAction("identity does not act trivially".into()));
        }
        for x in 0..actor.order() {
            for y in 0..actor.order() {
                let xy = actor.mul(x, y);
                if let Some(s) = (0..target.order()).find(|&s| perms[xy][s] != perms[x][perms[y][s]]) {
                    return Err(HopfError::InvalidAction(format!(
                        "map({xy}) differs from map({x})∘map({y}) at element {s}"
                    )));
                }
            }
        }
        Ok(AutAction { actor, target, maps })
    }

    pub fn trivial(actor: FinGroup, target: AbGroup) -> AutAction {
        let r = target.rank();
        let id: Vec<Vec<u32>> = (0..r)
            .map(|i| (0..r).map(|j| u32::from(i == j)).collect())
            .collect();
        let maps = vec![id; actor.order()];
        AutAction { actor, target, maps }
    }

    /// `x · s` as an element index.
    pub fn apply(&self, x: usize, s: usize) -> usize {
        apply_matrix(&self.target, &self.maps[x], s)
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.actor.order()).all(|x| (0..self.target.order()).all(|s| self.apply(x, s) == s))
    }

    /// Full table `[x][s] = x·s`.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.actor.order())
            .map(|x| (0..self.target.order()).map(|s| self.apply(x, s)).collect())
            .collect()
    }

    /// Kernel of the action, as a sorted member list of the actor.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.actor.order())
            .filter(|&x| (0..self.target.order()).all(|s| self.apply(x, s) == s))
            .collect()
    }

    /// The contragredient action on the character group (same invariants,
    /// exponent tuples): `⟨x·χ, a⟩ = ⟨χ, x⁻¹·a⟩`.
    pub fn transpose(&self) -> AutAction {
        let maps = (0..self.actor.order())
            .map(|x| transpose_matrix(&self.target, &self.maps[self.actor.inv(x)]))
            .collect();
        AutAction {
            actor: self.actor.clone(),
            target: self.target.clone(),
            maps,
        }
    }
}

/// Matrix `T` with `χ ∘ M = T χ` on character exponent tuples, where the
/// pairing is `⟨χ, a⟩ = Π ζ_{m_i}^{χ_i a_i}`.
pub fn transpose_matrix(a: &AbGroup, m: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let inv = a.invariants();
    let r = inv.len();
    (0..r)
        .map(|j| {
            (0..r)
                .map(|i| {
                    let v = m[i][j] as u64 * inv[j] as u64;
                    debug_assert_eq!(v % inv[i] as u64, 0);
                    ((v / inv[i] as u64) % inv[j] as u64) as u32
                })
                .collect()
        })
        .collect()
}

/// All actions of `f` on `a` by automorphisms (homomorphisms
/// `F → Aut(A)`), in a deterministic order.
pub fn enumerate_actions(f: &FinGroup, a: &AbGroup) -> Vec<AutAction> {
    let autos = automorphisms(a);
    let perms: Vec<Vec<usize>> = autos
        .iter()
        .map(|m| matrix_permutation(a, m).expect("automorphism"))
        .collect();
    let gens = f.generators();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        if let Some(act) = extend_to_action(f, a, &gens, &choice, &autos, &perms) {
            out.push(act);
        }
        let mut j = gens.len();
        loop {
            if j == 0 {
                break 'outer;
            }
            j -= 1;
            choice[j] += 1;
            if choice[j] < autos.len() {
                break;
            }
            choice[j] = 0;
        }
    }
    out
}

fn extend_to_action(
    f: &FinGroup,
    a: &AbGroup,
    gens: &[usize],
    choice: &[usize],
    autos: &[Vec<Vec<u32>>],
    perms: &[Vec<usize>],
) -> Option<AutAction> {
    let n = f.order();
    let mut assigned: Vec<Option<Vec<usize>>> = vec![None; n];
    assigned[f.identity()] = Some((0..a.order()).collect());
    let mut queue = std::collections::VecDeque::from([f.identity()]);
    while let Some(x) = queue.pop_front() {
        for (g, &c) in gens.iter().zip(choice) {
            let xg = f.mul(x, *g);
            let px = assigned[x].as_ref().expect("assigned");
            let p: Vec<usize> = (0..a.order()).map(|s| px[perms[c][s]]).collect();
            match &assigned[xg] {
                Some(q) if *q != p => return None,
                Some(_) => {}
                None => {
                    assigned[xg] = Some(p);
                    queue.push_back(xg);
                }
            }
        }
    }
    let assigned: Vec<Vec<usize>> = assigned.into_iter().map(|p| p.expect("generated")).collect();
    for x in 0..n {
        for y in 0..n {
            let xy = f.mul(x, y);
            if (0..a.order()).any(|s| assigned[xy][s] != assigned[x][assigned[y][s]]) {
                return None;
            }
        }
    }
    let maps = assigned
        .iter()
        .map(|p| {
            let images: Vec<usize> = (0..a.rank()).map(|j| p[a.generator(j)]).collect();
            let m = matrix_from_images(a, &images);
            debug_assert!(autos.contains(&m));
            m
        })
        .collect();
    Some(AutAction {
        actor: f.clone(),
        target: a.clone(),
        maps,
    })
}
