use std::collections::VecDeque;

use super::FinGroup;
use crate::error::{HopfError, Result};

/// Largest order accepted by [`group_iso_test`].
pub const ISO_ORDER_LIMIT: usize = 64;

/// Decide whether two groups are isomorphic. On success the witness maps
/// element `a` of `g1` to `witness[a]` in `g2`.
pub fn group_iso_test(g1: &FinGroup, g2: &FinGroup) -> Result<Option<Vec<usize>>> {
    group_iso_test_with_limit(g1, g2, ISO_ORDER_LIMIT)
}

pub fn group_iso_test_with_limit(g1: &FinGroup, g2: &FinGroup, limit: usize) -> Result<Option<Vec<usize>>> {
    for g in [g1, g2] {
        if g.order() > limit {
            return Err(HopfError::LimitExceeded {
                what: "group order for isomorphism test",
                actual: g.order(),
                limit,
            });
        }
    }
    if g1.order() != g2.order() || g1.order_statistics() != g2.order_statistics() {
        return Ok(None);
    }
    if g1.is_abelian() != g2.is_abelian() {
        return Ok(None);
    }
    let gens = g1.generators();
    let orders2: Vec<usize> = (0..g2.order()).map(|a| g2.element_order(a)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let o = g1.element_order(g);
            (0..g2.order()).filter(|&b| orders2[b] == o).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(g1, g2, &gens, &candidates, &mut images))
}

fn search(
    g1: &FinGroup,
    g2: &FinGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if images.len() == gens.len() {
        return extend_hom(g1, g2, gens, images).filter(|m| is_bijective(m));
    }
    let k = images.len();
    for &c in &candidates[k] {
        if images.contains(&c) {
            continue;
        }
        images.push(c);
        // prune: the partial assignment must already extend consistently
        if extend_hom(g1, g2, &gens[..=k], images).is_some_and(|m| partial_injective(&m)) {
            if let Some(w) = search(g1, g2, gens, candidates, images) {
                return Some(w);
            }
        }
        images.pop();
    }
    None
}

/// Extend generator images to the generated subgroup, returning `None` on
/// a conflict. Unreached elements map to `usize::MAX`.
fn extend_hom(g1: &FinGroup, g2: &FinGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g1.order()];
    map[g1.identity()] = g2.identity();
    let mut queue = VecDeque::from([g1.identity()]);
    while let Some(a) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let b = g1.mul(a, g);
            let v = g2.mul(map[a], img);
            if map[b] == usize::MAX {
                map[b] = v;
                queue.push_back(b);
            } else if map[b] != v {
                return None;
            }
        }
    }
    // on the reached set, consistency along generators implies a hom only
    // when the reached set is the whole group; check products directly
    let reached: Vec<usize> = (0..g1.order()).filter(|&a| map[a] != usize::MAX).collect();
    for &a in &reached {
        for &b in &reached {
            if map[g1.mul(a, b)] != g2.mul(map[a], map[b]) {
                return None;
            }
        }
    }
    Some(map)
}

fn partial_injective(map: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    map.iter().filter(|&&v| v != usize::MAX).all(|&v| seen.insert(v))
}

fn is_bijective(map: &[usize]) -> bool {
    map.iter().all(|&v| v != usize::MAX) && partial_injective(map)
}
