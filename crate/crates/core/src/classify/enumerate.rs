use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::triple::{validate_triple, ClassTriple};
use crate::cocycle::{canonical_cocycle, class_coordinates, coboundary_solve, is_nondegenerate, Cocycle, SigmaTable, TauTable};
use crate::error::{HopfError, Result};
use crate::exactarith::{solve_affine_zn, QuotientModule};
use crate::groups::{apply_matrix, transpose_matrix, AbGroup, AutAction, FinGroup};

/// Search limits. Exceeding `max_crossed_homs` or `max_results` stops the
/// search and sets [`Enumeration::truncated`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBudget {
    /// Largest `|Γ|·|F|` accepted.
    pub max_order: usize,
    pub max_crossed_homs: usize,
    pub max_results: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_order: 64,
            max_crossed_homs: 100_000,
            max_results: 1_000,
        }
    }
}

/// Equivalence used by the enumerator.
pub const EQUIVALENCE_NOTE: &str = "triples are listed up to coboundaries of cocycle pairs at fixed (Γ, F, action); \
isomorphic Hopf algebras may still appear under different triples";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub triples: Vec<ClassTriple>,
    pub truncated: bool,
    /// Crossed homomorphisms `F → H²(Γ̂)` examined.
    pub crossed_homs: usize,
    /// Crossed homomorphisms passing the index-two and nondegeneracy filters.
    pub admissible: usize,
    /// Admissible ones for which no compatible `σ` exists.
    pub obstructed: usize,
    /// Candidates built but rejected by [`validate_triple`].
    pub rejected: usize,
    pub note: String,
}

/// Second cohomology of `A` in the coordinates `k_ij ∈ Z_{m_i}`, `i < j`.
struct H2 {
    orders: Vec<u32>,
}

impl H2 {
    fn new(a: &AbGroup) -> H2 {
        let inv = a.invariants();
        let mut orders = Vec::new();
        for i in 0..inv.len() {
            for _ in i + 1..inv.len() {
                orders.push(inv[i]);
            }
        }
        H2 { orders }
    }

    fn size(&self) -> usize {
        self.orders.iter().map(|&o| o as usize).product()
    }

    fn coords(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.orders.len()];
        for t in (0..self.orders.len()).rev() {
            out[t] = (idx % self.orders[t] as usize) as u32;
            idx /= self.orders[t] as usize;
        }
        out
    }

    fn index(&self, k: &[u32]) -> usize {
        k.iter().zip(&self.orders).fold(0, |acc, (&v, &o)| acc * o as usize + (v % o) as usize)
    }

    fn add(&self, p: usize, q: usize) -> usize {
        let (a, b) = (self.coords(p), self.coords(q));
        let s: Vec<u32> = a.iter().zip(&b).zip(&self.orders).map(|((x, y), o)| (x + y) % o).collect();
        self.index(&s)
    }
}

/// Enumerate valid triples for a fixed `(Γ, F, action)`.
///
/// Classes `κ(x) = [τ_x]` form a crossed homomorphism `F → H²(Γ̂)`; those
/// with kernel of index two and nondegenerate values off the kernel are
/// kept. `τ_x` is the canonical representative of `κ(x)`; `σ` is then
/// `ν·χ`, where `dν(x, y) = τ_{xy}/(τ_x · x*τ_y)` is solved on `A` and the
/// character-valued part `χ` solves a linear system over `Z_{exp A}`.
/// Solutions are taken modulo coboundaries of pairs that fix `τ`.
pub fn enumerate_triples(
    gamma: &AbGroup,
    f: &FinGroup,
    action: &AutAction,
    budget: &EnumerationBudget,
) -> Result<Enumeration> {
    let action = AutAction::new(f.clone(), gamma.clone(), action.maps.clone())?;
    let (na, nf) = (gamma.order(), f.order());
    if na * nf > budget.max_order {
        return Err(HopfError::LimitExceeded {
            what: "|Γ|·|F| for enumeration",
            actual: na * nf,
            limit: budget.max_order,
        });
    }
    let a = gamma;
    let ag = a.to_fingroup();
    let e_exp = a.exponent();
    let m2 = e_exp * e_exp;

    let transposed: Vec<Vec<Vec<u32>>> = action.maps.iter().map(|m| transpose_matrix(a, m)).collect();
    let right: Vec<Vec<usize>> = (0..na)
        .map(|s| (0..nf).map(|x| apply_matrix(a, &transposed[x], s)).collect())
        .collect();

    let h2 = H2::new(a);
    let classes: Vec<Cocycle> = (0..h2.size())
        .map(|i| canonical_cocycle(a, &h2.coords(i), e_exp))
        .collect::<Result<_>>()?;
    let nondeg: Vec<bool> = classes.iter().map(is_nondegenerate).collect();
    // pull[x][k] = class of x*β_k, (x*β)(g, h) = β(g◁x, h◁x)
    let pull: Vec<Vec<usize>> = (0..nf)
        .map(|x| {
            classes
                .iter()
                .map(|beta| {
                    let p = Cocycle::from_fn(ag.clone(), e_exp, |g, h| beta.exp(right[g][x], right[h][x]) as i64);
                    h2.index(&class_coordinates(a, &p))
                })
                .collect()
        })
        .collect();

    let mut out = Enumeration {
        triples: Vec::new(),
        truncated: false,
        crossed_homs: 0,
        admissible: 0,
        obstructed: 0,
        rejected: 0,
        note: EQUIVALENCE_NOTE.into(),
    };

    let gens = f.generators();
    let total_assignments = h2.size().checked_pow(gens.len() as u32).unwrap_or(usize::MAX);
    for assignment in 0..total_assignments {
        let mut rest = assignment;
        let gen_vals: Vec<usize> = gens
            .iter()
            .map(|_| {
                let v = rest % h2.size();
                rest /= h2.size();
                v
            })
            .collect();
        let Some(kappa) = extend_crossed_hom(f, &gens, &gen_vals, &pull, &h2) else {
            continue;
        };
        out.crossed_homs += 1;
        if out.crossed_homs > budget.max_crossed_homs {
            out.truncated = true;
            break;
        }
        let f0: Vec<usize> = (0..nf).filter(|&x| kappa[x] == 0).collect();
        if 2 * f0.len() != nf || (0..nf).any(|x| kappa[x] != 0 && !nondeg[kappa[x]]) {
            continue;
        }
        out.admissible += 1;

        let tau = TauTable::from_fn(nf, na, m2, |x, s, t| (classes[kappa[x]].exp(s, t) * e_exp) as i64);
        let Some(solutions) = sigma_solutions(a, f, &right, &tau, m2, budget.max_results)? else {
            out.obstructed += 1;
            continue;
        };
        if solutions.truncated {
            out.truncated = true;
        }
        for sigma in solutions.sigmas {
            let (sigma, tau, modulus) = reduce_modulus(sigma, tau.clone(), m2);
            let t = ClassTriple {
                gamma: a.clone(),
                f: f.clone(),
                action: action.clone(),
                sigma,
                tau,
                modulus,
            };
            if validate_triple(&t).valid {
                out.triples.push(t);
            } else {
                out.rejected += 1;
            }
            if out.triples.len() >= budget.max_results {
                out.truncated = true;
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// Extend generator values to `κ` with `κ(xy) = κ(x) + x*κ(y)`, or `None`
/// if inconsistent.
fn extend_crossed_hom(
    f: &FinGroup,
    gens: &[usize],
    gen_vals: &[usize],
    pull: &[Vec<usize>],
    h2: &H2,
) -> Option<Vec<usize>> {
    let nf = f.order();
    let mut kappa = vec![usize::MAX; nf];
    kappa[f.identity()] = 0;
    let mut queue = VecDeque::from([f.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&g, &v) in gens.iter().zip(gen_vals) {
            let y = f.mul(x, g);
            let val = h2.add(kappa[x], pull[x][v]);
            if kappa[y] == usize::MAX {
                kappa[y] = val;
                queue.push_back(y);
            } else if kappa[y] != val {
                return None;
            }
        }
    }
    for x in 0..nf {
        for y in 0..nf {
            if kappa[f.mul(x, y)] != h2.add(kappa[x], pull[x][kappa[y]]) {
                return None;
            }
        }
    }
    Some(kappa)
}

struct SigmaSolutions {
    sigmas: Vec<SigmaTable>,
    truncated: bool,
}

/// All `σ` compatible with `τ` modulo coboundaries fixing `τ`, or `None`
/// if there is none.
fn sigma_solutions(
    a: &AbGroup,
    f: &FinGroup,
    right: &[Vec<usize>],
    tau: &TauTable,
    m2: u32,
    max_results: usize,
) -> Result<Option<SigmaSolutions>> {
    let ag = a.to_fingroup();
    let inv = a.invariants();
    let r = inv.len();
    let e_exp = a.exponent();
    let (na, nf) = (a.order(), f.order());
    let ef = f.identity();
    let gen: Vec<usize> = (0..r).map(|i| a.generator(i)).collect();

    // ν_{x,y} with dν = τ_{xy}/(τ_x · x*τ_y), zero on the identity
    let mut nu = vec![vec![0u32; na]; nf * nf];
    for x in (0..nf).filter(|&x| x != ef) {
        for y in (0..nf).filter(|&y| y != ef) {
            let xy = f.mul(x, y);
            let omega = Cocycle::from_fn(ag.clone(), m2, |g, h| {
                tau.exp(xy, g, h) as i64 - tau.exp(x, g, h) as i64 - tau.exp(y, right[g][x], right[h][x]) as i64
            });
            match coboundary_solve(&omega) {
                Some(v) => nu[x * nf + y] = v,
                None => return Ok(None),
            }
        }
    }

    // unknown χ_{x,y}(e_i) ∈ Z_{m_i} for x, y ≠ e
    let nontriv: Vec<usize> = (0..nf).filter(|&x| x != ef).collect();
    let pair_pos = |x: usize, y: usize| -> Option<usize> {
        if x == ef || y == ef {
            return None;
        }
        let px = nontriv.binary_search(&x).ok()?;
        let py = nontriv.binary_search(&y).ok()?;
        Some(px * nontriv.len() + py)
    };
    let nunk = nontriv.len() * nontriv.len() * r;
    let unk = |p: usize, i: usize| p * r + i;
    let e64 = e_exp as i64;
    let step = |i: usize| (e_exp / inv[i]) as i64;
    // (e_j ◁ x) as a tuple
    let moved = |j: usize, x: usize| a.element(right[gen[j]][x]);

    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &x in &nontriv {
        for &y in &nontriv {
            for &z in &nontriv {
                let (xy, yz) = (f.mul(x, y), f.mul(y, z));
                let nu_at = |p: usize, q: usize, s: usize| -> i64 {
                    if p == ef || q == ef { 0 } else { nu[p * nf + q][s] as i64 }
                };
                // obstruction O(x,y,z) must be a character valued in μ_E
                let obs = |s: usize| {
                    (nu_at(x, y, s) + nu_at(xy, z, s) - nu_at(y, z, right[s][x]) - nu_at(x, yz, s))
                        .rem_euclid(m2 as i64)
                };
                for s in 0..na {
                    let el = a.element(s);
                    let lin: i64 = (0..r).map(|j| el[j] as i64 * obs(gen[j])).sum::<i64>().rem_euclid(m2 as i64);
                    if lin != obs(s) {
                        return Err(HopfError::Consistency("associativity obstruction is not a character".into()));
                    }
                }
                for j in 0..r {
                    let o = obs(gen[j]);
                    if o % e64 != 0 {
                        return Err(HopfError::Consistency("associativity obstruction leaves μ_E".into()));
                    }
                    let mut row = vec![0i64; nunk];
                    if let Some(p) = pair_pos(x, y) {
                        row[unk(p, j)] += step(j);
                    }
                    if let Some(p) = pair_pos(xy, z) {
                        row[unk(p, j)] += step(j);
                    }
                    if let Some(p) = pair_pos(x, yz) {
                        row[unk(p, j)] -= step(j);
                    }
                    if let Some(p) = pair_pos(y, z) {
                        let t = moved(j, x);
                        for i in 0..r {
                            row[unk(p, i)] -= t[i] as i64 * step(i);
                        }
                    }
                    rows.push(row);
                    rhs.push(-(o / e64));
                }
            }
        }
    }
    let sol = solve_affine_zn(&rows, &rhs, e_exp as u64)?;
    let Some(particular) = sol.particular.clone() else {
        return Ok(None);
    };

    // coboundaries of λ(·, x) ∈ Â fixing τ
    let unk_orders: Vec<u64> = (0..nunk).map(|u| inv[u % r] as u64).collect();
    let mut relations = Vec::new();
    for &lx in &nontriv {
        for li in 0..r {
            let mut rel = vec![0u64; nunk];
            for &p in &nontriv {
                for &q in &nontriv {
                    let Some(pos) = pair_pos(p, q) else { continue };
                    let pq = f.mul(p, q);
                    for j in 0..r {
                        let mut v: i64 = 0;
                        if p == lx && li == j {
                            v += step(j);
                        }
                        if pq == lx && li == j {
                            v -= step(j);
                        }
                        if q == lx {
                            v += moved(j, p)[li] as i64 * step(li);
                        }
                        let v = v.rem_euclid(e64);
                        if v % step(j) != 0 {
                            return Err(HopfError::Consistency("coboundary leaves the character lattice".into()));
                        }
                        rel[unk(pos, j)] = ((v / step(j)) as u64) % inv[j] as u64;
                    }
                }
            }
            relations.push(rel);
        }
    }
    let quotient = QuotientModule::new(&unk_orders, &relations, e_exp as u64);
    let satisfies = |c: &[u64]| {
        rows.iter().zip(&rhs).all(|(row, &b)| {
            let lhs: i64 = row.iter().zip(c).map(|(&m, &v)| m * v as i64).sum();
            (lhs - b).rem_euclid(e64) == 0
        })
    };

    // classes of solutions: classify(particular) + ⟨classify(kernel)⟩
    let gens: Vec<Vec<u64>> = sol.kernel_basis.iter().map(|k| quotient.classify(k)).collect();
    let orders = quotient.factor_orders.clone();
    let start = quotient.classify(&particular);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, particular.clone())]);
    let mut found: Vec<(Vec<u64>, Vec<u64>)> = Vec::new();
    let mut truncated = false;
    while let Some((w, c)) = queue.pop_front() {
        found.push((w.clone(), c.clone()));
        if found.len() >= max_results {
            truncated = !queue.is_empty();
            break;
        }
        for (g, kb) in gens.iter().zip(&sol.kernel_basis) {
            let w2: Vec<u64> = w.iter().zip(g).zip(&orders).map(|((a, b), o)| (a + b) % o).collect();
            if seen.insert(w2.clone()) {
                let c2: Vec<u64> = c.iter().zip(kb).map(|(a, b)| (a + b) % e_exp as u64).collect();
                queue.push_back((w2, c2));
            }
        }
    }
    found.sort();

    let sigmas = found
        .into_iter()
        .map(|(w, tracked)| {
            let canonical = quotient.representative(&w);
            let c = if satisfies(&canonical) { canonical } else { tracked };
            SigmaTable::from_fn(na, nf, m2, |s, x, y| {
                let Some(p) = pair_pos(x, y) else { return 0 };
                let el = a.element(s);
                let chi: i64 = (0..r).map(|i| c[unk(p, i)] as i64 * el[i] as i64 * step(i)).sum();
                nu[x * nf + y][s] as i64 + chi * e64
            })
        })
        .collect();
    Ok(Some(SigmaSolutions { sigmas, truncated }))
}

/// Rewrite the tables over the smallest `μ_N` containing their values.
fn reduce_modulus(sigma: SigmaTable, tau: TauTable, m: u32) -> (SigmaTable, TauTable, u32) {
    let g = sigma
        .exponents()
        .iter()
        .chain(tau.exponents())
        .fold(m, |acc, &v| num_integer::gcd(acc, v));
    let n = m / g;
    let sigma = SigmaTable::from_fn(sigma.na, sigma.nf, n, |s, x, y| (sigma.exp(s, x, y) / g) as i64);
    let tau = TauTable::from_fn(tau.nf, tau.na, n, |x, s, t| (tau.exp(x, s, t) / g) as i64);
    (sigma, tau, n)
}
