use serde::{Deserialize, Serialize};

use super::{coboundary_solve, restrict, Cocycle};
use crate::error::{HopfError, Result};
use crate::exactarith::RootExp;
use crate::groups::{CheckReport, FinGroup, MatchedPair};

/// `σ_s(x, y)` for `s ∈ A`, `x, y ∈ F`, as exponents of `ζ_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaTable {
    pub modulus: u32,
    pub na: usize,
    pub nf: usize,
    values: Vec<u32>,
}

/// `τ_x(s, t)` for `x ∈ F`, `s, t ∈ A`, as exponents of `ζ_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauTable {
    pub modulus: u32,
    pub nf: usize,
    pub na: usize,
    values: Vec<u32>,
}

fn nested_to_flat(nested: &[Vec<Vec<u32>>], d0: usize, d1: usize, d2: usize, modulus: u32, what: &str) -> Result<Vec<u32>> {
    if nested.len() != d0 || nested.iter().any(|m| m.len() != d1 || m.iter().any(|r| r.len() != d2)) {
        return Err(HopfError::Dimension(format!("{what} table must have shape {d0}×{d1}×{d2}")));
    }
    let mut out = Vec::with_capacity(d0 * d1 * d2);
    for v in nested.iter().flatten().flatten() {
        if *v >= modulus {
            return Err(HopfError::InvalidTable(format!(
                "{what} exponent {v} is not reduced mod {modulus}"
            )));
        }
        out.push(*v);
    }
    Ok(out)
}

fn flat_to_nested(values: &[u32], d0: usize, d1: usize, d2: usize) -> Vec<Vec<Vec<u32>>> {
    (0..d0)
        .map(|i| {
            (0..d1)
                .map(|j| values[(i * d1 + j) * d2..(i * d1 + j + 1) * d2].to_vec())
                .collect()
        })
        .collect()
}

impl SigmaTable {
    pub fn trivial(na: usize, nf: usize, modulus: u32) -> SigmaTable {
        SigmaTable {
            modulus,
            na,
            nf,
            values: vec![0; na * nf * nf],
        }
    }

    pub fn from_fn(na: usize, nf: usize, modulus: u32, f: impl Fn(usize, usize, usize) -> i64) -> SigmaTable {
        let values = (0..na * nf * nf)
            .map(|i| f(i / (nf * nf), (i / nf) % nf, i % nf).rem_euclid(modulus as i64) as u32)
            .collect();
        SigmaTable {
            modulus,
            na,
            nf,
            values,
        }
    }

    /// From nested `[s][x][y]` exponents, each already reduced mod `N`.
    pub fn from_nested(nested: &[Vec<Vec<u32>>], na: usize, nf: usize, modulus: u32) -> Result<SigmaTable> {
        Ok(SigmaTable {
            modulus,
            na,
            nf,
            values: nested_to_flat(nested, na, nf, nf, modulus, "σ")?,
        })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<u32>>> {
        flat_to_nested(&self.values, self.na, self.nf, self.nf)
    }

    #[inline]
    pub fn exp(&self, s: usize, x: usize, y: usize) -> u32 {
        self.values[(s * self.nf + x) * self.nf + y]
    }

    pub fn get(&self, s: usize, x: usize, y: usize) -> RootExp {
        RootExp::new(self.modulus, self.exp(s, x, y) as i64)
    }

    pub fn set(&mut self, s: usize, x: usize, y: usize, v: u32) {
        self.values[(s * self.nf + x) * self.nf + y] = v % self.modulus;
    }

    /// All exponents in storage order.
    pub fn exponents(&self) -> &[u32] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn embed(&self, m: u32) -> Result<SigmaTable> {
        if !m.is_multiple_of(self.modulus) {
            return Err(HopfError::NotADivisor { from: self.modulus, to: m });
        }
        let k = m / self.modulus;
        Ok(SigmaTable {
            modulus: m,
            na: self.na,
            nf: self.nf,
            values: self.values.iter().map(|&v| v * k).collect(),
        })
    }
}

impl TauTable {
    pub fn trivial(nf: usize, na: usize, modulus: u32) -> TauTable {
        TauTable {
            modulus,
            nf,
            na,
            values: vec![0; nf * na * na],
        }
    }

    pub fn from_fn(nf: usize, na: usize, modulus: u32, f: impl Fn(usize, usize, usize) -> i64) -> TauTable {
        let values = (0..nf * na * na)
            .map(|i| f(i / (na * na), (i / na) % na, i % na).rem_euclid(modulus as i64) as u32)
            .collect();
        TauTable {
            modulus,
            nf,
            na,
            values,
        }
    }

    /// From nested `[x][s][t]` exponents, each already reduced mod `N`.
    pub fn from_nested(nested: &[Vec<Vec<u32>>], nf: usize, na: usize, modulus: u32) -> Result<TauTable> {
        Ok(TauTable {
            modulus,
            nf,
            na,
            values: nested_to_flat(nested, nf, na, na, modulus, "τ")?,
        })
    }

    /// One cocycle `τ_x` per element of `F`, on the group `a`.
    pub fn from_cocycles(cocycles: &[Cocycle]) -> Result<TauTable> {
        let modulus = cocycles.first().map_or(1, |c| c.modulus);
        let na = cocycles.first().map_or(1, Cocycle::order);
        if cocycles.iter().any(|c| c.modulus != modulus || c.order() != na) {
            return Err(HopfError::Dimension("τ components disagree in modulus or size".into()));
        }
        Ok(TauTable {
            modulus,
            nf: cocycles.len(),
            na,
            values: cocycles.iter().flat_map(|c| c.values.iter().copied()).collect(),
        })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<u32>>> {
        flat_to_nested(&self.values, self.nf, self.na, self.na)
    }

    #[inline]
    pub fn exp(&self, x: usize, s: usize, t: usize) -> u32 {
        self.values[(x * self.na + s) * self.na + t]
    }

    pub fn get(&self, x: usize, s: usize, t: usize) -> RootExp {
        RootExp::new(self.modulus, self.exp(x, s, t) as i64)
    }

    pub fn set(&mut self, x: usize, s: usize, t: usize, v: u32) {
        self.values[(x * self.na + s) * self.na + t] = v % self.modulus;
    }

    /// All exponents in storage order.
    pub fn exponents(&self) -> &[u32] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn embed(&self, m: u32) -> Result<TauTable> {
        if !m.is_multiple_of(self.modulus) {
            return Err(HopfError::NotADivisor { from: self.modulus, to: m });
        }
        let k = m / self.modulus;
        Ok(TauTable {
            modulus: m,
            nf: self.nf,
            na: self.na,
            values: self.values.iter().map(|&v| v * k).collect(),
        })
    }

    /// `τ_x` as a cocycle on `a` (which must have order `na`).
    pub fn component(&self, x: usize, a: &FinGroup) -> Cocycle {
        let n = self.na;
        Cocycle {
            group: a.clone(),
            modulus: self.modulus,
            values: self.values[x * n * n..(x + 1) * n * n].to_vec(),
        }
    }

    /// `τ_x` restricted to a subgroup of `a` (element `i` of the result is
    /// `members[i]`).
    pub fn restrict(&self, x: usize, a: &FinGroup, members: &[usize]) -> Result<Cocycle> {
        restrict(&self.component(x, a), members)
    }
}

/// Normalization plus the identity making the comultiplication
/// coassociative: `τ_{h▷x}(a,b)·τ_x(ab,h) = τ_x(b,h)·τ_x(a,bh)`.
pub fn check_tau_cocycle(tau: &TauTable, mp: &MatchedPair) -> CheckReport {
    let a = &mp.gamma;
    let (na, nf) = (a.order(), mp.f.order());
    if tau.na != na || tau.nf != nf {
        return CheckReport::fail(format!("τ table shape {}×{n}×{n} does not match |F|={nf}, |A|={na}", tau.nf, n = tau.na));
    }
    let e = a.identity();
    let m = tau.modulus;
    for x in 0..nf {
        for s in 0..na {
            if tau.exp(x, s, e) != 0 || tau.exp(x, e, s) != 0 {
                return CheckReport::fail(format!("τ not normalized at x={x}, s={s}"));
            }
        }
    }
    for x in 0..nf {
        for p in 0..na {
            for q in 0..na {
                let pq = a.mul(p, q);
                for h in 0..na {
                    let hx = mp.right(h, x);
                    let lhs = tau.exp(hx, p, q) + tau.exp(x, pq, h);
                    let rhs = tau.exp(x, q, h) + tau.exp(x, p, a.mul(q, h));
                    if lhs % m != rhs % m {
                        return CheckReport::fail(format!(
                            "τ coassociativity identity fails at x={x}, (a, b, h)=({p}, {q}, {h})"
                        ));
                    }
                }
            }
        }
    }
    CheckReport::pass()
}

/// Normalization plus the identity making the multiplication
/// associative: `σ_s(x,y)·σ_s(xy,z) = σ_{s◁x}(y,z)·σ_s(x,yz)`.
pub fn check_sigma_cocycle(sigma: &SigmaTable, mp: &MatchedPair) -> CheckReport {
    let f = &mp.f;
    let (na, nf) = (mp.gamma.order(), f.order());
    if sigma.na != na || sigma.nf != nf {
        return CheckReport::fail(format!("σ table shape {}×{n}×{n} does not match |A|={na}, |F|={nf}", sigma.na, n = sigma.nf));
    }
    let e = f.identity();
    let m = sigma.modulus;
    for s in 0..na {
        for x in 0..nf {
            if sigma.exp(s, x, e) != 0 || sigma.exp(s, e, x) != 0 {
                return CheckReport::fail(format!("σ not normalized at s={s}, x={x}"));
            }
        }
    }
    for s in 0..na {
        for x in 0..nf {
            let sx = mp.left(s, x);
            for y in 0..nf {
                let xy = f.mul(x, y);
                for z in 0..nf {
                    let lhs = sigma.exp(s, x, y) + sigma.exp(s, xy, z);
                    let rhs = sigma.exp(sx, y, z) + sigma.exp(s, x, f.mul(y, z));
                    if lhs % m != rhs % m {
                        return CheckReport::fail(format!(
                            "σ associativity identity fails at s={s}, (x, y, z)=({x}, {y}, {z})"
                        ));
                    }
                }
            }
        }
    }
    CheckReport::pass()
}

/// `F^Γ = { x : s ▷ x = x for all s }`.
pub fn fixed_points(mp: &MatchedPair) -> Vec<usize> {
    (0..mp.f.order())
        .filter(|&x| (0..mp.gamma.order()).all(|s| mp.right(s, x) == x))
        .collect()
}

/// `F_0 = { x ∈ F^Γ : τ_x is a coboundary }`, sorted.
///
/// Coboundaries are sought with values in `μ_{N·exp(A)}`, which contains a
/// trivializing function whenever one exists over `k`.
pub fn compute_f0(tau: &TauTable, mp: &MatchedPair) -> Result<Vec<usize>> {
    let a = &mp.gamma;
    let exp_a = (0..a.order()).map(|s| a.element_order(s) as u32).fold(1, num_integer::lcm);
    let modulus = tau.modulus * exp_a;
    let mut f0 = Vec::new();
    for x in fixed_points(mp) {
        let alpha = tau.component(x, a).embed(modulus)?;
        if coboundary_solve(&alpha).is_some() {
            f0.push(x);
        }
    }
    if !mp.f.is_subgroup(&f0) {
        return Err(HopfError::Consistency(format!("F_0 = {f0:?} is not a subgroup")));
    }
    Ok(f0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::AbGroup;

    fn kp_mp() -> (AbGroup, MatchedPair) {
        let a = AbGroup::new(vec![2, 2]).unwrap();
        let mp = MatchedPair::trivial(a.to_fingroup(), FinGroup::cyclic(2));
        (a, mp)
    }

    fn kp_tau(a: &AbGroup, modulus: u32) -> TauTable {
        TauTable::from_fn(2, 4, modulus, |x, s, t| {
            (x as u32 * a.element(s)[0] * a.element(t)[1] * (modulus / 2)) as i64
        })
    }

    #[test]
    fn tau_checks() {
        let (a, mp) = kp_mp();
        assert!(check_tau_cocycle(&TauTable::trivial(2, 4, 4), &mp).passed);
        let tau = kp_tau(&a, 4);
        assert!(check_tau_cocycle(&tau, &mp).passed);
        let mut bad = tau.clone();
        bad.set(1, 3, 3, 1);
        let r = check_tau_cocycle(&bad, &mp);
        assert!(!r.passed && r.witness.is_some());
    }

    #[test]
    fn sigma_checks() {
        let f = AbGroup::new(vec![2, 2]).unwrap();
        let mp = MatchedPair::trivial(AbGroup::cyclic(2).to_fingroup(), f.to_fingroup());
        assert!(check_sigma_cocycle(&SigmaTable::trivial(2, 4, 2), &mp).passed);
        // constant in s: a group 2-cocycle of F
        let sigma = SigmaTable::from_fn(2, 4, 2, |_, x, y| (f.element(x)[0] * f.element(y)[1]) as i64);
        assert!(check_sigma_cocycle(&sigma, &mp).passed);
        // x_1·y_1 + x_0 alone is not normalized
        let not_cocycle = SigmaTable::from_fn(2, 4, 2, |_, x, y| {
            if x == 0 || y == 0 { 0 } else { (f.element(x)[0] + f.element(y)[0] * f.element(x)[1]) as i64 }
        });
        assert!(!check_sigma_cocycle(&not_cocycle, &mp).passed);
        let mut bad = sigma.clone();
        bad.set(1, 3, 3, 1 - sigma.exp(1, 3, 3));
        assert!(!check_sigma_cocycle(&bad, &mp).passed);
    }

    #[test]
    fn restriction_and_f0() {
        let (a, mp) = kp_mp();
        let tau = kp_tau(&a, 4);
        let g = a.to_fingroup();
        assert!(tau.restrict(0, &g, &[0, 1, 2, 3]).unwrap().is_trivial());
        assert_eq!(tau.restrict(1, &g, &[0, 1, 2, 3]).unwrap(), tau.component(1, &g));
        assert!(tau.restrict(1, &g, &[0, 1, 2]).is_err());
        assert_eq!(compute_f0(&tau, &mp).unwrap(), vec![0]);
        assert_eq!(compute_f0(&TauTable::trivial(2, 4, 4), &mp).unwrap(), vec![0, 1]);
    }

    #[test]
    fn nested_round_trip() {
        let (a, _) = kp_mp();
        let tau = kp_tau(&a, 4);
        let back = TauTable::from_nested(&tau.to_nested(), 2, 4, 4).unwrap();
        assert_eq!(back, tau);
        let mut nested = tau.to_nested();
        nested[1][1][1] = 4;
        assert!(TauTable::from_nested(&nested, 2, 4, 4).is_err());
    }
}
