use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cocycle::{check_sigma_cocycle, check_tau_cocycle, SigmaTable, TauTable};
use crate::error::{HopfError, Result};
use crate::exactarith::{CycloNum, RootExp};
use crate::groups::{AbGroup, CheckReport, FinGroup, MatchedPair};

/// Matched pair `(A, F)` with `A` abelian, plus a cocycle pair `(σ, τ)`
/// valued in `μ_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionData {
    pub a: AbGroup,
    pub mp: MatchedPair,
    pub sigma: SigmaTable,
    pub tau: TauTable,
    pub modulus: u32,
}

impl ExtensionData {
    /// Validate shapes, the matched pair, and normalization of `σ` and `τ`.
    pub fn new(a: AbGroup, mp: MatchedPair, sigma: SigmaTable, tau: TauTable) -> Result<ExtensionData> {
        if mp.gamma != a.to_fingroup() {
            return Err(HopfError::InvalidTable(
                "matched pair Γ slot must be the table of A".into(),
            ));
        }
        let (na, nf) = (a.order(), mp.f.order());
        if sigma.na != na || sigma.nf != nf || tau.na != na || tau.nf != nf {
            return Err(HopfError::Dimension(format!(
                "cocycle tables do not match |A| = {na}, |F| = {nf}"
            )));
        }
        if sigma.modulus != tau.modulus {
            return Err(HopfError::ModulusMismatch(sigma.modulus, tau.modulus));
        }
        let report = mp.verify();
        if !report.passed {
            return Err(HopfError::InvalidAction(format!(
                "not a matched pair: {}",
                report.witness.unwrap_or_default()
            )));
        }
        let (e_a, e_f) = (mp.gamma.identity(), mp.f.identity());
        for s in 0..na {
            for x in 0..nf {
                if sigma.exp(s, x, e_f) != 0 || sigma.exp(s, e_f, x) != 0 {
                    return Err(HopfError::InvalidTable(format!("σ not normalized at s={s}, x={x}")));
                }
            }
        }
        for x in 0..nf {
            for s in 0..na {
                if tau.exp(x, s, e_a) != 0 || tau.exp(x, e_a, s) != 0 {
                    return Err(HopfError::InvalidTable(format!("τ not normalized at x={x}, s={s}")));
                }
            }
        }
        let modulus = sigma.modulus;
        Ok(ExtensionData {
            a,
            mp,
            sigma,
            tau,
            modulus,
        })
    }

    /// Trivial actions and trivial cocycles: `k^A ⊗ kF`.
    pub fn trivial(a: AbGroup, f: FinGroup, modulus: u32) -> ExtensionData {
        let (na, nf) = (a.order(), f.order());
        let mp = MatchedPair::trivial(a.to_fingroup(), f);
        ExtensionData {
            a,
            mp,
            sigma: SigmaTable::trivial(na, nf, modulus),
            tau: TauTable::trivial(nf, na, modulus),
            modulus,
        }
    }

    /// Fast necessary conditions on `σ` and `τ` separately.
    pub fn prefilter(&self) -> (CheckReport, CheckReport) {
        (
            check_sigma_cocycle(&self.sigma, &self.mp),
            check_tau_cocycle(&self.tau, &self.mp),
        )
    }

    /// Modulus of the coefficient field used for group-likes and
    /// representations: `N·exp(A)`.
    pub fn field_modulus(&self) -> u32 {
        self.modulus * self.a.exponent()
    }
}

/// Structure constants of `H = k^A #^τ_σ kF` on the basis `e_s # x`,
/// index `s·|F| + x`.
#[derive(Clone, Debug)]
pub struct BicrossedHopf {
    pub data: ExtensionData,
    na: usize,
    nf: usize,
    /// `e_i e_j = ζ_N^c e_k`, or zero.
    mult: Vec<Option<(u32, u32)>>,
    /// `Δ(e_k) = Σ ζ_N^c e_i ⊗ e_j`.
    comult: Vec<Vec<(u32, u32, u32)>>,
    counit: Vec<bool>,
    unit: Vec<usize>,
}

/// Dense element of `H` (or `H*`) over a cyclotomic field.
pub type HVec = Vec<CycloNum>;

impl BicrossedHopf {
    pub fn build(data: ExtensionData) -> BicrossedHopf {
        let na = data.a.order();
        let nf = data.mp.f.order();
        let dim = na * nf;
        let mp = &data.mp;
        let (a, f) = (&mp.gamma, &mp.f);
        let idx = |s: usize, x: usize| s * nf + x;
        let mut mult = vec![None; dim * dim];
        for s in 0..na {
            for x in 0..nf {
                let t = mp.left(s, x);
                for y in 0..nf {
                    mult[idx(s, x) * dim + idx(t, y)] =
                        Some((idx(s, f.mul(x, y)) as u32, data.sigma.exp(s, x, y)));
                }
            }
        }
        let mut comult = vec![Vec::with_capacity(na); dim];
        for s in 0..na {
            for x in 0..nf {
                for h in 0..na {
                    let g = a.mul(s, a.inv(h));
                    comult[idx(s, x)].push((
                        idx(g, mp.right(h, x)) as u32,
                        idx(h, x) as u32,
                        data.tau.exp(x, g, h),
                    ));
                }
                comult[idx(s, x)].sort_unstable();
            }
        }
        let counit = (0..dim).map(|i| i / nf == a.identity()).collect();
        let unit = (0..na).map(|s| idx(s, f.identity())).collect();
        BicrossedHopf {
            data,
            na,
            nf,
            mult,
            comult,
            counit,
            unit,
        }
    }

    pub fn dim(&self) -> usize {
        self.na * self.nf
    }

    pub fn modulus(&self) -> u32 {
        self.data.modulus
    }

    pub fn field_modulus(&self) -> u32 {
        self.data.field_modulus()
    }

    pub fn index(&self, s: usize, x: usize) -> usize {
        s * self.nf + x
    }

    /// `(s, x)` of a basis index.
    pub fn pair(&self, i: usize) -> (usize, usize) {
        (i / self.nf, i % self.nf)
    }

    pub fn a_order(&self) -> usize {
        self.na
    }

    pub fn f_order(&self) -> usize {
        self.nf
    }

    #[inline]
    pub fn mult_basis(&self, i: usize, j: usize) -> Option<(usize, u32)> {
        self.mult[i * self.dim() + j].map(|(k, c)| (k as usize, c))
    }

    pub fn comult_basis(&self, k: usize) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.comult[k].iter().map(|&(i, j, c)| (i as usize, j as usize, c))
    }

    pub fn counit_basis(&self, i: usize) -> bool {
        self.counit[i]
    }

    pub fn unit_terms(&self) -> &[usize] {
        &self.unit
    }

    /// `ζ_N^c` as an element of `Q(ζ_K)`, `N | K`.
    pub fn scalar(&self, c: u32, k: u32) -> CycloNum {
        let r = RootExp::new(self.modulus(), c as i64).embed(k).expect("field modulus is a multiple of N");
        CycloNum::from_root(k, r).expect("matching modulus")
    }

    pub fn zero_vec(&self, k: u32) -> HVec {
        vec![CycloNum::zero(k); self.dim()]
    }

    pub fn basis_vec(&self, i: usize, k: u32) -> HVec {
        let mut v = self.zero_vec(k);
        v[i] = CycloNum::one(k);
        v
    }

    pub fn unit_vec(&self, k: u32) -> HVec {
        let mut v = self.zero_vec(k);
        for &i in &self.unit {
            v[i] = CycloNum::one(k);
        }
        v
    }

    pub fn mul_vec(&self, u: &HVec, v: &HVec) -> HVec {
        let k = u.first().map_or(1, CycloNum::modulus);
        let mut out = self.zero_vec(k);
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                if let Some((m, c)) = self.mult_basis(i, j) {
                    let term = &(ui * vj) * &self.scalar(c, k);
                    out[m] += &term;
                }
            }
        }
        out
    }

    /// `Δ(v)` as a map from basis pairs to coefficients.
    pub fn comult_vec(&self, v: &HVec) -> HashMap<(usize, usize), CycloNum> {
        let k = v.first().map_or(1, CycloNum::modulus);
        let mut out: HashMap<(usize, usize), CycloNum> = HashMap::new();
        for (m, vm) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (i, j, c) in self.comult_basis(m) {
                let term = vm * &self.scalar(c, k);
                out.entry((i, j))
                    .and_modify(|e| *e += &term)
                    .or_insert(term);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn counit_vec(&self, v: &HVec) -> CycloNum {
        let k = v.first().map_or(1, CycloNum::modulus);
        let mut acc = CycloNum::zero(k);
        for (i, vi) in v.iter().enumerate() {
            if self.counit[i] {
                acc += vi;
            }
        }
        acc
    }
}

/// Exact accumulator for sums of roots of unity keyed by basis tuples.
pub(crate) struct RootSums<K> {
    modulus: u32,
    sums: HashMap<K, Vec<i64>>,
}

impl<K: Hash + Eq + Ord + Clone> RootSums<K> {
    pub(crate) fn new(modulus: u32) -> Self {
        RootSums {
            modulus,
            sums: HashMap::new(),
        }
    }

    pub(crate) fn add(&mut self, key: K, exponent: u32, sign: i64) {
        let n = self.modulus as usize;
        self.sums.entry(key).or_insert_with(|| vec![0; n])[exponent as usize % n] += sign;
    }

    /// Smallest key whose accumulated value is nonzero.
    pub(crate) fn first_nonzero(&self) -> Option<K> {
        let mut keys: Vec<&K> = self
            .sums
            .iter()
            .filter(|(_, v)| v.iter().any(|&c| c != 0))
            .map(|(k, _)| k)
            .collect();
        keys.sort();
        keys.into_iter()
            .find(|k| {
                let raw: Vec<BigRational> = self.sums[*k]
                    .iter()
                    .map(|&c| BigRational::from_integer(BigInt::from(c)))
                    .collect();
                !CycloNum::reduce(self.modulus, &raw).is_zero()
            })
            .cloned()
    }
}
