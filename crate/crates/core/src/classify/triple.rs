use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bicrossed::{grouplikes_structural, ExtensionData, GrouplikeSet, VerifiedHopf};
use crate::cocycle::{coboundary_solve, compute_f0, is_nondegenerate, SigmaTable, TauTable};
use crate::comodrep::{verify_ty_rules, CharacterRing, CoalgebraType, TyReport};
use crate::error::{HopfError, Result};
use crate::groups::{
    apply_matrix, group_iso_test_with_limit, transpose_matrix, ISO_ORDER_LIMIT, AbGroup, AutAction, FinGroup, MatchedPair,
};

/// A classification datum `(Γ, F, ξ)`: an action of `F` on the abelian
/// group `Γ` and a cocycle pair `(σ, τ)` representing `ξ`.
///
/// The Hopf algebra is built on the index group `A = Γ̂`, identified with
/// `Γ` through its invariant factors; `F` acts on `A` from the right by
/// the transposed matrices and `▷` is trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTriple {
    pub gamma: AbGroup,
    pub f: FinGroup,
    pub action: AutAction,
    pub sigma: SigmaTable,
    pub tau: TauTable,
    pub modulus: u32,
}

impl ClassTriple {
    /// The matched pair on `(A, F)`: `s ◁ x = Mᵀ_x s`, `▷` trivial.
    pub fn matched_pair(&self) -> MatchedPair {
        let a = &self.gamma;
        let nf = self.f.order();
        let transposed: Vec<Vec<Vec<u32>>> =
            self.action.maps.iter().map(|m| transpose_matrix(a, m)).collect();
        let left = (0..a.order())
            .map(|s| (0..nf).map(|x| apply_matrix(a, &transposed[x], s) as u32).collect())
            .collect();
        let right = (0..a.order()).map(|_| (0..nf as u32).collect()).collect();
        MatchedPair {
            gamma: a.to_fingroup(),
            f: self.f.clone(),
            left,
            right,
        }
    }

    pub fn extension_data(&self) -> Result<ExtensionData> {
        if self.sigma.modulus != self.modulus || self.tau.modulus != self.modulus {
            return Err(HopfError::ModulusMismatch(self.sigma.modulus, self.modulus));
        }
        ExtensionData::new(self.gamma.clone(), self.matched_pair(), self.sigma.clone(), self.tau.clone())
    }
}

/// One of the conditions checked by [`validate_triple`], in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TripleCondition {
    /// The matrices define an action of `F` on `Γ` by automorphisms.
    ActionValid,
    /// Table shapes, moduli and normalization.
    TablesWellFormed,
    /// The bicrossed product is a Hopf algebra.
    HopfAxioms,
    /// `[F : F_0] = 2`.
    IndexTwo,
    /// `τ_x` is nondegenerate for every `x ∉ F_0`.
    TauNondegenerate,
}

impl TripleCondition {
    pub const ALL: [TripleCondition; 5] = [
        TripleCondition::ActionValid,
        TripleCondition::TablesWellFormed,
        TripleCondition::HopfAxioms,
        TripleCondition::IndexTwo,
        TripleCondition::TauNondegenerate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TripleCondition::ActionValid => "action_valid",
            TripleCondition::TablesWellFormed => "tables_well_formed",
            TripleCondition::HopfAxioms => "hopf_axioms",
            TripleCondition::IndexTwo => "index_two",
            TripleCondition::TauNondegenerate => "tau_nondegenerate",
        }
    }
}

impl fmt::Display for TripleCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub condition: TripleCondition,
    pub status: Status,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub valid: bool,
    pub conditions: Vec<ConditionResult>,
    pub f0: Option<Vec<usize>>,
}

impl TripleReport {
    pub fn first_failure(&self) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.status == Status::Failed)
    }
}

struct Checker {
    conditions: Vec<ConditionResult>,
}

impl Checker {
    fn record(&mut self, condition: TripleCondition, outcome: std::result::Result<(), String>) -> bool {
        let ok = outcome.is_ok();
        self.conditions.push(ConditionResult {
            condition,
            status: if ok { Status::Passed } else { Status::Failed },
            detail: outcome.err(),
        });
        ok
    }

    fn finish(mut self, f0: Option<Vec<usize>>) -> TripleReport {
        for c in TripleCondition::ALL {
            if !self.conditions.iter().any(|r| r.condition == c) {
                self.conditions.push(ConditionResult {
                    condition: c,
                    status: Status::Skipped,
                    detail: None,
                });
            }
        }
        let valid = self.conditions.iter().all(|c| c.status == Status::Passed);
        TripleReport {
            valid,
            conditions: self.conditions,
            f0,
        }
    }
}

fn validate_inner(t: &ClassTriple) -> (TripleReport, Option<VerifiedHopf>) {
    let mut ck = Checker { conditions: Vec::new() };
    let action_ok = if t.action.actor != t.f || t.action.target != t.gamma {
        Err("action is declared for a different group".to_string())
    } else {
        AutAction::new(t.f.clone(), t.gamma.clone(), t.action.maps.clone())
            .map(|_| ())
            .map_err(|e| e.to_string())
    };
    if !ck.record(TripleCondition::ActionValid, action_ok) {
        return (ck.finish(None), None);
    }
    let data = match t.extension_data() {
        Ok(d) => d,
        Err(e) => {
            ck.record(TripleCondition::TablesWellFormed, Err(e.to_string()));
            return (ck.finish(None), None);
        }
    };
    ck.record(TripleCondition::TablesWellFormed, Ok(()));
    let hopf = match VerifiedHopf::from_data(data) {
        Ok(h) => h,
        Err(fail) => {
            let detail = fail
                .report
                .first_failure()
                .map(|r| {
                    let w = r.witness.as_ref().map(|w| w.detail.clone()).unwrap_or_default();
                    format!("{} fails: {w}", r.axiom)
                })
                .unwrap_or_default();
            ck.record(TripleCondition::HopfAxioms, Err(detail));
            return (ck.finish(None), None);
        }
    };
    ck.record(TripleCondition::HopfAxioms, Ok(()));
    let f0 = match compute_f0(&hopf.data.tau, &hopf.data.mp) {
        Ok(f0) => f0,
        Err(e) => {
            ck.record(TripleCondition::IndexTwo, Err(e.to_string()));
            return (ck.finish(None), Some(hopf));
        }
    };
    let nf = t.f.order();
    let index_ok = if f0.len() * 2 == nf {
        Ok(())
    } else {
        Err(format!("[F : F_0] = {nf}/{}", f0.len()))
    };
    if !ck.record(TripleCondition::IndexTwo, index_ok) {
        return (ck.finish(Some(f0)), Some(hopf));
    }
    let ag = t.gamma.to_fingroup();
    let degenerate: Vec<usize> = (0..nf)
        .filter(|x| !f0.contains(x))
        .filter(|&x| !is_nondegenerate(&t.tau.component(x, &ag)))
        .collect();
    let nd_ok = if degenerate.is_empty() {
        Ok(())
    } else {
        Err(format!("τ_x is degenerate for x ∈ {degenerate:?}"))
    };
    ck.record(TripleCondition::TauNondegenerate, nd_ok);
    (ck.finish(Some(f0)), Some(hopf))
}

/// Check a triple condition by condition; later conditions are skipped
/// once one fails.
pub fn validate_triple(t: &ClassTriple) -> TripleReport {
    validate_inner(t).0
}

/// The Hopf algebra of a valid triple with its structure checked.
#[derive(Clone, Debug)]
pub struct TripleConstruction {
    pub hopf: VerifiedHopf,
    pub report: TripleReport,
    pub f0: Vec<usize>,
    pub grouplikes: GrouplikeSet,
    /// `Γ ⋊ F_0` built directly from the action and the cocycles.
    pub crossed_product: FinGroup,
    pub ring: CharacterRing,
    pub coalgebra_type: CoalgebraType,
    pub ty: TyReport,
    /// `d` with `d² = |Γ|`.
    pub degree: usize,
}

/// Build `H` from a valid triple and check: `|G(H)| = dim H / 2`,
/// `G(H) ≅ Γ ⋊ F_0`, coalgebra type `(1, d²n; d, n)`, the fusion rules,
/// and that the common stabilizer is isomorphic to `Γ`.
pub fn construct_from_triple(t: &ClassTriple) -> Result<TripleConstruction> {
    construct_from_triple_with_limit(t, ISO_ORDER_LIMIT)
}

/// [`construct_from_triple`] with an explicit order limit for the
/// isomorphism test `G(H) ≅ Γ ⋊ F_0`.
pub fn construct_from_triple_with_limit(t: &ClassTriple, iso_limit: usize) -> Result<TripleConstruction> {
    let (report, hopf) = validate_inner(t);
    if !report.valid {
        let f = report.first_failure().expect("invalid report has a failure");
        return Err(HopfError::Precondition(format!(
            "triple fails {}: {}",
            f.condition,
            f.detail.clone().unwrap_or_default()
        )));
    }
    let hopf = hopf.expect("valid triple has a Hopf algebra");
    let f0 = report.f0.clone().expect("valid triple has F_0");
    let consistency = |msg: String| Err(HopfError::Consistency(msg));

    let grouplikes = grouplikes_structural(&hopf)?;
    if 2 * grouplikes.order() != hopf.dim() {
        return consistency(format!("|G(H)| = {} but dim H = {}", grouplikes.order(), hopf.dim()));
    }
    let crossed_product = crossed_product(t, &hopf, &f0)?;
    if group_iso_test_with_limit(&grouplikes.table, &crossed_product, iso_limit)?.is_none() {
        return consistency("G(H) is not isomorphic to Γ ⋊ F_0".into());
    }

    let ring = CharacterRing::new(&hopf)?;
    let coalgebra_type = ring.coalgebra_type();
    let n = f0.len();
    let degree = (1..=t.gamma.order()).find(|d| d * d == t.gamma.order()).unwrap_or(0);
    let expected = CoalgebraType(vec![(1, degree * degree * n), (degree, n)]);
    if coalgebra_type != expected {
        return consistency(format!("coalgebra type {coalgebra_type}, expected {expected}"));
    }
    for s in ring.simples.iter().filter(|s| !f0.contains(&s.orbit_rep)) {
        if s.dim != degree {
            return consistency(format!("fiber over {} carries a simple of dimension {}", s.orbit_rep, s.dim));
        }
    }
    let ty = verify_ty_rules(&hopf, &ring)?;
    if !ty.passed {
        return consistency(format!("fusion rules fail: {:?}", ty.failures));
    }
    if ty.stabilizer_invariants.as_deref() != Some(t.gamma.invariants()) {
        return consistency(format!(
            "common stabilizer has invariants {:?}, Γ has {:?}",
            ty.stabilizer_invariants,
            t.gamma.invariants()
        ));
    }
    Ok(TripleConstruction {
        hopf,
        report,
        f0,
        grouplikes,
        crossed_product,
        ring,
        coalgebra_type,
        ty,
        degree,
    })
}

/// `Γ ⋊_c F_0` with `(a, x)(b, y) = (a + x·b + c(x, y), xy)`, where
/// `c(x, y) = γ_x · (γ_y ∘ ◁x) · σ(x, y) / γ_{xy}` for chosen
/// `γ_x : A → μ` with `dγ_x = τ_x`. Element `(a, x)` has index
/// `a·|F_0| + position of x`.
pub fn crossed_product(t: &ClassTriple, hopf: &VerifiedHopf, f0: &[usize]) -> Result<FinGroup> {
    let a = &t.gamma;
    let ag = a.to_fingroup();
    let mp = &hopf.data.mp;
    let k = hopf.field_modulus();
    let lift = k / t.modulus;
    let na = a.order();
    let base: Vec<Vec<u32>> = f0
        .iter()
        .map(|&x| {
            let tau = t.tau.component(x, &ag).embed(k)?;
            coboundary_solve(&tau).ok_or_else(|| {
                HopfError::Consistency(format!("τ_{x} is not a coboundary although x ∈ F_0"))
            })
        })
        .collect::<Result<_>>()?;
    let pos = |x: usize| f0.iter().position(|&y| y == x);
    let inv = a.invariants();
    let mut c = vec![0usize; f0.len() * f0.len()];
    for (i, &x) in f0.iter().enumerate() {
        for (j, &y) in f0.iter().enumerate() {
            let xy = t.f.mul(x, y);
            let l = pos(xy).ok_or_else(|| HopfError::Consistency("F_0 is not closed".into()))?;
            let value = |s: usize| -> u32 {
                let v = base[i][s] as u64
                    + base[j][mp.left(s, x)] as u64
                    + (t.sigma.exp(s, x, y) * lift) as u64
                    + (k - base[l][s]) as u64;
                (v % k as u64) as u32
            };
            let tuple: Vec<i64> = (0..inv.len())
                .map(|g| {
                    let v = value(a.generator(g));
                    let step = k / inv[g];
                    if v % step != 0 {
                        return Err(HopfError::Consistency(format!("c({x}, {y}) has order beyond Γ")));
                    }
                    Ok((v / step) as i64)
                })
                .collect::<Result<_>>()?;
            let chi: Vec<u32> = tuple.iter().map(|&v| v as u32).collect();
            if (0..na).any(|s| a.char_eval(&chi, s, k).map(|r| r.exponent()) != Ok(value(s))) {
                return Err(HopfError::Consistency(format!("c({x}, {y}) is not a character")));
            }
            c[i * f0.len() + j] = a.index_of(&tuple);
        }
    }
    let m = f0.len();
    let rows: Vec<Vec<u32>> = (0..na * m)
        .map(|p| {
            let (ai, xi) = (p / m, p % m);
            (0..na * m)
                .map(|q| {
                    let (bi, yi) = (q / m, q % m);
                    let xb = t.action.apply(f0[xi], bi);
                    let s = ag.mul(ag.mul(ai, xb), c[xi * m + yi]);
                    let xy = pos(t.f.mul(f0[xi], f0[yi])).expect("closed");
                    (s * m + xy) as u32
                })
                .collect()
        })
        .collect();
    FinGroup::from_table(rows)
}
