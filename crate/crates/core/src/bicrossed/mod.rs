//! The bicrossed product `H = k^A #^τ_σ kF`: structure constants, axiom
//! verification, antipode, group-likes, cocentrality and the dual algebra.
//!
//! Product and coproduct on the basis `e_s # x`:
//!
//! ```text
//! (e_s # x)(e_t # y) = [s ◁ x = t] σ_s(x, y) e_s # xy
//! Δ(e_s # x) = Σ_{gh = s} τ_x(g, h) e_g # (h ▷ x) ⊗ e_h # x
//! ```

mod antipode;
mod dual;
mod grouplikes;
mod structure;
mod verify;

pub use antipode::{solve_antipode, Antipode};
pub use dual::{comult_table, dual_algebra, StructAlgebra};
pub use grouplikes::{
    grouplikes_oracle, grouplikes_structural, is_grouplike, Grouplike, GrouplikeSet,
    ORACLE_DIM_LIMIT,
};
pub use structure::{BicrossedHopf, ExtensionData, HVec};
pub(crate) use structure::RootSums;
pub use verify::{
    check_fiber_structure, cocentral_witness, is_cocentral, verify_bialgebra, Axiom,
    AxiomResult, BialgebraReport, Witness,
};

use crate::error::{HopfError, Result};

/// Antipode of a bialgebra that passes [`verify_bialgebra`]; `Ok(None)`
/// when the identity has no convolution inverse.
pub fn compute_antipode(h: &BicrossedHopf) -> Result<Option<Antipode>> {
    let report = verify_bialgebra(h);
    if let Some(f) = report.first_failure() {
        return Err(HopfError::Precondition(format!(
            "not a bialgebra: {} fails",
            f.axiom
        )));
    }
    Ok(solve_antipode(h))
}

/// A bicrossed product whose bialgebra axioms and antipode were checked.
#[derive(Clone, Debug)]
pub struct VerifiedHopf {
    hopf: BicrossedHopf,
    pub report: BialgebraReport,
    pub antipode: Antipode,
}

impl std::ops::Deref for VerifiedHopf {
    type Target = BicrossedHopf;
    fn deref(&self) -> &BicrossedHopf {
        &self.hopf
    }
}

/// Why a datum failed to produce a Hopf algebra.
#[derive(Clone, Debug)]
pub struct VerificationFailure {
    pub report: BialgebraReport,
}

impl VerificationFailure {
    /// Name of the first failed axiom.
    pub fn axiom(&self) -> Axiom {
        self.report
            .first_failure()
            .map_or(Axiom::Antipode, |r| r.axiom)
    }
}

impl VerifiedHopf {
    /// Run every axiom check and solve for the antipode.
    pub fn verify(hopf: BicrossedHopf) -> std::result::Result<VerifiedHopf, VerificationFailure> {
        let mut report = verify_bialgebra(&hopf);
        if !report.passed() {
            return Err(VerificationFailure { report });
        }
        match solve_antipode(&hopf) {
            Some(antipode) => {
                report.results.push(AxiomResult {
                    axiom: Axiom::Antipode,
                    passed: true,
                    witness: None,
                });
                Ok(VerifiedHopf {
                    hopf,
                    report,
                    antipode,
                })
            }
            None => {
                report.results.push(AxiomResult {
                    axiom: Axiom::Antipode,
                    passed: false,
                    witness: Some(Witness {
                        basis: vec![],
                        detail: "no convolution inverse of the identity".into(),
                    }),
                });
                Err(VerificationFailure { report })
            }
        }
    }

    /// Build and verify in one step.
    pub fn from_data(data: ExtensionData) -> std::result::Result<VerifiedHopf, VerificationFailure> {
        VerifiedHopf::verify(BicrossedHopf::build(data))
    }

    pub fn hopf(&self) -> &BicrossedHopf {
        &self.hopf
    }
}
