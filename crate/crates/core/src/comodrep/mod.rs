//! Simple comodules of a bicrossed product via Clifford theory, their
//! characters, fusion rules and normality tests.
//!
//! A comodule of `H` is a module over `H*`, which is a crossed product of
//! `k^F` by `A`. Simple modules are induced along each `▷`-orbit from
//! irreps of the stabilizer's twisted group algebra `k_{τ_x} A^x`.

mod characters;
mod monomial;
mod normality;
mod simples;
mod twisted;
mod ty;

pub use characters::{apply_antipode, coalgebra_type, CharacterRing, CoalgebraType, FusionRules, Side};
pub use monomial::MonomialMatrix;
pub use normality::{normality_alternativo, normality_chardual, NormalityVerdict};
pub use simples::{
    check_comodule, clifford_simples, clifford_simples_with_limit, SimpleComodule, CLIFFORD_DIM_LIMIT,
};
pub use twisted::{check_twisted_rep, twisted_irreps, TwistedIrrep, TwistedIrreps};
pub use ty::{admits_nondegenerate_cocycle, verify_ty_rules, TyReport};

#[cfg(test)]
mod tests;
