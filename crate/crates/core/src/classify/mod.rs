//! Classification triples `(Γ, F, ξ)` for Hopf algebras with a group-like
//! subalgebra of index two: validation, construction, enumeration, and
//! the Tambara–Yamagami specialization for `|F| = 2`.

mod enumerate;
mod tambara;
mod triple;

pub use enumerate::{enumerate_triples, Enumeration, EnumerationBudget, EQUIVALENCE_NOTE};
pub use tambara::{ty_specialize, TyCheck, TyInvariant};
pub use triple::{
    construct_from_triple, construct_from_triple_with_limit, crossed_product, validate_triple, ClassTriple, ConditionResult, Status,
    TripleCondition, TripleConstruction, TripleReport,
};

#[cfg(test)]
mod tests;
