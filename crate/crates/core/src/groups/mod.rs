//! Finite groups: abelian groups by invariant factors, arbitrary groups by
//! Cayley table, automorphism actions, matched pairs and isomorphism tests.

mod abelian;
mod action;
mod fingroup;
mod iso;
mod matched;

pub use abelian::AbGroup;
pub use action::{
    apply_matrix, automorphisms, enumerate_actions, is_endomorphism, matrix_permutation,
    transpose_matrix, AutAction,
};
pub use fingroup::{FinGroup, GroupTable};
pub use iso::{group_iso_test, group_iso_test_with_limit, ISO_ORDER_LIMIT};
pub use matched::{CheckReport, MatchedPair};
