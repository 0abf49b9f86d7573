//! Exact arithmetic: roots of unity, cyclotomic fields, and linear algebra
//! over cyclotomic fields and `Z/N`.

mod cyclo;
mod linalg;
mod root;
mod zn;

pub use cyclo::{cyclotomic_polynomial, CycloField, CycloNum};
pub use linalg::{EchelonSpan, 
    invert_cyclo, mat_vec, nullspace_cyclo, rank_cyclo, solve_linear_cyclo, CycloMatrix,
};
pub use root::RootExp;
pub use zn::{diagonalize, solve_affine_zn, solve_diagonalized, Diagonalization, QuotientModule, ZnSolution};
