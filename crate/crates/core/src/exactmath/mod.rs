//! Exact arithmetic: rationals, polynomials, rational functions, cyclotomic
//! residues and linear algebra over `Z[q]` and `Q(q)`.

pub mod cyclo;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod scalar;

pub use cyclo::{CycloElement, CyclotomicRing};
pub use matrix::{
    field_rank, fraction_free_rank, kernel_basis, rank_over_fraction_field, row_reduce, solve,
    solve_in_image, specialize_matrix, Echelon, Matrix, PivotCost,
};
pub use poly::{cyclotomic_polynomial, Polynomial};
pub use ratfunc::{clear_denominators, RationalFunction};
pub use scalar::{format_rational, parse_rational, Field, FromInteger, Ring};
