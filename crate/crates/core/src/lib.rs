//! Exact computations with Coxeter groups and their one-parameter Hecke
//! algebras: enumeration, the Deodhar complex, Hattori-Stallings ranks and
//! the Euler characteristic `chi_H = 1 / p_(W,S)(q)`.
//!
//! Arithmetic is generic over the coefficient ring ([`exactmath::Ring`]);
//! the aliases below fix the concrete types used throughout.

pub mod coxeter;
pub mod deodhar;
pub mod euler;
pub mod exactmath;
pub mod hecke;
pub mod report;
pub mod suite;

mod error;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use exactmath::RationalFunction;

/// Polynomials in `q` with integer coefficients.
pub type IntPolynomial = exactmath::Polynomial<BigInt>;
/// Polynomials in `q` with rational coefficients.
pub type RatPolynomial = exactmath::Polynomial<BigRational>;
/// Cyclotomic integers `Z[y]/Phi_n`.
pub type IntCyclo = exactmath::CycloElement<BigInt>;
/// Cyclotomic field elements `Q[y]/Phi_n`.
pub type Cyclo = exactmath::CycloElement<BigRational>;
/// Matrices over `Z[q]`.
pub type PolyMatrix = exactmath::Matrix<IntPolynomial>;
/// Matrices over `Q`.
pub type RatMatrix = exactmath::Matrix<BigRational>;
/// Matrices over `Q(q)`.
pub type RfMatrix = exactmath::Matrix<RationalFunction>;
