//! The one-parameter Hecke algebra `H_q(W, S)` with basis `T_w`.

pub mod algebra;
pub mod element;
pub mod induced;
pub mod syntax;

pub use algebra::{HeckeAlgebra, Idempotent, LinearCharacter};
pub use element::HeckeElement;
pub use induced::InducedVector;
