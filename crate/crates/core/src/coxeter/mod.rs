//! Coxeter systems: parsing, the geometric representation, enumeration of
//! `W`, parabolic machinery and Poincaré series.

pub mod ball;
pub mod classify;
pub mod geometric;
pub mod parabolic;
pub mod poincare;
pub mod system;

pub use ball::{CayleyBall, ElementRef, Extent, DEFAULT_MEMORY_CAP};
pub use classify::{
    classify_component, components, finite_decomposition, group_order, is_finite_type, FiniteType,
};
pub use geometric::{GeometricRep, RepMatrix};
pub use parabolic::{
    coset_reps, left_coset_reps, parabolic_decompose, parabolic_subgroup, ParabolicDecomposition,
};
pub use poincare::{poincare_exact, poincare_from_degrees, poincare_truncated, PoincareTable};
pub use system::{catalog, catalog_names, parse_coxeter, CoxeterMatrix, GenSet, Label};
