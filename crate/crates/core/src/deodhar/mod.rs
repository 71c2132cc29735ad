//! The Deodhar complex of a Coxeter system: construction, the chain
//! property, homology for finite `W` and acyclicity certificates for
//! infinite `W`.

pub mod acyclic;
pub mod complex;
pub mod homology;
pub mod sign;

pub use acyclic::{
    certify_with_retry, verify_truncated_acyclicity, AcyclicityReport, DegreeCertificate,
};
pub use complex::{Cell, ComplexBasis, DeodharComplex, MAX_DENSE_ENTRIES};
pub use homology::{Action, HomologyReport};
pub use sign::SignMap;
