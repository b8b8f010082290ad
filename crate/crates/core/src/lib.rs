//! Exact construction, verification and classification of the calibrated
//! irreducible modules of the degenerate affine Hecke algebra of type
//! G(ℓ,1,n).
//!
//! Modules are indexed by ℓ-skew shapes ([`shapes::SkewShape`]) and built in a
//! seminormal basis of standard tableaux over the cyclotomic field
//! ([`cyclo::CycNumber`]). [`classify::reconstruct`] inverts the map from
//! tableaux to weights.

pub mod classify;
pub mod cyclo;
pub mod error;
pub mod grpalg;
pub mod matrix;
pub mod modules;
pub mod shapes;
pub mod suite;

pub use cyclo::{CycNumber, Rational};
pub use error::{Error, ErrorClass, Result};
pub use matrix::Matrix;
pub use shapes::{SkewShape, Tableau, Weight};
