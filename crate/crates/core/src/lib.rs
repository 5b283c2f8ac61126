//! Polytopes, Hasse diagrams and straightening for PBW-graded
//! representations of rectangular highest weight mωᵢ.

pub mod error;
pub mod exponent;
pub mod hasse;
pub mod paths;
pub mod polytope;
pub mod repmodels;
pub mod rootsys;
pub mod straighten;

pub use error::{Error, Result};
pub use rootsys::{CaseId, LieType, Series, Variant};
