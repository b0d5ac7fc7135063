//! Free skew polynomial rings over division rings, with evaluation, P-closed
//! sets, Vandermonde matrices and Lagrange interpolation.

pub mod algebra;
pub mod error;
pub mod frame;
pub mod skewring;
pub mod evaluation;
pub mod exact_linalg;
pub mod geometry;
pub mod interpolation;

pub use error::{Error, Result};
