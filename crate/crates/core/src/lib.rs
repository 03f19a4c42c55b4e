//! Numerical periods and Bergman kernels of degenerating hyperelliptic
//! curves, with a sweep harness that checks the expected asymptotic laws.

pub mod algebra;
pub mod error;
mod linalg;
pub mod quadrature;

pub use error::{Error, Result};
