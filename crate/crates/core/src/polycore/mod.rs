//! Exact polynomial containers: multi-affine polynomials keyed by variable
//! subsets, sparse multivariate polynomials keyed by exponent vectors, dense
//! univariate polynomials, and axis-aligned boxes.

mod axisbox;
pub mod json;
mod multiaffine;
mod sparse;
mod univariate;

pub use axisbox::AxisBox;
pub use multiaffine::{Degree, MultiAffine, MAX_VARS};
pub use sparse::Sparse;
pub use univariate::Univariate;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {n_vars} variables")]
    IndexOutOfRange { index: usize, n_vars: usize },
    #[error("multi-affine polynomials support at most {MAX_VARS} variables (got {0})")]
    TooManyVariables(usize),
    #[error("factors share variables {0:?}; product would not be multi-affine")]
    OverlappingSupports(Vec<usize>),
    #[error("exponent vector has length {got}, expected {expected}")]
    BadExponentVector { expected: usize, got: usize },
    #[error("interval [{lo}, {hi}] on axis {axis} is reversed")]
    ReversedInterval { axis: usize, lo: String, hi: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("malformed polynomial input: {0}")]
    Parse(String),
}
