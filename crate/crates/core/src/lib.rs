//! Exact tools for counting connected components of real hypersurfaces cut
//! out by multi-affine and symmetric polynomials, together with the
//! symmetric-group machinery (hook lengths, characters, permutation-module
//! multiplicities) used to reason about them.
//!
//! The polynomial types are generic over a [`Scalar`] coefficient type. All
//! experiments run over exact rationals; the aliases below name those
//! instantiations.

pub mod polycore;
pub mod repr;
pub mod scalar;
pub mod symfun;
pub mod topo;

pub use polycore::{AxisBox, MultiAffine, PolyError, Sparse, Univariate};
pub use scalar::{parse_rational, rational_to_string, Scalar};

/// Exact rational numbers, the coefficient field for every experiment.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers.
pub type Integer = num_bigint::BigInt;

pub type MultiAffinePoly = MultiAffine<Rational>;
pub type SparsePoly = Sparse<Rational>;
pub type UnivariatePoly = Univariate<Rational>;
pub type RationalBox = AxisBox<Rational>;
