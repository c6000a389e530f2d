//! Exact linear algebra over ℚ and prime fields.

mod exact;
mod matrix;
mod scalar;
mod space;

pub use exact::{check_exact, check_exact_labeled, snake_connecting, Connecting, Ladder};
pub use matrix::{
    add, axpy, is_zero_vector, kron, rref_rows, scale, sub, unit_vector, zero_vector, Matrix,
    Vector,
};
pub use scalar::{FieldSpec, Rational, Scalar};
pub use space::{
    image, induced_map, kernel, quotient, LinearMap, QuotientSpace, SpanBuilder, Subquotient,
    Subspace,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("cannot parse field descriptor {0:?}")]
    BadField(String),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("vector does not lie in the subspace")]
    NotContained,
    #[error("maps {position} and {} are not composable", position + 1)]
    NotComposable { position: usize },
    #[error("the {0} square of the ladder does not commute")]
    NonCommutingSquare(&'static str),
    #[error("ladder precondition failed: {0}")]
    ExactnessPrereqFailed(&'static str),
}

/// `rref` as a free function: the unique reduced row-echelon form and its pivots.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    m.rref()
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
