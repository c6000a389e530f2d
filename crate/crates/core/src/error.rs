use thiserror::Error;

use crate::algebra::LeibnizReport;
use crate::exactla::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("structure constants violate the Leibniz identity: {0}")]
    NotLeibniz(LeibnizReport),
    #[error("algebras are over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("linear map does not preserve the bracket: {0}")]
    NotAMorphism(String),
    #[error("action axiom fails: {0}")]
    ActionAxiom(String),
    #[error("crossed module axiom fails: {0}")]
    CrossedModuleAxiom(String),
    #[error("crossed modules have different base algebras")]
    BaseMismatch,
    #[error("construction is not well defined: {0}")]
    WellDefinedness(String),
    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("chain space of dimension {dim} exceeds the limit {limit}")]
    CapacityExceeded { dim: usize, limit: usize },
    #[error("algebra is not a Lie algebra")]
    NotLie,
    #[error("algebra is not perfect")]
    NotPerfect,
    #[error("ideal is not central")]
    NotCentral,
    #[error("extension has no recorded splitting")]
    MissingSplitting,
    #[error("invalid extension: {0}")]
    BadExtension(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
