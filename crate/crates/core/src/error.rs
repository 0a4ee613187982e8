use thiserror::Error;

use crate::exactla::FieldSpec;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("entry {value} does not belong to {field}")]
    ForeignEntry { field: FieldSpec, value: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("{0} is not a prime that fits in a machine word")]
    NotPrime(u64),

    #[error("{0} has no square root of -1")]
    NoImaginaryUnit(FieldSpec),

    #[error("coefficient {value} cannot be represented in {field}")]
    Unrepresentable { field: FieldSpec, value: String },

    #[error("letter {letter} out of range for {generators} generators")]
    LetterOutOfRange { letter: usize, generators: usize },

    #[error("index {index} out of range for degree {degree} with {generators} generators")]
    IndexOutOfRange {
        index: usize,
        degree: usize,
        generators: usize,
    },

    #[error("generator count mismatch: {0} vs {1}")]
    GeneratorMismatch(usize, usize),

    #[error("degree {requested} is outside the computed range 0..={available}")]
    DegreeOutOfRange { requested: usize, available: usize },

    #[error("resource budget exceeded: {what} needs {requested} cells, budget is {limit}")]
    BudgetExceeded { what: String, requested: u128, limit: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("complex invariant violated: {0}")]
    ComplexInvariant(String),

    #[error("not Frobenius-eligible: {0}")]
    NotFrobenius(String),

    #[error("vector is not in the subspace: {0}")]
    NotInSubspace(String),
}
