//! Error types shared across the engine.

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CadError {
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    #[error("degree in the working variable is too low")]
    DegreeTooLow,

    #[error("equational constraint has a factor free of the main variable")]
    ECNotInMainVariable,

    #[error("input is not well-oriented (nullification on cell {cell:?} by {poly})")]
    NotWellOriented { cell: Vec<usize>, poly: String },

    #[error("layer count {given} out of range 1..={max}")]
    InvalidLayer { given: usize, max: usize },

    #[error("results come from different constructions")]
    ProvenanceMismatch,

    #[error("degenerate elimination while evaluating over an algebraic sample")]
    DegenerateElimination,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("malformed equational-constraint input: {0}")]
    MalformedEC(String),
}

pub type Result<T> = std::result::Result<T, CadError>;
