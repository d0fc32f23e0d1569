//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by truth-table construction and the analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: u32, found: u32 },

    #[error("encoded function has wrong length: expected {expected} characters, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid character {ch:?} at position {pos}")]
    InvalidCharacter { ch: char, pos: usize },

    #[error("integer does not fit a {arity}-variable truth table")]
    IntegerOutOfRange { arity: u32 },

    #[error("variable index {variable} out of range for arity {arity}")]
    VariableOutOfRange { variable: u32, arity: u32 },

    #[error("insert position {position} out of range for arity {arity}")]
    PositionOutOfRange { position: u32, arity: u32 },

    #[error("arity {arity} too small here (minimum {min})")]
    ArityTooSmall { arity: u32, min: u32 },

    #[error("arity {arity} too large here (maximum {max})")]
    ArityTooLarge { arity: u32, max: u32 },

    #[error("full enumeration of {arity}-variable functions is not supported (maximum arity {max})")]
    EnumerationTooLarge { arity: u32, max: u32 },

    #[error("exhaustive census supports arity up to {max}, got {arity}; generate from the previous arity instead")]
    CensusTooLarge { arity: u32, max: u32 },

    #[error("generation from arity {arity} would enumerate all {arity}-variable functions; supported up to arity {max}")]
    GenerationTooLarge { arity: u32, max: u32 },

    #[error("source set is not a complete canalizing family: {reason}")]
    InvalidSourceSet { reason: &'static str },

    #[error("function must have exactly one minority bit")]
    NotSingleMinorityBit,

    #[error("sub-map shapes or residual labels differ")]
    ShapeMismatch,

    #[error("axis has no remaining split: block is a single line")]
    AxisExhausted,

    #[error("NCF histogram disagrees with the matrix recursion")]
    HistogramDisagreement(Box<crate::ncf::HistogramMismatch>),
}

pub type Result<T> = std::result::Result<T, Error>;
