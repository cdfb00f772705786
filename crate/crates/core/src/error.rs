use thiserror::Error;

/// Errors raised anywhere in the monomial-ideal engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    ContextMismatch,

    #[error("exponent overflow (limit {limit})")]
    Overflow { limit: u32 },

    #[error("cap `{cap}` exceeded: needed {needed}, limit {limit}")]
    CapExceeded {
        cap: &'static str,
        needed: u64,
        limit: u64,
    },

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal (got the unit ideal)")]
    UnitIdeal,

    #[error("invalid prime: {0}")]
    InvalidPrime(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A checked statement produced a counterexample. Never expected to fire.
    #[error("criterion `{criterion}` violated: {detail}")]
    Falsified { criterion: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
