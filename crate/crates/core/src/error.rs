use thiserror::Error;

/// Errors raised by the counting routines.
///
/// Every variant carries a human readable description of the violated
/// precondition so the CLI can report it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("double factorial of even argument {0} is not supported")]
    EvenDoubleFactorial(i64),
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("not a pairing: {0}")]
    InvalidPairing(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inexact division: {0}")]
    NonIntegral(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("malformed substructure: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
