use std::fmt;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation
    /// (for example `log_gamma` at a non-positive real, or weight exponents
    /// α ≤ −1).
    Domain(String),
    /// Two polynomials were combined although they are expressed in
    /// different bases.
    BasisMismatch,
    /// A hypergeometric series with the given upper parameters never
    /// terminates.
    NoTermination,
    /// A terminating hypergeometric series hit a zero lower parameter
    /// before the series terminated.
    LowerParameterPole,
    /// A matrix factorization failed (the matrix is not positive definite
    /// to working precision, or is otherwise singular).
    Factorization(String),
    /// An iterative eigenvalue computation exceeded its sweep budget.
    NonConvergence(String),
    /// A computation produced a NaN or infinity.
    NonFinite(String),
    /// A size or index precondition was violated.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::BasisMismatch => write!(f, "polynomial basis mismatch"),
            Error::NoTermination => {
                write!(f, "hypergeometric series has no terminating upper parameter")
            }
            Error::LowerParameterPole => {
                write!(f, "hypergeometric series hit a lower-parameter pole")
            }
            Error::Factorization(msg) => write!(f, "factorization failed: {msg}"),
            Error::NonConvergence(msg) => write!(f, "iteration did not converge: {msg}"),
            Error::NonFinite(msg) => write!(f, "non-finite result: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
