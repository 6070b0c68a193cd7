use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("singular Weierstrass equation (discriminant is zero)")]
    SingularCurve,

    #[error("inadmissible u ({0}); need a != 0 and 2b - a1*a != 0")]
    InadmissibleU(String),

    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("curve has bad reduction at {0}")]
    BadReduction(u64),

    #[error("curve is not integral at {0}")]
    NotIntegral(u64),

    #[error("inconsistent classification: {0}")]
    Inconsistent(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
