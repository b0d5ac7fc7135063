use thiserror::Error;

/// Every failure the library can report.
///
/// The CLI surfaces [`Error::name`] verbatim, so variant names are part of the
/// wire contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires a finite field")]
    NotFinite,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid frame: {reason} (witness a = {a}, b = {b})")]
    InvalidFrame { reason: String, a: String, b: String },
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("duplicate point")]
    DuplicatePoint,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("point lies in the P-closure of the given set")]
    NotSeparable,
    #[error("point set is not P-independent")]
    NotPIndependent,
    #[error("ideal of zeros is not two-sided, quotient is not a ring")]
    NotARing,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::RingMismatch => "RingMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotFinite => "NotFinite",
            Error::InvalidRing(_) => "InvalidRing",
            Error::InvalidFrame { .. } => "InvalidFrame",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::DuplicatePoint => "DuplicatePoint",
            Error::NoSolution => "NoSolution",
            Error::NotSeparable => "NotSeparable",
            Error::NotPIndependent => "NotPIndependent",
            Error::NotARing => "NotARing",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse(_) => "Parse",
        }
    }

    /// Malformed input, as opposed to a well-formed request the mathematics rejects.
    pub fn is_malformed_input(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
