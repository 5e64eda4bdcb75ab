use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    ContextMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("exponent `{0}` is not a nonnegative integer")]
    InvalidExponent(String),

    #[error("polynomial `{0}` is not homogeneous")]
    Inhomogeneous(String),

    #[error("quotient is not of finite length (Krull dimension {dimension})")]
    NotFiniteLength { dimension: i64 },

    #[error("torsion module has infinite length: Hilbert series denominator does not cancel (remaining exponent {exponent})")]
    InfiniteTorsion { exponent: usize },

    #[error("window too short, increase max_power: {0}")]
    FitUnstable(String),

    #[error("inconsistent data, internal error: {0}")]
    NonIntegralFit(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
