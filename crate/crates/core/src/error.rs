use thiserror::Error;

/// Errors raised by the algebra kernel and the constructions built on it.
///
/// The `Display` form always starts with the variant name so that command
/// line front ends can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("MixedRings: operands live in {0} and {1}")]
    MixedRings(String, String),
    #[error("NotAUnit: {0}")]
    NotAUnit(String),
    #[error("NotSupported: {0}")]
    NotSupported(String),
    #[error("InvalidRing: {0}")]
    InvalidRing(String),
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("BadShape: {0}")]
    BadShape(String),
    #[error("TruncationTooSmall: r = {r} exceeds t = {t}")]
    TruncationTooSmall { r: usize, t: usize },
    #[error("PreconditionFailed: {0}")]
    PreconditionFailed(String),
    #[error("SizeMismatch: {0}")]
    SizeMismatch(String),
    #[error("NotInverse: product is not the identity")]
    NotInverse,
    #[error("AlreadyLinear: matrix has degree {0}")]
    AlreadyLinear(usize),
    #[error("NotUnipotentAtZero: value at X = 0 is not the identity")]
    NotUnipotentAtZero,
    #[error("NotNilpotent: no vanishing power up to exponent {bound}")]
    NotNilpotent { bound: usize },
    #[error("NotHomogeneous: {0}")]
    NotHomogeneous(String),
    #[error("Internal: {0}")]
    Internal(String),
}

impl Error {
    /// The bare variant name, e.g. `"NotAUnit"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MixedRings(..) => "MixedRings",
            Error::NotAUnit(_) => "NotAUnit",
            Error::NotSupported(_) => "NotSupported",
            Error::InvalidRing(_) => "InvalidRing",
            Error::Parse(_) => "ParseError",
            Error::BadShape(_) => "BadShape",
            Error::TruncationTooSmall { .. } => "TruncationTooSmall",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::SizeMismatch(_) => "SizeMismatch",
            Error::NotInverse => "NotInverse",
            Error::AlreadyLinear(_) => "AlreadyLinear",
            Error::NotUnipotentAtZero => "NotUnipotentAtZero",
            Error::NotNilpotent { .. } => "NotNilpotent",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
