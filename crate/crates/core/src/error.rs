use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Every variant maps to a stable machine-readable code through [`Error::code`],
/// which the command-line front end prints alongside the message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different ring contexts")]
    MixedContexts,
    #[error("element does not belong to this ring: {0}")]
    NotInRing(String),
    #[error("map {0} is not available in this context")]
    MapNotAvailable(&'static str),
    #[error("conjugator must be nonzero")]
    ZeroConjugator,
    #[error("not supported in this context: {0}")]
    Capability(String),
    #[error("context is infinite; enumeration impossible")]
    InfiniteContext,
    #[error("polynomial must be monic and nonzero")]
    NotMonic,
    #[error("polynomials are not coprime (Rq + Rf != R)")]
    NotCoprime,
    #[error("map undefined at this point: {0}")]
    UndefinedPoint(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid ring specification: {0}")]
    InvalidRing(String),
    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "E_DIV_ZERO",
            Error::MixedContexts => "E_MIXED_CTX",
            Error::NotInRing(_) => "E_NOT_IN_RING",
            Error::MapNotAvailable(_) => "E_MAP_UNAVAILABLE",
            Error::ZeroConjugator => "E_ZERO_CONJUGATOR",
            Error::Capability(_) => "E_CAPABILITY",
            Error::InfiniteContext => "E_INFINITE_CTX",
            Error::NotMonic => "E_NOT_MONIC",
            Error::NotCoprime => "E_NOT_COPRIME",
            Error::UndefinedPoint(_) => "E_UNDEFINED_POINT",
            Error::Precondition(_) => "E_PRECONDITION",
            Error::ShapeMismatch(_) => "E_SHAPE",
            Error::SingularMatrix => "E_SINGULAR",
            Error::InvalidRing(_) => "E_INVALID_RING",
            Error::InvariantBreach(_) => "E_INVARIANT",
        }
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
