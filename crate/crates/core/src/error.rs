use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not expandable at 0: denominator vanishes at q = 0")]
    NotExpandable,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not of finite type: {0}")]
    NotFiniteType(String),
    #[error("not of infinite type: {0}")]
    NotInfiniteType(String),
    #[error("radius insufficient: need {required}, ball radius is {available}")]
    RadiusInsufficient { required: usize, available: usize },
    #[error("memory guard: more than {cap} elements (complete up to length {radius_reached})")]
    MemoryGuard { cap: usize, radius_reached: usize },
    #[error("invalid element index {0}")]
    InvalidElement(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by ball radius or memory limits.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::RadiusInsufficient { .. } | Error::MemoryGuard { .. }
        )
    }
}
