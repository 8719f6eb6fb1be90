use thiserror::Error;

/// Errors raised by crystal, path and Demazure computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("dimension mismatch: expected {expected} coefficients, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid rank {n} for {family} (minimum {min})")]
    InvalidRank {
        family: &'static str,
        n: usize,
        min: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element is not a member of the crystal: {0}")]
    Membership(String),

    #[error("unsupported weight: {0}")]
    UnsupportedWeight(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("closure exceeded the budget of {limit} elements")]
    Budget { limit: usize },

    #[error("condition failure: {0}")]
    ConditionFailure(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid schedule: {0}")]
    Schedule(String),
}

pub type Result<T, E = CrystalError> = std::result::Result<T, E>;
