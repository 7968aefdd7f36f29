use crate::interp::InterpError;
use crate::operators::Direction;
use crate::program::{ParseError, TransformError};

/// Errors raised by the operators and semantics.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("iteration did not converge within {limit} steps")]
    Fuse { limit: usize },
    #[error("step {step} of a {direction} iteration moved the wrong way")]
    Monotonicity { step: usize, direction: Direction },
    #[error("{what}: {size} atoms exceeds the limit of {limit}")]
    Limit { what: &'static str, size: usize, limit: usize },
    #[error("interpretation is not classical: `{atom}` has value {value}")]
    NotClassicalInterpretation { atom: String, value: String },
    #[error("{0} requires the four-valued bilattice")]
    FourOnly(&'static str),
    #[error("divergence: {0}")]
    Divergence(String),
}

impl Error {
    /// Process exit code: 1 for bad input, 2 for limits, 3 for broken invariants.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Fuse { .. } | Error::Limit { .. } => 2,
            Error::Monotonicity { .. } | Error::Divergence(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
