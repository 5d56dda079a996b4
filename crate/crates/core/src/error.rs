//! Error type shared by all toolkit operations.

use alloc::vec::Vec;
use core::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes of configuration, estimation, and optimization routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scheme or schedule parameter violated its constraint (for example
    /// a non-positive perturbation half-width or sensitivity).
    InvalidParameter { what: &'static str, value: f64 },
    /// A truncation order fell outside the supported range.
    OrderOutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    /// The parameter dimension must be at least one.
    ZeroDimension,
    /// A vector argument did not match the objective dimension.
    DimensionMismatch { expected: usize, actual: usize },
    /// Exact enumeration over sign patterns is infeasible for this dimension.
    DimensionTooLarge { dim: usize, max: usize },
    /// The simulation budget cannot pay for a single iteration.
    BudgetTooSmall { budget: u64, required: u64 },
    /// An objective evaluation produced a non-finite value; carries the
    /// offending evaluation point.
    NonFiniteEvaluation { at: Vec<f64> },
    /// The iterate left the divergence guard region; carries the index of
    /// the failed iteration and the last finite iterate.
    Diverged {
        iteration: u64,
        last_theta: Vec<f64>,
    },
    /// The parameter-error metric is undefined because the initial point
    /// coincides with the optimum.
    DegenerateErrorMetric,
    /// The operation needs an analytic gradient the objective does not provide.
    MissingGradient,
    /// The operation is not defined for the given estimator kind.
    Unsupported { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { what, value } => {
                write!(f, "invalid {what}: {value}")
            }
            Error::OrderOutOfRange {
                what,
                value,
                min,
                max,
            } => write!(f, "{what} = {value} outside supported range {min}..={max}"),
            Error::ZeroDimension => write!(f, "dimension must be at least 1"),
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
            Error::DimensionTooLarge { dim, max } => {
                write!(f, "exact enumeration refused for dimension {dim} (max {max})")
            }
            Error::BudgetTooSmall { budget, required } => write!(
                f,
                "budget {budget} is below the {required} measurements one iteration needs"
            ),
            Error::NonFiniteEvaluation { at } => {
                write!(f, "objective returned a non-finite value at {at:?}")
            }
            Error::Diverged {
                iteration,
                last_theta,
            } => write!(
                f,
                "iterate diverged at iteration {iteration}; last finite point {last_theta:?}"
            ),
            Error::DegenerateErrorMetric => {
                write!(f, "parameter error undefined: initial point equals the optimum")
            }
            Error::MissingGradient => {
                write!(f, "objective does not expose an analytic gradient")
            }
            Error::Unsupported { what } => write!(f, "operation not supported: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
