//! Error type shared by all modules.

use thiserror::Error;

use crate::model::{Trajectory, ValidationReport};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Wraps an error with the pipeline stage that produced it.
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("validation failed: {0}")]
    Invalid(ValidationReport),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },

    /// The state left the overflow guard; `partial` holds the trajectory up
    /// to the last finite step when the caller kept it.
    #[error("simulation diverged at step {step}: state norm {norm:.3e} exceeds overflow guard")]
    Diverged {
        step: usize,
        norm: f64,
        partial: Option<Box<Trajectory>>,
    },

    #[error("covariance operator dimension {dim} exceeds the size cap {cap}")]
    OperatorTooLarge { dim: usize, cap: usize },

    #[error("eigenvalue iteration did not converge for a {dim}x{dim} matrix")]
    EigenDidNotConverge { dim: usize },

    #[error("matrix has non-finite entries")]
    NonFinite,

    #[error("system not mean-square stable: rho = {rho:.6}")]
    NotMeanSquareStable { rho: f64 },

    #[error("{what} is ill-conditioned: cond = {cond:.3e} exceeds {limit:.0e}")]
    IllConditioned {
        what: &'static str,
        cond: f64,
        limit: f64,
    },

    #[error("singular {what}")]
    Singular { what: &'static str },

    #[error("unidentifiable: M2 proportional to identity (denominator {denom:.3e}, guard {guard:.3e})")]
    Unidentifiable { denom: f64, guard: f64 },

    #[error("Markov horizon K = {k} exceeds {max} (binomial overflow guard)")]
    HorizonTooLarge { k: usize, max: usize },
}

impl Error {
    /// Attach a pipeline stage label.
    pub fn at_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// True for errors caused by malformed or invalid input, as opposed to
    /// numerical failures on valid input.
    pub fn is_validation(&self) -> bool {
        match self {
            Error::Stage { source, .. } => source.is_validation(),
            Error::Invalid(_) | Error::InvalidArgument(_) | Error::Parse { .. } => true,
            _ => false,
        }
    }
}
