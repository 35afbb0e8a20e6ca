//! Toolkit for linear systems whose state variables update randomly and
//! asynchronously.
//!
//! The library covers three workflows:
//!
//! * [`sim`] — seeded simulation of the random asynchronous state recursion,
//!   including ensembles for fixed-point convergence studies;
//! * [`stability`] — construction of the covariance-evolution operators and
//!   exact mean-square stability verdicts, steady-state covariances, and
//!   `(p, q)` stability maps;
//! * [`sysid`] — moment-based identification of an unknown randomized system
//!   (parameters, update probability, noise variance) from a single
//!   input/state trajectory, plus an error-decay benchmark harness.
//!
//! [`model`] holds the shared domain types, [`markov`] the impulse-response
//! transforms between the underlying and the averaged system, and [`io`] the
//! CSV/JSON formats used by the command line front end.

pub mod error;
pub mod fixtures;
pub mod io;
pub mod markov;
pub mod model;
pub mod sim;
pub mod stability;
pub mod sysid;

pub use error::{Error, Result};

/// Condition-number ceiling shared by the dense solves (`I - S`, `T`, `C0`).
pub const COND_LIMIT: f64 = 1e12;
