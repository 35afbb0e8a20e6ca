//! Domain types shared by the simulator, the stability analysis, and the
//! identification pipeline, together with their validation.
//!
//! Values are plain data: constructors never reject, and [`validate_system`]
//! reports every violated invariant instead of failing on the first one.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// Numerical slack for symmetry and semidefiniteness checks.
pub const EPS_SYM: f64 = 1e-10;

/// The pair `(A, B)` of the underlying synchronous system
/// `x_{t+1} = A x_t + B u_t + w_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct LtiSystem {
    /// State-transition matrix, `d_x x d_x`.
    pub a: DMatrix<f64>,
    /// Input matrix, `d_x x d_u`.
    pub b: DMatrix<f64>,
}

impl LtiSystem {
    pub fn new(a: DMatrix<f64>, b: DMatrix<f64>) -> Self {
        Self { a, b }
    }

    pub fn state_dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn input_dim(&self) -> usize {
        self.b.ncols()
    }
}

/// Randomization parameters: per-coordinate update probability `p`, delay
/// parameter `q`, and maximum delay `h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsyncConfig {
    pub p: f64,
    pub q: f64,
    #[serde(default)]
    pub h: usize,
}

impl AsyncConfig {
    /// `p = q = 1`, `h = 0`: every coordinate updates with fresh data.
    pub fn synchronous() -> Self {
        Self { p: 1.0, q: 1.0, h: 0 }
    }

    /// Random updates without delays (`q = 1`, `h = 0`).
    pub fn randomized(p: f64) -> Self {
        Self { p, q: 1.0, h: 0 }
    }

    /// True when the delay distribution is degenerate at zero.
    pub fn is_randomized(&self) -> bool {
        self.q == 1.0 && self.h == 0
    }
}

/// `P[k = tau]` for `tau = 0..=h`: geometric with parameter `q`, truncated by
/// moving all remaining mass to `tau = h`.
pub fn delay_pmf(config: &AsyncConfig) -> Vec<f64> {
    let q = config.q;
    let h = config.h;
    let mut pmf = Vec::with_capacity(h + 1);
    for tau in 0..h {
        pmf.push(q * (1.0 - q).powi(tau as i32));
    }
    pmf.push((1.0 - q).powi(h as i32));
    pmf
}

/// Second-moment description of the exogenous signals: input covariance `U`
/// (symmetric PSD) and isotropic process-noise variance `sigma_w2`.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseSpec {
    pub u: DMatrix<f64>,
    pub sigma_w2: f64,
}

impl NoiseSpec {
    pub fn new(u: DMatrix<f64>, sigma_w2: f64) -> Self {
        Self { u, sigma_w2 }
    }

    /// Unit input covariance of the given dimension.
    pub fn unit(d_u: usize, sigma_w2: f64) -> Self {
        Self { u: DMatrix::identity(d_u, d_u), sigma_w2 }
    }
}

/// A time-indexed record `x_0, u_0, x_1, ..., u_{T-1}, x_T` from one
/// simulation or from ingested data.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub states: Vec<DVector<f64>>,
    pub inputs: Vec<DVector<f64>>,
}

impl Trajectory {
    /// Number of transitions `T`; `states` holds `T + 1` vectors.
    pub fn steps(&self) -> usize {
        self.inputs.len()
    }

    pub fn state_dim(&self) -> usize {
        self.states.first().map_or(0, |x| x.len())
    }

    pub fn input_dim(&self) -> usize {
        self.inputs.first().map_or(0, |u| u.len())
    }
}

/// One violated invariant, identified by the offending field.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub field: &'static str,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

/// Outcome of validation: empty means every invariant holds.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, field: &'static str, message: impl Into<String>) {
        self.violations.push(Violation { field, message: message.into() });
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        let mut first = true;
        for v in &self.violations {
            if !first {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

fn all_finite(m: &DMatrix<f64>) -> bool {
    m.iter().all(|v| v.is_finite())
}

/// Invariants of the dynamics alone (system shape and probabilities).
pub fn validate_dynamics(system: &LtiSystem, config: &AsyncConfig) -> ValidationReport {
    let mut report = ValidationReport::default();
    let a = &system.a;
    let b = &system.b;
    if a.nrows() == 0 {
        report.push("A", "A must have at least one row");
    }
    if a.nrows() != a.ncols() {
        report.push("A", format!("A must be square, got {}x{}", a.nrows(), a.ncols()));
    }
    if b.ncols() == 0 {
        report.push("B", "B must have at least one column");
    }
    if b.nrows() != a.nrows() {
        report.push("B", format!("B must have {} rows, got {}", a.nrows(), b.nrows()));
    }
    if !all_finite(a) {
        report.push("A", "A must have finite entries");
    }
    if !all_finite(b) {
        report.push("B", "B must have finite entries");
    }
    if !(config.p.is_finite() && config.p > 0.0 && config.p <= 1.0) {
        report.push("p", "p must lie in (0,1]");
    }
    if !(config.q.is_finite() && config.q > 0.0 && config.q <= 1.0) {
        report.push("q", "q must lie in (0,1]");
    }
    report
}

/// Invariants of the noise description, cross-checked against the input
/// dimension of `system`.
pub fn validate_noise(system: &LtiSystem, noise: &NoiseSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    let u = &noise.u;
    let d_u = system.input_dim();
    if u.nrows() != d_u || u.ncols() != d_u {
        report.push(
            "U",
            format!("U must be {d_u}x{d_u}, got {}x{}", u.nrows(), u.ncols()),
        );
    }
    if !all_finite(u) {
        report.push("U", "U must have finite entries");
    } else if u.nrows() == u.ncols() && u.nrows() > 0 {
        let asym = (u - u.transpose()).amax();
        if asym > EPS_SYM {
            report.push("U", "U must be symmetric");
        }
        let sym = (u + u.transpose()) * 0.5;
        let min_eig = sym
            .symmetric_eigenvalues()
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -EPS_SYM {
            report.push("U", "U must be positive semidefinite");
        }
    }
    if !(noise.sigma_w2.is_finite() && noise.sigma_w2 > 0.0) {
        report.push("sigma_w2", "sigma_w2 must be positive");
    }
    report
}

/// Full validation of a system description. Violations are data, not
/// failures: this never aborts on any input.
pub fn validate_system(
    system: &LtiSystem,
    config: &AsyncConfig,
    noise: &NoiseSpec,
) -> ValidationReport {
    let mut report = validate_dynamics(system, config);
    report.merge(validate_noise(system, noise));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn valid_inputs() -> (LtiSystem, AsyncConfig, NoiseSpec) {
        let system = LtiSystem::new(DMatrix::identity(2, 2), DMatrix::from_element(2, 1, 1.0));
        let noise = NoiseSpec::unit(1, 1.0);
        (system, AsyncConfig::synchronous(), noise)
    }

    #[test]
    fn validate_accepts_plainly_valid_inputs() {
        let (system, config, noise) = valid_inputs();
        let report = validate_system(&system, &config, &noise);
        assert!(report.is_ok(), "{report}");
    }

    #[test]
    fn validate_rejects_zero_update_probability() {
        let (system, mut config, noise) = valid_inputs();
        config.p = 0.0;
        let report = validate_system(&system, &config, &noise);
        assert!(report.violations.iter().any(|v| v.field == "p" && v.message == "p must lie in (0,1]"));
    }

    #[test]
    fn validate_rejects_indefinite_input_covariance() {
        let (system, config, mut noise) = valid_inputs();
        noise.u = DMatrix::from_element(1, 1, -0.5);
        let report = validate_system(&system, &config, &noise);
        assert!(report
            .violations
            .iter()
            .any(|v| v.message == "U must be positive semidefinite"));
    }

    #[test]
    fn validate_never_aborts_on_nonfinite_input() {
        let system = LtiSystem::new(
            DMatrix::from_element(2, 2, f64::NAN),
            DMatrix::from_element(2, 1, f64::INFINITY),
        );
        let config = AsyncConfig { p: f64::NAN, q: -3.0, h: 7 };
        let noise = NoiseSpec::new(DMatrix::from_element(1, 1, f64::NAN), f64::NAN);
        let report = validate_system(&system, &config, &noise);
        assert!(!report.is_ok());
    }

    #[test]
    fn delay_pmf_no_delay_when_q_is_one() {
        let pmf = delay_pmf(&AsyncConfig { p: 1.0, q: 1.0, h: 5 });
        assert_eq!(pmf, vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn delay_pmf_truncation_at_zero_horizon() {
        let pmf = delay_pmf(&AsyncConfig { p: 1.0, q: 0.37, h: 0 });
        assert_eq!(pmf, vec![1.0]);
    }

    #[test]
    fn delay_pmf_direct_evaluation() {
        let pmf = delay_pmf(&AsyncConfig { p: 1.0, q: 0.5, h: 2 });
        assert_eq!(pmf, vec![0.5, 0.25, 0.25]);
    }

    #[test]
    fn delay_pmf_is_a_probability_vector_on_a_grid() {
        for qi in 1..=100 {
            let q = qi as f64 / 100.0;
            for h in 0..=10 {
                let pmf = delay_pmf(&AsyncConfig { p: 1.0, q, h });
                assert_eq!(pmf.len(), h + 1);
                assert!(pmf.iter().all(|&w| w >= 0.0));
                let sum: f64 = pmf.iter().sum();
                assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-15);
            }
        }
    }
}
