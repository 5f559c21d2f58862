//! Verification toolkit for explicit SU(N) gauge-field ansatze.
//!
//! The library evaluates a family of Gaussian-profile gauge fields, computes
//! field strengths, Euler-Lagrange residuals, Lagrangian and Hamiltonian
//! densities by finite differences, integrates energy densities with both an
//! exact Gaussian-moment oracle and an independent Gauss-Hermite quadrature,
//! and audits a registry of quantitative claims (C1..C14) recorded from the
//! construction the presets implement. Discrepancies between computed and
//! stated values are findings, reported side by side, never reconciled.

pub mod ansatz;
pub mod claims;
pub mod field_calculus;
pub mod geometry;
pub mod lie_algebra;
pub mod linalg;
pub mod quadrature;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported group rank {0}: only SU(2) and SU(3) are provided")]
    UnsupportedRank(usize),
    #[error("generator set is not trace-orthonormal: max deviation {0:.3e}")]
    NonOrthonormal(f64),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("singular matrix: {0}")]
    SingularMatrix(String),
    #[error("quadratic form is not positive definite (eigenvalue {0:.3e})")]
    NotPositiveDefinite(f64),
    #[error("moment parameter must be positive, got {0}")]
    NonPositiveMoment(f64),
    #[error("moment order {0} exceeds supported maximum 12")]
    MomentOrderTooLarge(usize),
    #[error("exponent real part {0:.3e} exceeds overflow guard 700")]
    Overflow(f64),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("unknown claim id '{0}'")]
    UnknownClaim(String),
    #[error("quadrature did not converge at order {0}")]
    NonConvergence(usize),
    #[error("metric mismatch: field strength tagged {0}, requested {1}")]
    MetricMismatch(String, String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("sum ansatz terms must share beta and coupling")]
    MixedSumParameters,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
