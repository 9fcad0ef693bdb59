//! Error type shared by every module in the crate.

use num_complex::Complex64;
use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Guard for operations whose defining statement lives in the
/// superoscillatory regime `a > 1`.
pub(crate) fn require_superoscillatory(a: f64, context: &str) -> Result<()> {
    if a.is_finite() && a > 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{context} is a statement about the superoscillatory regime a > 1, got {a}"
        )))
    }
}

/// Everything that can go wrong outside of a plain programming bug.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A caller-supplied parameter is outside its documented domain.
    InvalidParameter(String),
    /// The requested superoscillatory sum would amplify rounding noise past
    /// the point where double precision retains meaningful digits
    /// (`Σ_j |C_j| ≈ a^n` exceeds the configured limit).
    PrecisionExhausted { amplification: f64, limit: f64 },
    /// An integrand returned a non-finite value at a quadrature node.
    NonFiniteSample { at: Complex64, label: String },
    /// Doubling the quadrature order moved the result by more than the
    /// stated relative tolerance, so the reported value cannot be trusted.
    QuadratureNonConvergence {
        order: usize,
        relative_change: f64,
        tolerance: f64,
    },
    /// An internal iteration failed to converge; indicates a bug or a
    /// parameter far outside the supported range.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::PrecisionExhausted {
                amplification,
                limit,
            } => write!(
                f,
                "precision exhausted: superoscillatory amplification {amplification:.3e} \
                 exceeds the stability limit {limit:.0e}; reduce n or a, or opt in to \
                 unstable evaluation explicitly"
            ),
            Error::NonFiniteSample { at, label } => write!(
                f,
                "integrand {label:?} returned a non-finite value at quadrature node \
                 {:+.6e}{:+.6e}i",
                at.re, at.im
            ),
            Error::QuadratureNonConvergence {
                order,
                relative_change,
                tolerance,
            } => write!(
                f,
                "quadrature did not converge: doubling order {order} changed the result \
                 by {relative_change:.3e} (allowed {tolerance:.1e})"
            ),
            Error::Internal(msg) => write!(f, "internal numerical failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
