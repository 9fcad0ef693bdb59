//! Numerics for superoscillating sequences and their life in Fock space.
//!
//! The crate is organised around one family of band-limited functions,
//!
//! ```text
//! F_n(x, a) = Σ_{j=0}^{n} C_j(n, a) · e^{i(1 - 2j/n)x},
//! C_j(n, a) = binom(n, j) ((1+a)/2)^{n-j} ((1-a)/2)^j,
//! ```
//!
//! which oscillates faster than any of its Fourier components (all frequencies
//! lie in `[-1, 1]`, yet `F_n → e^{iax}` with `|a| > 1`), together with the
//! machinery needed to follow these functions into the Fock space of entire
//! functions: Gauss-Hermite quadrature ([`quadrature`]), Hermite functions
//! ([`hermite`]), reproducing kernels, coherent states and Weyl operators
//! ([`fock`]), the Segal-Bargmann transform pair ([`bargmann`]), and the
//! Fourier-transform side of the story ([`fourier`]).
//!
//! Every closed-form expression exported here is checked in the test suite
//! against an independent quadrature or series oracle; nothing is trusted on
//! faith. The binary crate `oscfock-cli` packages those cross-checks as a
//! verification suite.
//!
//! # Numerical policy
//!
//! Sums over the coefficients `C_j` are *violently* ill-conditioned: the
//! coefficients alternate in sign and grow, with `Σ_j |C_j| = a^n` for real
//! `a > 1` while `Σ_j C_j = 1`. The crate therefore
//!
//! * computes the coefficients in double-double arithmetic (~31 significant
//!   digits) and keeps that representation alongside the rounded `f64` values,
//! * accumulates every `C_j`-weighted sum with either double-double or
//!   compensated (Kahan-Neumaier) summation,
//! * records the amplification factor `Σ_j |C_j|` so that callers can judge
//!   how many digits survive, and
//! * refuses, by default, any parameter pair whose amplification exceeds
//!   [`superosc::AMPLIFICATION_LIMIT`] (`1e12`), the point at which double
//!   precision keeps roughly four significant digits.

pub mod bargmann;
mod dd;
pub mod error;
mod factorial;
pub mod fock;
pub mod fourier;
pub mod hermite;
mod kahan;
pub mod quadrature;
pub mod superosc;

pub use error::{Error, Result};
pub use num_complex::Complex64;
