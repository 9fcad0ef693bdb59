//! The Fock space of entire functions and its operator apparatus.
//!
//! The space is `F(ℂ) = {f entire : ∫ |f(z)|² dμ(z) < ∞}` with the Gaussian
//! measure `dμ = (1/π) e^{−|z|²} dλ`. This module provides its working
//! parts:
//!
//! ```text
//! K(z, w) = e^{z·w̄}                  reproducing kernel
//! k_w(z)  = e^{z·w̄ − |w|²/2}          normalized kernel (coherent state)
//! e_k(z)  = z^k / √(k!)               orthonormal basis
//! W_a f(z) = f(z − a) e^{z·ā − |a|²/2} Weyl operator (unitary)
//! ```
//!
//! with the composition law `W_a W_b = e^{−i·Im(a·b̄)} W_{a+b}`, quadrature
//! inner products polarizing the norm, and the superoscillatory Weyl
//! superposition `Σ_j C_j(n,a) W_{b_j}`, `b_j = −(i/√2)(1 − 2j/n)`, whose
//! `n → ∞` limit is the single operator `W_{−ia/√2}` — frequencies confined
//! to `|b_j| ≤ 1/√2` conspiring to a shift of size `a/√2`.
//!
//! Everything here is a finite composition of shifts, products and
//! exponentials of entire functions, so [`EntireFn`] is a plain evaluation
//! handle with a label; holomorphy is guaranteed by construction, never
//! checked.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::dd::{self, Cdd, Dd};
use crate::error::{require_superoscillatory, Error, Result};
use crate::factorial::ln_factorial;
use crate::quadrature::{integrate_fock_checked, QuadRule2D};
use crate::superosc::SuperoscParams;

/// Largest basis index for `e_k`; matches the Hermite-side cap.
pub const MAX_BASIS_INDEX: usize = 60;

/// An entire function as a labelled evaluation handle. Constructors in this
/// crate only ever compose entire building blocks, so the invariant is
/// structural.
#[derive(Clone)]
pub struct EntireFn {
    label: String,
    eval: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>,
}

impl EntireFn {
    pub fn new<F>(label: impl Into<String>, eval: F) -> EntireFn
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        EntireFn {
            label: label.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.eval)(z)
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl fmt::Debug for EntireFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EntireFn").field("label", &self.label).finish()
    }
}

/// The reproducing kernel `K(z, w) = e^{z·w̄}`.
pub fn kernel(z: Complex64, w: Complex64) -> Complex64 {
    (z * w.conj()).exp()
}

/// `K_w = K(·, w)` as an entire function (the kernel section at `w`).
pub fn kernel_at(w: Complex64) -> EntireFn {
    EntireFn::new(format!("K_{w}"), move |z| kernel(z, w))
}

/// A coherent state: the normalized kernel section `k_w`, of unit Fock norm.
#[derive(Clone, Copy, Debug)]
pub struct CoherentState {
    center: Complex64,
}

impl CoherentState {
    pub fn center(&self) -> Complex64 {
        self.center
    }

    /// `k_w(z) = e^{z·w̄ − |w|²/2}`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        (z * self.center.conj() - 0.5 * self.center.norm_sqr()).exp()
    }

    pub fn as_entire(&self) -> EntireFn {
        let w = self.center;
        EntireFn::new(format!("k_{w}"), move |z| {
            (z * w.conj() - 0.5 * w.norm_sqr()).exp()
        })
    }
}

/// The normalized reproducing kernel at `w`.
pub fn normalized_kernel(w: Complex64) -> CoherentState {
    CoherentState { center: w }
}

/// Orthonormal basis vector `e_k(z) = z^k/√(k!)`, the factorial through its
/// logarithm so no intermediate overflows.
pub fn basis_e(k: usize) -> Result<EntireFn> {
    if k > MAX_BASIS_INDEX {
        return Err(Error::InvalidParameter(format!(
            "basis index {k} exceeds the supported maximum {MAX_BASIS_INDEX}"
        )));
    }
    let scale = (-0.5 * ln_factorial(k)).exp();
    Ok(EntireFn::new(format!("e_{k}"), move |z| {
        z.powu(k as u32) * scale
    }))
}

/// Fock inner product `⟨f, g⟩ = ∫ f(z) conj(g(z)) dμ(z)` under the supplied
/// rule. No convergence check — see [`inner_product_checked`] for the
/// self-validating variant.
pub fn inner_product(f: &EntireFn, g: &EntireFn, rule: &QuadRule2D) -> Result<Complex64> {
    rule.integrate(|z| f.eval(z) * g.eval(z).conj())
}

/// Fock inner product with an order-doubling convergence check: integrands
/// whose mass escapes the order-`m` node hull are rejected instead of
/// silently truncated.
pub fn inner_product_checked(f: &EntireFn, g: &EntireFn, m: usize) -> Result<Complex64> {
    integrate_fock_checked(|z| f.eval(z) * g.eval(z).conj(), m)
}

/// Fock norm `‖f‖ = √⟨f, f⟩`; the integrand `|f|²` is pointwise nonnegative,
/// so the result is real nonnegative by construction.
pub fn norm(f: &EntireFn, rule: &QuadRule2D) -> Result<f64> {
    let sq = rule.integrate(|z| Complex64::new(f.eval(z).norm_sqr(), 0.0))?;
    Ok(sq.re.max(0.0).sqrt())
}

/// The Weyl operator: `W_a f(z) = f(z − a) e^{z·ā − |a|²/2} = f(z − a) k_a(z)`.
pub fn weyl_apply(a: Complex64, f: &EntireFn) -> EntireFn {
    let inner = f.eval.clone();
    let label = format!("W_{a}[{}]", f.label);
    EntireFn::new(label, move |z| {
        inner(z - a) * (z * a.conj() - 0.5 * a.norm_sqr()).exp()
    })
}

/// Both sides of the composition law
/// `W_a W_b = e^{−i·Im(a·b̄)} W_{a+b}` at one point: returns
/// `((W_a W_b f)(z), e^{−i·Im(a·b̄)} (W_{a+b} f)(z))`.
pub fn weyl_compose_check(
    a: Complex64,
    b: Complex64,
    f: &EntireFn,
    z: Complex64,
) -> (Complex64, Complex64) {
    let lhs = weyl_apply(a, &weyl_apply(b, f)).eval(z);
    let phase = Complex64::new(0.0, -(a * b.conj()).im).exp();
    let rhs = phase * weyl_apply(a + b, f).eval(z);
    (lhs, rhs)
}

/// Gaps of the superoscillatory Weyl superposition against its limit:
/// for each `n` in `n_list`,
///
/// ```text
/// gap(n) = | Σ_j C_j(n,a) (W_{b_j} f)(z) − (W_{−ia/√2} f)(z) |,
/// b_j = −(i/√2)(1 − 2j/n),
/// ```
///
/// with the superposition accumulated in double-double. Inherits the
/// amplification guard: `a^n` past the stability limit is refused.
pub fn weyl_supershift_gaps(
    f: &EntireFn,
    a: f64,
    z: Complex64,
    n_list: &[usize],
) -> Result<Vec<(usize, f64)>> {
    require_superoscillatory(a, "the Weyl superposition limit")?;
    let mut table = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let params = SuperoscParams::new(n, Complex64::new(a, 0.0))?;
        table.push((n, weyl_supershift_gap(f, &params, z)?));
    }
    Ok(table)
}

/// The double-double coherent-state factor `k_b(z) = e^{z b̄ − |b|²/2}` for
/// a purely imaginary center `b = −i t/√2` with real double-double `t`:
///
/// ```text
/// Re(z b̄ − |b|²/2) = −Im(z)·t/√2 − t²/4,   Im(z b̄) = Re(z)·t/√2.
/// ```
///
/// Shared by every closed-form superposition over the frequency-indexed
/// centers `b_j = −i h_j/√2`, so their weighted sums stay accurate at high
/// amplification.
pub(crate) fn coherent_factor_dd(t: Dd, z: Complex64) -> Cdd {
    let s = t.mul(dd::FRAC_1_SQRT_2);
    let re_arg = s.mul_f64(-z.im).sub(t.mul(t).mul_f64(0.25));
    Cdd::exp_from_parts(re_arg, s.mul_f64(z.re))
}

/// The coherent-state superposition `Σ_j C_j k_{b_j}(z)` with
/// `b_j = −i h_j/√2` — the finite-stage value whose limit is the coherent
/// state `k_{−ia/√2}(z)`; the `f ≡ 1` specialization of the Weyl
/// supershift, carried in double-double end to end.
pub fn coherent_superposition(params: &SuperoscParams, z: Complex64) -> Result<Complex64> {
    params.real_amplitude()?;
    Ok(params.weighted_sum_dd(|_, h| coherent_factor_dd(h, z)))
}

/// One row of [`weyl_supershift_gaps`], on an already-built coefficient
/// table (the caller decides whether the table was guarded).
pub fn weyl_supershift_gap(f: &EntireFn, params: &SuperoscParams, z: Complex64) -> Result<f64> {
    let a = params.real_amplitude()?;
    let b = Complex64::new(0.0, -a * std::f64::consts::FRAC_1_SQRT_2);
    let limit = weyl_apply(b, f).eval(z);
    let sum = params.weighted_sum(|_, h| {
        let bj = Complex64::new(0.0, -h * std::f64::consts::FRAC_1_SQRT_2);
        f.eval(z - bj) * (z * bj.conj() - 0.5 * bj.norm_sqr()).exp()
    });
    Ok((sum - limit).norm())
}

/// The constructive witness of the representation `g = lim_n Σ_j C_j W_{b_j} f`:
/// given the limit `g`, the represented element is `f = W_{+ia/√2} g`, since
/// `W_{ia/√2}` inverts `W_{−ia/√2}` exactly.
pub fn fock_representation(g: &EntireFn, a: f64) -> Result<EntireFn> {
    require_superoscillatory(a, "the representation witness")?;
    Ok(weyl_apply(
        Complex64::new(0.0, a * std::f64::consts::FRAC_1_SQRT_2),
        g,
    ))
}
