//! Superoscillating sequences.
//!
//! The central object is the sequence
//!
//! ```text
//! F_n(z, a) = Σ_{j=0}^{n} C_j(n,a) e^{i(1 − 2j/n)z},
//! C_j(n,a) = binom(n,j) ((1+a)/2)^{n−j} ((1−a)/2)^j,
//! ```
//!
//! which equals `(cos(z/n) + i a sin(z/n))^n` and converges pointwise to
//! `e^{iaz}` as `n → ∞`. For real `a > 1` every frequency `1 − 2j/n` lies in
//! `[−1, 1]`, yet the limit oscillates at frequency `a`: the band-limited sum
//! outruns its own spectrum on compact sets. The price is cancellation —
//! `Σ_j |C_j| = a^n` while the sum stays of modulus ~1 — so this module treats
//! the amplification `a^n` as a first-class quantity: coefficients and their
//! weighted sums are carried in double-double precision, and the guarded
//! constructor refuses parameter pairs whose amplification exceeds
//! [`AMPLIFICATION_LIMIT`] rather than return silently wrong values.
//!
//! Alongside the sequence itself live the Gaussian-modulated variants
//! `F̃_n = e^{−x²/2} F_n`, a generic supershift functional (arbitrary
//! coefficient/frequency rules applied to a function of the frequency), and
//! the entire generating function `Ψ_a(z, x) = Σ_{n≥1} (z^n/n!) F̃_n(x, a)`.

use std::sync::Arc;

use num_complex::Complex64;

use crate::dd::{Cdd, Dd};
use crate::error::{require_superoscillatory, Error, Result};
use crate::kahan::ComplexKahan;

/// Refuse guarded construction when `Σ_j |C_j| = ((|1+a|+|1−a|)/2)^n`
/// exceeds this. The closed-form sums themselves survive (their factors are
/// double-double), but beyond this limit every double-precision consumer of
/// the coefficients — quadrature against sampled signals, generic per-term
/// callbacks, any reference value a sum is compared with — carries a
/// predicted error worse than ~1e−4 and is numerically meaningless.
pub const AMPLIFICATION_LIMIT: f64 = 1e12;

/// Largest sequence index accepted by [`SuperoscParams`]. The coefficient
/// table is built in double-double arithmetic, which is comfortable through
/// this size; for larger `n` the closed product form [`fn_product`] (which
/// needs no coefficients) remains available at any index.
pub const MAX_SEQUENCE_INDEX: usize = 512;

fn check_finite_c(label: &str, v: Complex64) -> Result<()> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{label} must be finite")))
    }
}

fn check_finite_f(label: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{label} must be finite")))
    }
}

/// `Σ_j |C_j(n,a)| = ((|1+a| + |1−a|)/2)^n`, the cancellation amplification
/// of the sum form. Equals `a^n` for real `a > 1`.
pub fn amplification(n: usize, a: Complex64) -> f64 {
    let one = Complex64::new(1.0, 0.0);
    let base = ((one + a).norm() + (one - a).norm()) / 2.0;
    base.powi(n as i32)
}

/// Parameters of one superoscillating sequence member: the index `n`, the
/// target frequency `a`, the coefficients `C_j(n,a)` and the frequencies
/// `h_j = 1 − 2j/n`.
///
/// Guarded construction ([`SuperoscParams::new`]) enforces the amplification
/// limit; [`SuperoscParams::new_unguarded`] skips that single check for
/// callers that knowingly probe the unstable regime.
#[derive(Clone, Debug)]
pub struct SuperoscParams {
    n: usize,
    a: Complex64,
    coeffs_dd: Vec<Cdd>,
    coefficients: Vec<Complex64>,
    freqs_dd: Vec<Dd>,
    frequencies: Vec<f64>,
    amplification: f64,
}

impl SuperoscParams {
    /// Build the coefficient table for `(n, a)`, refusing amplifications
    /// beyond [`AMPLIFICATION_LIMIT`].
    pub fn new(n: usize, a: Complex64) -> Result<Self> {
        let amp = amplification(n, a);
        if amp > AMPLIFICATION_LIMIT {
            return Err(Error::PrecisionExhausted {
                amplification: amp,
                limit: AMPLIFICATION_LIMIT,
            });
        }
        Self::new_unguarded(n, a)
    }

    /// Build the coefficient table without the amplification guard. The
    /// coefficients themselves are accurate (double-double construction);
    /// what degrades beyond the limit is any *sum* over them evaluated
    /// through double-precision phase factors.
    pub fn new_unguarded(n: usize, a: Complex64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "sequence index n must be at least 1 (frequency 2j/n is undefined at n = 0)"
                    .into(),
            ));
        }
        if n > MAX_SEQUENCE_INDEX {
            return Err(Error::InvalidParameter(format!(
                "sequence index n = {n} exceeds the coefficient-table limit \
                 {MAX_SEQUENCE_INDEX}; use the product form for larger n"
            )));
        }
        check_finite_c("a", a)?;

        // Coefficient halves in double-double: p = (1+a)/2, q = (1−a)/2.
        let p = Cdd {
            re: Dd::from_sum(1.0, a.re).mul_f64(0.5),
            im: Dd::from_f64(a.im).mul_f64(0.5),
        };
        let q = Cdd {
            re: Dd::from_sum(1.0, -a.re).mul_f64(0.5),
            im: Dd::from_f64(-a.im).mul_f64(0.5),
        };

        let mut coeffs_dd = Vec::with_capacity(n + 1);
        let mut freqs_dd = Vec::with_capacity(n + 1);
        let n_dd = Dd::from_f64(n as f64);
        // binom(n, j) by the ratio recurrence; exact in double-double until
        // far past any magnitude this table can reach without overflowing.
        let mut binom = Dd::ONE;
        for j in 0..=n {
            if j > 0 {
                binom = binom
                    .mul_f64((n - j + 1) as f64)
                    .div(Dd::from_f64(j as f64));
            }
            let c = p
                .powu((n - j) as u32)
                .mul(q.powu(j as u32))
                .mul_dd(binom);
            coeffs_dd.push(c);
            freqs_dd.push(Dd::from_f64((n as f64) - (2 * j) as f64).div(n_dd));
        }

        let coefficients: Vec<Complex64> = coeffs_dd.iter().map(|c| c.to_c64()).collect();
        for &c in &coefficients {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "coefficients C_j({n}, {a}) overflow double precision"
                )));
            }
        }
        let frequencies: Vec<f64> = freqs_dd.iter().map(|f| f.value()).collect();

        Ok(SuperoscParams {
            n,
            a,
            coeffs_dd,
            coefficients,
            freqs_dd,
            frequencies,
            amplification: amplification(n, a),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    /// The amplitude as a real superoscillatory number, for the closed
    /// forms that are limit statements about real `a > 1`; errors when the
    /// parameters were built with a complex or sub-unit amplitude.
    pub fn real_amplitude(&self) -> Result<f64> {
        if self.a.im != 0.0 {
            return Err(Error::InvalidParameter(format!(
                "this closed form needs a real amplitude, got a = {}",
                self.a
            )));
        }
        require_superoscillatory(self.a.re, "this closed form")?;
        Ok(self.a.re)
    }

    /// `C_0 .. C_n`.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// `h_j = 1 − 2j/n`, descending from 1 to −1.
    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    /// `Σ_j |C_j|` in closed form; the condition number of the sum form.
    pub fn amplification(&self) -> f64 {
        self.amplification
    }

    /// Weighted sum `Σ_j C_j f(j, h_j)` with double-double coefficients and
    /// accumulation but double-precision per-term factors. Suitable for
    /// factors that are themselves only double-precision (generic callbacks,
    /// quadrature-sampled signals); the absolute error scales like the
    /// amplification times machine epsilon.
    pub(crate) fn weighted_sum<F>(&self, f: F) -> Complex64
    where
        F: Fn(usize, f64) -> Complex64,
    {
        let mut acc = Cdd::ZERO;
        for j in 0..=self.n {
            acc = acc.add(self.coeffs_dd[j].mul_c64(f(j, self.frequencies[j])));
        }
        acc.to_c64()
    }

    /// Weighted sum `Σ_j C_j f(j, h_j)` carried in double-double end to end:
    /// the callback receives the frequency as a double-double and must return
    /// a double-double factor. This is the evaluation path for the closed
    /// forms whose per-term factors have double-double kernels (complex
    /// exponentials, Gaussians, polynomial shifts); it keeps the absolute
    /// error near amplification times eps², i.e. negligible everywhere the
    /// guard admits and far beyond.
    pub(crate) fn weighted_sum_dd<F>(&self, f: F) -> Complex64
    where
        F: Fn(usize, Dd) -> Cdd,
    {
        let mut acc = Cdd::ZERO;
        for j in 0..=self.n {
            acc = acc.add(self.coeffs_dd[j].mul(f(j, self.freqs_dd[j])));
        }
        acc.to_c64()
    }

    /// `Σ_j C_j`, which telescopes to 1 for every `(n, a)`.
    pub fn coefficient_sum(&self) -> Complex64 {
        self.frequency_moment(0)
    }

    /// `Σ_j C_j h_j^k`; the zeroth moment is 1 and the first is `a`.
    ///
    /// Both the coefficients and the frequencies enter in double-double, so
    /// the result is exact to well below 1e−12 even at amplifications near
    /// the guard limit, where a plain double evaluation would lose six
    /// digits to cancellation.
    pub fn frequency_moment(&self, k: u32) -> Complex64 {
        let mut acc = Cdd::ZERO;
        for j in 0..=self.n {
            acc = acc.add(self.coeffs_dd[j].mul_dd(self.freqs_dd[j].powu(k)));
        }
        acc.to_c64()
    }

    /// The sum form `F_n(z, a) = Σ_j C_j e^{i h_j z}` at complex `z`.
    ///
    /// Coefficients, phase factors and accumulation are all double-double
    /// (`e^{i h z} = e^{−h·Im z} (cos(h·Re z) + i sin(h·Re z))`), so the
    /// result stays accurate to around amplification × eps² — comfortably
    /// below double rounding for every guarded parameter pair. The guard
    /// still matters: anything this sum is *compared against* or combined
    /// with through plain double arithmetic (quadrature, sampled signals)
    /// loses a digit per decade of amplification.
    pub fn fn_sum(&self, z: Complex64) -> Complex64 {
        self.weighted_sum_dd(|_, h| Cdd::exp_from_parts(h.mul_f64(-z.im), h.mul_f64(z.re)))
    }

    /// The Gaussian-modulated sequence `F̃_n(x, a) = e^{−x²/2} F_n(x, a)`
    /// at real `x`.
    pub fn ftilde_n(&self, x: f64) -> Complex64 {
        (-0.5 * x * x).exp() * self.fn_sum(Complex64::new(x, 0.0))
    }
}

/// The closed product form `F_n(z, a) = (cos(z/n) + i a sin(z/n))^n`,
/// evaluated by repeated squaring. Free of cancellation: usable at any
/// index, including far beyond the sum-form guard.
pub fn fn_product(z: Complex64, n: usize, a: Complex64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "sequence index n must be at least 1".into(),
        ));
    }
    let exp = u32::try_from(n).map_err(|_| {
        Error::InvalidParameter(format!("sequence index n = {n} exceeds u32 range"))
    })?;
    check_finite_c("z", z)?;
    check_finite_c("a", a)?;
    let t = z / (n as f64);
    let base = t.cos() + Complex64::new(0.0, 1.0) * a * t.sin();
    Ok(base.powu(exp))
}

/// `F̃_n(x, a) = e^{−x²/2} F_n(x, a)` through the product form — the
/// evaluation to use when `n` or the amplification is large.
pub fn ftilde_product(x: f64, n: usize, a: Complex64) -> Result<Complex64> {
    check_finite_f("x", x)?;
    Ok((-0.5 * x * x).exp() * fn_product(Complex64::new(x, 0.0), n, a)?)
}

/// The pointwise limit of `F̃_n` as `n → ∞`: `e^{−x²/2 + iax}`.
///
/// The limit statement holds for `a > 1` (the superoscillatory regime), and
/// that is what this function asserts about its input.
pub fn ftilde_limit(x: f64, a: f64) -> Result<Complex64> {
    check_finite_f("x", x)?;
    if !(a > 1.0) || !a.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "the modulated limit e^(-x^2/2 + iax) is a limit statement only for a > 1, got {a}"
        )));
    }
    Ok(Complex64::new(-0.5 * x * x, a * x).exp())
}

/// Sup over an evenly spaced `points`-point grid on `[−1, 1]` of the gap
/// `|F_n(x, a) − e^{iax}|`, evaluated through the product form so that the
/// table stays stable at index values far past the sum-form guard.
pub fn sup_gap_on_grid(n: usize, a: f64, points: usize) -> Result<f64> {
    require_superoscillatory(a, "the uniform convergence gap")?;
    if points < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid needs at least 2 points, got {points}"
        )));
    }
    let ac = Complex64::new(a, 0.0);
    let mut sup: f64 = 0.0;
    for k in 0..points {
        let x = -1.0 + 2.0 * (k as f64) / ((points - 1) as f64);
        let gap = (fn_product(Complex64::new(x, 0.0), n, ac)? - Complex64::new(0.0, a * x).exp())
            .norm();
        sup = sup.max(gap);
    }
    Ok(sup)
}

/// Coefficient-rule callback of a generalized supershift: `(j, n, a) → Z_j`.
pub type CoefficientRule = dyn Fn(usize, usize, Complex64) -> Complex64 + Send + Sync;
/// Frequency-rule callback: `(j, n) → h_j`, required to land in `[−1, 1]`.
pub type FrequencyRule = dyn Fn(usize, usize) -> f64 + Send + Sync;

/// A generalized superoscillation datum: arbitrary coefficients `Z_j(n,a)`
/// paired with bounded frequencies `h_j(n)`. Applying it to a function φ of
/// the frequency yields `Σ_j Z_j φ(h_j)` — the supershift of φ. The standard
/// rules recover `F_n` itself when `φ(λ) = e^{iλx}`.
#[derive(Clone)]
pub struct SupershiftSpec {
    n: usize,
    a: Complex64,
    coeff_rule: Arc<CoefficientRule>,
    freq_rule: Arc<FrequencyRule>,
}

impl std::fmt::Debug for SupershiftSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SupershiftSpec")
            .field("n", &self.n)
            .field("a", &self.a)
            .finish_non_exhaustive()
    }
}

impl SupershiftSpec {
    /// Wrap caller-supplied rules, verifying every frequency the rule
    /// produces lies in `[−1, 1]` — the boundedness that makes a supershift
    /// non-trivial.
    pub fn new(
        n: usize,
        a: Complex64,
        coeff_rule: Arc<CoefficientRule>,
        freq_rule: Arc<FrequencyRule>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "supershift index n must be at least 1".into(),
            ));
        }
        check_finite_c("a", a)?;
        for j in 0..=n {
            let h = freq_rule(j, n);
            if !h.is_finite() || h.abs() > 1.0 + 1e-12 {
                return Err(Error::InvalidParameter(format!(
                    "frequency rule produced h_{j} = {h}, outside [-1, 1]"
                )));
            }
        }
        Ok(SupershiftSpec {
            n,
            a,
            coeff_rule,
            freq_rule,
        })
    }

    /// The standard rules: `Z_j = C_j(n,a)` and `h_j = 1 − 2j/n`. Subject to
    /// the same amplification guard as [`SuperoscParams::new`].
    pub fn standard(n: usize, a: Complex64) -> Result<Self> {
        let params = SuperoscParams::new(n, a)?;
        let coeffs = Arc::new(params.coefficients.clone());
        Self::new(
            n,
            a,
            Arc::new(move |j, _, _| coeffs[j]),
            Arc::new(|j, n| ((n as f64) - (2 * j) as f64) / (n as f64)),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn coefficient(&self, j: usize) -> Complex64 {
        (self.coeff_rule)(j, self.n, self.a)
    }

    pub fn frequency(&self, j: usize) -> f64 {
        (self.freq_rule)(j, self.n)
    }
}

/// Apply a supershift to φ: `Σ_j Z_j(n,a) φ(h_j(n))`, with compensated
/// summation. φ must be finite on `[−1, 1]`.
pub fn supershift_apply<F>(spec: &SupershiftSpec, phi: F) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let mut acc = ComplexKahan::new();
    for j in 0..=spec.n {
        let h = spec.frequency(j);
        let v = phi(h);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFiniteSample {
                at: Complex64::new(h, 0.0),
                label: "supershift argument".into(),
            });
        }
        acc.add(spec.coefficient(j) * v);
    }
    Ok(acc.value())
}

/// The generating function of the modulated sequence,
/// `Ψ_a(z, x) = Σ_{n=1}^{N} (z^n / n!) F̃_n(x, a)`, truncated at `N`.
///
/// Each member is evaluated through the product form, so the truncation
/// order is not limited by the amplification guard. Every partial sum is
/// checked against the analytic envelope `|Ψ| ≤ e^{(1+a)|z| − x²/2}`.
pub fn generating_function(z: Complex64, x: f64, a: f64, n_max: usize) -> Result<Complex64> {
    if n_max == 0 {
        return Err(Error::InvalidParameter(
            "generating function truncation order must be at least 1".into(),
        ));
    }
    if !(a > 1.0) || !a.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "generating function is defined over the superoscillatory regime a > 1, got {a}"
        )));
    }
    check_finite_c("z", z)?;
    check_finite_f("x", x)?;

    let bound = ((1.0 + a) * z.norm() - 0.5 * x * x).exp();
    let ac = Complex64::new(a, 0.0);
    let mut term = Complex64::new(1.0, 0.0); // z^n / n!
    let mut acc = ComplexKahan::new();
    for n in 1..=n_max {
        term = term * z / (n as f64);
        acc.add(term * ftilde_product(x, n, ac)?);
        if acc.value().norm() > bound * (1.0 + 1e-9) {
            return Err(Error::Internal(format!(
                "generating function partial sum at order {n} escaped its \
                 analytic envelope ({} > {bound})",
                acc.value().norm()
            )));
        }
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn params(n: usize, a: f64) -> SuperoscParams {
        SuperoscParams::new(n, a.into()).unwrap()
    }

    #[test]
    fn index_zero_is_rejected() {
        assert!(matches!(
            SuperoscParams::new(0, re(2.0)),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            fn_product(re(1.0), 0, re(2.0)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn coefficients_at_index_one_are_the_two_halves() {
        let a = Complex64::new(2.0, 0.5);
        let p = SuperoscParams::new(1, a).unwrap();
        let c = p.coefficients();
        assert!((c[0] - (1.0 + a) / 2.0).norm() < 1e-16);
        assert!((c[1] - (1.0 - a) / 2.0).norm() < 1e-16);
        assert_eq!(p.frequencies(), &[1.0, -1.0]);
    }

    #[test]
    fn coefficients_at_n2_a2_match_direct_evaluation() {
        let p = params(2, 2.0);
        let expect = [2.25, -1.5, 0.25];
        for (c, e) in p.coefficients().iter().zip(expect) {
            assert!((c - re(e)).norm() < 1e-15, "{c} vs {e}");
        }
        assert_eq!(p.frequencies(), &[1.0, 0.0, -1.0]);
    }

    #[test]
    fn coefficient_sums_telescope_to_one() {
        for n in [5usize, 10, 20] {
            for a in [1.5, 2.0, 4.0] {
                // (20, 4) is past the stability guard; the coefficients
                // themselves are still fine, so build unguarded.
                let p = SuperoscParams::new_unguarded(n, re(a)).unwrap();
                let s = p.coefficient_sum();
                assert!(
                    (s - re(1.0)).norm() < 1e-12,
                    "n={n} a={a}: sum {s} (gap {:.2e})",
                    (s - re(1.0)).norm()
                );
            }
        }
        // Complex a telescopes too.
        let p = SuperoscParams::new(7, Complex64::new(1.2, -0.8)).unwrap();
        assert!((p.coefficient_sum() - re(1.0)).norm() < 1e-13);
    }

    #[test]
    fn first_moment_recovers_the_target_frequency() {
        for (n, a) in [(12usize, 3.0), (19, 4.0), (20, 2.0)] {
            let p = SuperoscParams::new_unguarded(n, re(a)).unwrap();
            let m1 = p.frequency_moment(1);
            assert!(
                (m1 - re(a)).norm() < 1e-12,
                "n={n} a={a}: first moment {m1} (gap {:.2e})",
                (m1 - re(a)).norm()
            );
        }
    }

    #[test]
    fn frequencies_stay_in_the_unit_band() {
        let p = SuperoscParams::new_unguarded(37, re(3.0)).unwrap();
        for &h in p.frequencies() {
            assert!(h.abs() <= 1.0);
        }
    }

    #[test]
    fn sum_form_at_zero_is_one_and_n1_is_cos_plus_ia_sin() {
        let p = params(9, 1.5);
        assert!((p.fn_sum(re(0.0)) - re(1.0)).norm() < 1e-14);

        let a = Complex64::new(2.0, 0.3);
        let p1 = SuperoscParams::new(1, a).unwrap();
        for z in [re(0.4), Complex64::new(1.0, 0.5), re(-2.0)] {
            let expect = z.cos() + Complex64::new(0.0, 1.0) * a * z.sin();
            assert!((p1.fn_sum(z) - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn sum_form_superoscillates_toward_the_fast_wave() {
        // n = 20, a = 2 at x = 0.3: already within 0.02 of e^{2ix}, the
        // frequency-2 wave a band-1 sum has no right to imitate.
        let p = params(20, 2.0);
        let gap = (p.fn_sum(re(0.3)) - Complex64::new(0.0, 0.6).exp()).norm();
        assert!(gap < 0.02);
        // Regression-pinned against an independent high-precision evaluation.
        assert!((gap - 6.771_384_520_029_718e-3).abs() < 1e-7);
    }

    #[test]
    fn product_form_equals_sum_form_on_a_modest_grid() {
        let zs = [
            re(0.0),
            re(0.7),
            re(-0.7),
            Complex64::new(1.0, 0.5),
            re(3.0),
        ];
        for n in [1usize, 2, 5, 13, 20] {
            for a in [re(1.5), re(2.0), re(4.0), Complex64::new(1.3, 0.4)] {
                let p = SuperoscParams::new_unguarded(n, a).unwrap();
                for &z in &zs {
                    let s = p.fn_sum(z);
                    let q = fn_product(z, n, a).unwrap();
                    // Normalize by the cancellation amplification: that is
                    // the scale on which double-precision phases can differ.
                    let gap = (s - q).norm() / p.amplification().max(1.0);
                    assert!(gap < 1e-10, "n={n} a={a} z={z}: gap {gap:.2e}");
                }
            }
        }
    }

    #[test]
    fn product_form_approaches_the_plane_wave_limit() {
        // (z, a) = (1, 2): published-rate regression, pinned tight.
        let limit = Complex64::new(0.0, 2.0).exp();
        let g200 = (fn_product(re(1.0), 200, re(2.0)).unwrap() - limit).norm();
        let g2000 = (fn_product(re(1.0), 2000, re(2.0)).unwrap() - limit).norm();
        assert!(g200 < 2e-2);
        assert!(g2000 < 2e-3);
        assert!((g200 - 7.528_016_407_375_567e-3).abs() < 1e-12);
        assert!((g2000 - 7.502_811_430_470_318e-4).abs() < 1e-12);
        // And the trend continues.
        assert!(g2000 < g200 / 9.9);
    }

    #[test]
    fn modulated_forms_agree_and_limit_has_gaussian_modulus() {
        let p = params(10, 2.0);
        assert!((p.ftilde_n(0.0) - re(1.0)).norm() < 1e-14);
        assert!((ftilde_limit(0.0, 2.0).unwrap() - re(1.0)).norm() < 1e-16);
        assert!(
            (ftilde_limit(1.0, 2.0).unwrap().norm() - (-0.5f64).exp()).abs() < 1e-16
        );
        // Sum-based and product-based modulated forms are the same function.
        for x in [-1.0, -0.3, 0.2, 0.9] {
            let s = p.ftilde_n(x);
            let q = ftilde_product(x, 10, re(2.0)).unwrap();
            assert!((s - q).norm() < 1e-12);
        }
        // The limit is a statement about a > 1 only.
        assert!(ftilde_limit(0.5, 1.0).is_err());
        assert!(ftilde_limit(0.5, -3.0).is_err());
    }

    #[test]
    fn modulated_convergence_is_monotone_on_the_unit_interval() {
        // sup_{x ∈ [−1,1]} |F̃_n(x,2) − e^{−x²/2+2ix}| for n = 10, 50, 200,
        // via the product form (n = 50 is already past the sum-form guard).
        let expected = [
            9.711_139_559_072_985e-2,
            1.846_443_105_920_16e-2,
            4.565_972_757_893_031e-3,
        ];
        let mut sups = Vec::new();
        for (&n, &pin) in [10usize, 50, 200].iter().zip(&expected) {
            let mut sup: f64 = 0.0;
            for k in 0..=200 {
                let x = -1.0 + (k as f64) * 0.01;
                let gap = (ftilde_product(x, n, re(2.0)).unwrap()
                    - ftilde_limit(x, 2.0).unwrap())
                .norm();
                sup = sup.max(gap);
            }
            assert!((sup - pin).abs() < 1e-9, "n={n}: sup {sup:.12e}");
            sups.push(sup);
        }
        assert!(sups[0] > sups[1] && sups[1] > sups[2]);
    }

    #[test]
    fn guard_refuses_exhausted_precision_and_reports_the_amplification() {
        // 2^60 ≈ 1.15e18 ≫ 1e12.
        match SuperoscParams::new(60, re(2.0)) {
            Err(Error::PrecisionExhausted {
                amplification: amp,
                limit,
            }) => {
                assert!((amp - 2f64.powi(60)).abs() < 1e3);
                assert_eq!(limit, AMPLIFICATION_LIMIT);
            }
            other => panic!("expected precision exhaustion, got {other:?}"),
        }
        // 4^20 ≈ 1.0995e12 sits just past the limit; 4^19 just under it.
        assert!(SuperoscParams::new(20, re(4.0)).is_err());
        assert!(SuperoscParams::new(19, re(4.0)).is_ok());
        // |a| ≤ 1 never amplifies.
        assert!(SuperoscParams::new(400, re(0.7)).is_ok());
    }

    #[test]
    fn amplification_matches_the_coefficient_sum_of_moduli() {
        for (n, a) in [(12usize, 3.0), (19, 4.0), (20, 2.0), (9, 1.5)] {
            let p = params_unguarded(n, a);
            let direct: f64 = p.coefficients().iter().map(|c| c.norm()).sum();
            let closed = p.amplification();
            assert!(
                ((direct - closed) / closed).abs() < 1e-10,
                "n={n} a={a}: {direct:e} vs {closed:e}"
            );
            assert!(((closed - a.powi(n as i32)) / closed).abs() < 1e-14);
        }
    }

    fn params_unguarded(n: usize, a: f64) -> SuperoscParams {
        SuperoscParams::new_unguarded(n, re(a)).unwrap()
    }

    #[test]
    fn supershift_of_constants_frequencies_and_waves() {
        let n = 14;
        let a = 2.0;
        let spec = SupershiftSpec::standard(n, re(a)).unwrap();

        // Constant: coefficients sum to 1.
        let c = Complex64::new(0.3, -1.1);
        assert!((supershift_apply(&spec, |_| c).unwrap() - c).norm() < 1e-10);

        // Identity: first moment is the target frequency a.
        let m = supershift_apply(&spec, |h| re(h)).unwrap();
        assert!((m - re(a)).norm() < 1e-10);

        // Plane wave: recovers the sum form.
        let p = params(n, a);
        for x in [0.0, 0.4, -1.3] {
            let s = supershift_apply(&spec, |h| Complex64::new(0.0, h * x).exp()).unwrap();
            assert!((s - p.fn_sum(re(x))).norm() < 1e-12);
        }
    }

    #[test]
    fn supershift_rejects_unbounded_frequencies_and_bad_arguments() {
        let err = SupershiftSpec::new(
            3,
            re(2.0),
            Arc::new(|_, _, _| re(1.0)),
            Arc::new(|j, _| 1.5 * j as f64),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));

        let spec = SupershiftSpec::standard(5, re(2.0)).unwrap();
        let err = supershift_apply(&spec, |h| re(1.0 / (h - 1.0))).unwrap_err();
        assert!(matches!(err, Error::NonFiniteSample { .. }));

        // Standard rules inherit the amplification guard.
        assert!(matches!(
            SupershiftSpec::standard(60, re(2.0)),
            Err(Error::PrecisionExhausted { .. })
        ));
    }

    #[test]
    fn generating_function_vanishes_at_zero_and_stabilizes_fast() {
        assert_eq!(
            generating_function(re(0.0), 0.7, 2.0, 25).unwrap(),
            re(0.0)
        );

        // Factorial decay: N = 20 and N = 40 agree to far below 1e−12
        // anywhere on |z| ≤ 1.
        for z in [re(1.0), Complex64::new(0.3, -0.9), re(-1.0)] {
            let s20 = generating_function(z, 0.5, 2.0, 20).unwrap();
            let s40 = generating_function(z, 0.5, 2.0, 40).unwrap();
            assert!((s20 - s40).norm() < 1e-12, "z={z}");
        }

        // Regression pin at (z, x, a) = (1, 0.5, 2), N = 40.
        let v = generating_function(re(1.0), 0.5, 2.0, 40).unwrap();
        let pin = Complex64::new(1.201_264_934_568_829_9, 1.447_724_421_292_406_3);
        assert!((v - pin).norm() < 1e-12, "{v}");
    }

    #[test]
    fn generating_function_respects_its_envelope() {
        for z in [re(0.5), re(1.0), Complex64::new(0.0, 1.0), re(-2.0)] {
            for x in [0.0, 0.5, 1.5] {
                for a in [1.5, 2.0, 3.0] {
                    let v = generating_function(z, x, a, 30).unwrap();
                    let bound = ((1.0 + a) * z.norm() - 0.5 * x * x).exp();
                    assert!(v.norm() <= bound, "z={z} x={x} a={a}");
                }
            }
        }
        assert!(generating_function(re(1.0), 0.0, 1.0, 10).is_err());
        assert!(generating_function(re(1.0), 0.0, 2.0, 0).is_err());
    }
}
