//! Compensated (Kahan-Neumaier) summation.
//!
//! Every quadrature loop and coefficient-weighted sum in the crate funnels
//! through these accumulators, so summation error stays at
//! `O(ε Σ|terms|)` with a constant independent of the term count.

use num_complex::Complex64;

/// Neumaier's improved Kahan accumulator for `f64`.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Two Neumaier channels, one per component.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct ComplexKahan {
    re: KahanSum,
    im: KahanSum,
}

impl ComplexKahan {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms_next_to_large_ones() {
        // Naive summation of [1e16, 1, -1e16] loses the 1; Neumaier keeps it.
        let mut acc = KahanSum::new();
        for x in [1e16, 1.0, -1e16] {
            acc.add(x);
        }
        assert_eq!(acc.value(), 1.0);
    }

    #[test]
    fn many_small_increments_stay_exact() {
        let mut acc = KahanSum::new();
        for _ in 0..1_000_000 {
            acc.add(0.1);
        }
        assert!((acc.value() - 100_000.0).abs() < 1e-9);
    }

    #[test]
    fn complex_channels_are_independent() {
        let mut acc = ComplexKahan::new();
        acc.add(Complex64::new(1e16, 1.0));
        acc.add(Complex64::new(1.0, -1e16));
        acc.add(Complex64::new(-1e16, 1e16));
        let v = acc.value();
        assert_eq!(v.re, 1.0);
        assert_eq!(v.im, 1.0);
    }
}
