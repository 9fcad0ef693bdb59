//! Minimal double-double arithmetic.
//!
//! A `Dd` is an unevaluated sum `hi + lo` of two doubles with
//! `|lo| ≤ ulp(hi)/2`, giving roughly 31 significant decimal digits. The
//! crate uses it in exactly one place where it genuinely matters: the
//! superoscillation coefficients `C_j(n, a)` and the sums built from them,
//! whose massive sign cancellation (`Σ|C_j| = a^n` against `ΣC_j = 1`) would
//! otherwise wipe out double precision entirely.
//!
//! Only the handful of operations needed for that job are implemented. The
//! algorithms are the classic error-free transformations (Knuth's TwoSum,
//! FMA-based TwoProd) plus the usual double-double add/mul/div built on them.

/// Unevaluated sum of two doubles, `hi + lo`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum of two doubles (Knuth).
#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

/// Error-free sum assuming `|a| ≥ |b|` (Dekker).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

/// Error-free product, exact because `mul_add` rounds once.
#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: f64::mul_add(a, b, -p),
    }
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact double-double representation of `a + b`.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        two_sum(a, b)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let r = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(r.hi, r.lo + t.lo)
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Dd {
        let s = two_sum(self.hi, b);
        quick_two_sum(s.hi, s.lo + self.lo)
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        let lo = p.lo + (self.hi * o.lo + self.lo * o.hi);
        quick_two_sum(p.hi, lo)
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let p = two_prod(self.hi, b);
        quick_two_sum(p.hi, p.lo + self.lo * b)
    }

    /// Long division with two refinement steps; ~full double-double accuracy.
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r1 = self.sub(o.mul_f64(q1));
        let q2 = r1.hi / o.hi;
        let r2 = r1.sub(o.mul_f64(q2));
        let q3 = r2.hi / o.hi;
        quick_two_sum(q1, q2).add_f64(q3)
    }

    /// Integer power by binary exponentiation (`0^0 = 1`).
    pub fn powu(self, mut k: u32) -> Dd {
        let mut base = self;
        let mut acc = Dd::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(base);
            }
        }
        acc
    }

    /// Square root for non-negative values: the double estimate plus one
    /// Newton step carried in double-double.
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        let y = Dd::from_f64(self.hi.sqrt());
        let residual = self.sub(y.mul(y));
        y.add(residual.div(y.mul_f64(2.0)))
    }

    /// Exponential. Argument reduction `x = m·ln2 + r` followed by a scaled
    /// Taylor series and repeated squaring (the classic double-double
    /// recipe); accurate to a few units in the second component over the
    /// whole range the crate uses (|x| up to a few hundred).
    pub fn exp(self) -> Dd {
        // Outside ±690 the result under- or overflows the scale where the
        // second component could matter; plain f64 exp is exact enough.
        if self.hi.abs() > 690.0 {
            return Dd::from_f64(self.hi.exp());
        }
        let m = (self.hi / LN2.hi).round();
        // r = x − m·ln2, |r| ≤ ln2/2, then scaled by 2^{-9} for the series.
        let r = self.sub(LN2.mul_f64(m)).mul_f64(1.0 / 512.0);
        // p = e^r − 1 by Taylor: terms through r^9 suffice at |r| ≤ 6.8e-4.
        let mut p = INV_FACT[9];
        for i in (1..9).rev() {
            p = p.mul(r).add(INV_FACT[i]);
        }
        p = p.mul(r);
        // Undo the scaling: (1+p) ↦ (1+p)², i.e. p ↦ p² + 2p, nine times.
        for _ in 0..9 {
            p = p.mul(p).add(p.mul_f64(2.0));
        }
        let result = p.add_f64(1.0);
        // Scale by 2^m; |m| ≤ 996 keeps the split factors normal.
        let half = 2.0f64.powi((m as i32) / 2);
        let rest = 2.0f64.powi(m as i32 - (m as i32) / 2);
        Dd {
            hi: result.hi * half * rest,
            lo: result.lo * half * rest,
        }
    }

    /// Simultaneous sine and cosine. Reduction modulo π/2 in double-double
    /// followed by Taylor series on |r| ≤ π/4; the reduction keeps full
    /// accuracy for the moderate arguments (|x| ≲ 10³) the crate produces.
    pub fn sin_cos(self) -> (Dd, Dd) {
        let m = (self.hi / PI_OVER_2.hi).round();
        let r = self.sub(PI_OVER_2.mul_f64(m));
        let u = r.mul(r);
        let mut s = SIN_COEF[14];
        let mut c = COS_COEF[14];
        for i in (0..14).rev() {
            s = s.mul(u).add(SIN_COEF[i]);
            c = c.mul(u).add(COS_COEF[i]);
        }
        let sin_r = s.mul(r);
        let cos_r = c;
        match (m as i64).rem_euclid(4) {
            0 => (sin_r, cos_r),
            1 => (cos_r, sin_r.neg()),
            2 => (sin_r.neg(), cos_r.neg()),
            _ => (cos_r.neg(), sin_r),
        }
    }
}

// Double-double constants (generated at 50-digit precision and split into
// hi + lo; `lo` is the exact remainder of the value minus `hi`).
pub(crate) const LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
pub(crate) const PI_OVER_2: Dd = Dd { hi: 1.5707963267948966, lo: 6.123233995736766e-17 };
pub(crate) const SQRT_2: Dd = Dd { hi: 1.4142135623730951, lo: -9.667293313452913e-17 };
pub(crate) const FRAC_1_SQRT_2: Dd = Dd { hi: 0.7071067811865476, lo: -4.833646656726457e-17 };
pub(crate) const PI_POW_NEG_QUARTER: Dd = Dd { hi: 0.7511255444649425, lo: -2.4402481796105666e-17 };
pub(crate) const FRAC_1_SQRT_2PI: Dd = Dd { hi: 0.3989422804014327, lo: -2.49232720227773e-17 };

/// 1/k! for the exp Taylor tail.
const INV_FACT: [Dd; 10] = [
    Dd { hi: 1.0, lo: 0.0 },
    Dd { hi: 1.0, lo: 0.0 },
    Dd { hi: 0.5, lo: 0.0 },
    Dd { hi: 0.16666666666666666, lo: 9.25185853854297e-18 },
    Dd { hi: 0.041666666666666664, lo: 2.3129646346357427e-18 },
    Dd { hi: 0.008333333333333333, lo: 1.1564823173178714e-19 },
    Dd { hi: 0.001388888888888889, lo: -5.300543954373577e-20 },
    Dd { hi: 0.0001984126984126984, lo: 1.7209558293420705e-22 },
    Dd { hi: 2.48015873015873e-05, lo: 2.1511947866775882e-23 },
    Dd { hi: 2.7557319223985893e-06, lo: -1.858393274046472e-22 },
];

/// (−1)^m/(2m+1)! — sine series in powers of r².
const SIN_COEF: [Dd; 15] = [
    Dd { hi: 1.0, lo: 0.0 },
    Dd { hi: -0.16666666666666666, lo: -9.25185853854297e-18 },
    Dd { hi: 0.008333333333333333, lo: 1.1564823173178714e-19 },
    Dd { hi: -0.0001984126984126984, lo: -1.7209558293420705e-22 },
    Dd { hi: 2.7557319223985893e-06, lo: -1.858393274046472e-22 },
    Dd { hi: -2.505210838544172e-08, lo: 1.448814070935912e-24 },
    Dd { hi: 1.6059043836821613e-10, lo: 1.2585294588752098e-26 },
    Dd { hi: -7.647163731819816e-13, lo: -7.03872877733453e-30 },
    Dd { hi: 2.8114572543455206e-15, lo: 1.6508842730861433e-31 },
    Dd { hi: -8.22063524662433e-18, lo: -2.2141894119604265e-34 },
    Dd { hi: 1.9572941063391263e-20, lo: -1.3643503830087908e-36 },
    Dd { hi: -3.868170170630684e-23, lo: 8.843177655482344e-40 },
    Dd { hi: 6.446950284384474e-26, lo: -1.9330404233703465e-42 },
    Dd { hi: -9.183689863795546e-29, lo: -1.4303150396787322e-45 },
    Dd { hi: 1.1309962886447716e-31, lo: 1.0498015412959506e-47 },
];

/// (−1)^m/(2m)! — cosine series in powers of r².
const COS_COEF: [Dd; 15] = [
    Dd { hi: 1.0, lo: 0.0 },
    Dd { hi: -0.5, lo: 0.0 },
    Dd { hi: 0.041666666666666664, lo: 2.3129646346357427e-18 },
    Dd { hi: -0.001388888888888889, lo: 5.300543954373577e-20 },
    Dd { hi: 2.48015873015873e-05, lo: 2.1511947866775882e-23 },
    Dd { hi: -2.755731922398589e-07, lo: -2.3767714622250297e-23 },
    Dd { hi: 2.08767569878681e-09, lo: -1.20734505911326e-25 },
    Dd { hi: -1.1470745597729725e-11, lo: -2.0655512752830745e-28 },
    Dd { hi: 4.779477332387385e-14, lo: 4.399205485834081e-31 },
    Dd { hi: -1.5619206968586225e-16, lo: -1.1910679660273754e-32 },
    Dd { hi: 4.110317623312165e-19, lo: 1.4412973378659527e-36 },
    Dd { hi: -8.896791392450574e-22, lo: 7.911402614872376e-38 },
    Dd { hi: 1.6117375710961184e-24, lo: -3.6846573564509766e-41 },
    Dd { hi: -2.4795962632247976e-27, lo: 1.2953730964765229e-43 },
    Dd { hi: 3.279889237069838e-30, lo: 1.5117542744029879e-46 },
];

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };

    #[inline]
    pub fn to_c64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.value(), self.im.value())
    }

    #[inline]
    pub fn add(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    /// Scale by a real double-double factor.
    pub fn mul_dd(self, d: Dd) -> Cdd {
        Cdd {
            re: self.re.mul(d),
            im: self.im.mul(d),
        }
    }

    /// Multiply by an ordinary complex double.
    pub fn mul_c64(self, w: num_complex::Complex64) -> Cdd {
        Cdd {
            re: self.re.mul_f64(w.re).sub(self.im.mul_f64(w.im)),
            im: self.re.mul_f64(w.im).add(self.im.mul_f64(w.re)),
        }
    }

    /// Integer power by binary exponentiation (`0^0 = 1`).
    pub fn powu(self, mut k: u32) -> Cdd {
        let mut base = self;
        let mut acc = Cdd {
            re: Dd::ONE,
            im: Dd::ZERO,
        };
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(base);
            }
        }
        acc
    }

    /// `e^{re + i·im}` from real double-double parts: the unit factor of
    /// every closed-form superposition term, kept at double-double accuracy
    /// so massive coefficient cancellation cannot surface rounding noise.
    pub fn exp_from_parts(re: Dd, im: Dd) -> Cdd {
        let scale = re.exp();
        let (s, c) = im.sin_cos();
        Cdd {
            re: c.mul(scale),
            im: s.mul(scale),
        }
    }
}
