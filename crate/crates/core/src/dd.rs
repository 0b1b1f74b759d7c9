//! Double-double arithmetic: an unevaluated sum `hi + lo` of two binary64
//! values with `|lo| ≤ ulp(hi)/2`, giving roughly 106 bits of significand.
//!
//! Used where binary64 cannot resolve the answer: the thermal mode sums
//! cancel quantities of order `t⁴` down to `1/360`, and the cutoff
//! functionals cancel terms of order `α^{-(p+3)}` down to `O(1)`.

use core::cmp::Ordering;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// Unit roundoff of the format, `2^-104` (a couple of ulps of slack).
pub const EPS: f64 = 4.930380657631324e-32;

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const PI: Dd = Dd {
    hi: core::f64::consts::PI,
    lo: 1.2246467991473532e-16,
};

pub const LN2: Dd = Dd {
    hi: core::f64::consts::LN_2,
    lo: 2.3190468138462996e-17,
};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub const fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// `a / b` for two integers that are individually exact in binary64.
    pub fn ratio(a: f64, b: f64) -> Dd {
        Dd::from_f64(a) / Dd::from_f64(b)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    /// Multiplication by an exact power of two.
    #[inline]
    pub fn ldexp(self, k: i32) -> Dd {
        Dd {
            hi: libm::scalbn(self.hi, k),
            lo: libm::scalbn(self.lo, k),
        }
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    pub fn powi(self, mut n: u32) -> Dd {
        let mut base = self;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base.sqr();
            n >>= 1;
        }
        acc
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    /// `e^x`.
    pub fn exp(self) -> Dd {
        if self.hi > 709.7 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Dd::ZERO;
        }
        if self.hi == 0.0 {
            return Dd::ONE;
        }
        let k = libm::round(self.hi / LN2.hi);
        let r = (self - LN2 * k).ldexp(-10);
        let em1 = expm1_small(r);
        // (1 + e)^2 - 1 = e (e + 2), ten times undoes the 2^-10 scaling.
        let mut s = em1;
        for _ in 0..10 {
            s = s * (s + 2.0);
        }
        (s + 1.0).ldexp(k as i32)
    }

    /// Natural logarithm, `NaN` for non-positive input.
    pub fn ln(self) -> Dd {
        if self.hi.is_nan() || self.hi <= 0.0 {
            return Dd::from_f64(f64::NAN);
        }
        if self.hi == 1.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        // One Newton step on exp(y) = x doubles the seed's accuracy.
        let y = Dd::from_f64(libm::log(self.hi));
        y + self * (-y).exp() - 1.0
    }
}

/// `e^r − 1` by Taylor series, for `|r| ≲ 1e-3`.
fn expm1_small(r: Dd) -> Dd {
    let mut term = r;
    let mut sum = r;
    let mut n = 1.0;
    loop {
        n += 1.0;
        term = term * r / n;
        sum += term;
        if term.hi.abs() <= 1e-36 * sum.hi.abs().max(1e-300) {
            return sum;
        }
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd::from_f64(x)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: f64) -> Dd {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: f64) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi));
        Dd { hi, lo }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + q3
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    fn div(self, b: f64) -> Dd {
        self / Dd::from_f64(b)
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, b: Dd) {
        *self = *self + b;
    }
}

impl AddAssign<f64> for Dd {
    fn add_assign(&mut self, b: f64) {
        *self = *self + b;
    }
}

impl SubAssign for Dd {
    fn sub_assign(&mut self, b: Dd) {
        *self = *self - b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, rel: f64) -> bool {
        ((a - b).to_f64()).abs() <= rel * b.to_f64().abs()
    }

    #[test]
    fn third_times_three() {
        let third = Dd::ONE / 3.0;
        let back = third * 3.0 - 1.0;
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn exp_of_one() {
        // e = 2.718281828459045235360287471352662497757...
        let e = Dd::ONE.exp();
        let want = Dd {
            hi: core::f64::consts::E,
            lo: 1.4456468917292502e-16,
        };
        assert!(close(e, want, 1e-31), "{e:?}");
    }

    #[test]
    fn ln_inverts_exp() {
        for &x in &[1e-3, 0.3, 1.0, 2.5, 17.0, 60.0, -40.0] {
            let y = Dd::from_f64(x).exp().ln();
            assert!((y - x).to_f64().abs() < 1e-30 * x.abs().max(1.0), "{x}");
        }
    }

    #[test]
    fn ln2_constant() {
        let l = Dd::from_f64(2.0).ln();
        assert!(close(l, LN2, 1e-31));
    }

    #[test]
    fn powi_matches_repeated_product() {
        let x = Dd::ratio(7.0, 3.0);
        let mut p = Dd::ONE;
        for _ in 0..13 {
            p = p * x;
        }
        assert!(close(x.powi(13), p, 1e-30));
    }
}
