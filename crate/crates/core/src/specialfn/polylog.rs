use crate::dd::{self, Dd};
use crate::{Error, Result};

use super::zeta::{zeta_dd, zeta_neg_dd, NEG_MAX};

/// Below this value of `a = −ln x` the expansion in powers of `ln x` is
/// used; above it the defining power series in `x` converges at least as
/// fast as `e^{-n}`.
pub const LOG_SERIES_BELOW: f64 = 1.0;

/// `Li_s(x) = Σ_{n≥1} x^n / n^s` for `s ∈ {1, 2, 3, 4}` and `0 ≤ x ≤ 1`.
///
/// `Li_1` is the closed form `−ln(1 − x)`; `x = 1` with `s = 1` is the pole
/// and is rejected.
pub fn polylog(s: u32, x: f64) -> Result<f64> {
    if !(1..=4).contains(&s) {
        return Err(Error::domain("polylog order", s as f64));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain("polylog argument", x));
    }
    if s == 1 {
        if x == 1.0 {
            return Err(Error::domain("polylog argument (pole of Li_1)", x));
        }
        return Ok(-libm::log1p(-x));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let a = -Dd::from_f64(x).ln();
    Ok(li_neg_exp(s, a).to_f64())
}

/// `Li_s(e^{−a})` for `a ≥ 0` (`a > 0` when `s = 1`), any `s ≥ 1`.
pub(crate) fn li_neg_exp(s: u32, a: Dd) -> Dd {
    debug_assert!(a.hi >= 0.0);
    if a.hi >= LOG_SERIES_BELOW {
        power_series(s, a)
    } else {
        log_series(s, a)
    }
}

/// `Σ x^n/n^s` with `x = e^{−a}`, stopped by the tail bound
/// `x^{N+1} / ((N+1)^s (1 − x))`.
fn power_series(s: u32, a: Dd) -> Dd {
    let x = (-a).exp();
    let one_minus_x = -libm::expm1(-a.hi);
    let mut xn = x;
    let mut sum = Dd::ZERO;
    let mut n = 1u32;
    loop {
        sum += xn / Dd::from_f64(n as f64).powi(s);
        xn = xn * x;
        let next = (n + 1) as f64;
        let tail = xn.hi / (libm::pow(next, s as f64) * one_minus_x);
        if tail <= dd::EPS * 0.25 * sum.hi || xn.hi == 0.0 {
            return sum;
        }
        n += 1;
    }
}

/// `Li_s(e^μ) = Σ_{k≠s−1} ζ(s−k) μ^k/k! + μ^{s−1}/(s−1)! (H_{s−1} − ln(−μ))`
/// with `μ = −a`, valid for `|μ| < 2π`.
fn log_series(s: u32, a: Dd) -> Dd {
    let mu = -a;
    let mut sum = Dd::ZERO;
    let mut pow = Dd::ONE; // μ^k / k!
    let mut prev_small = false;
    let mut k = 0u32;
    loop {
        let term = if k + 1 == s {
            if a.hi == 0.0 {
                Dd::ZERO
            } else {
                let harmonic = (1..s).fold(Dd::ZERO, |h, j| h + Dd::ONE / j as f64);
                pow * (harmonic - a.ln())
            }
        } else if k + 2 <= s {
            zeta_dd(s - k) * pow
        } else {
            let n = k - s; // s − k = −n
            if n > NEG_MAX {
                return sum;
            }
            zeta_neg_dd(n) * pow
        };
        sum += term;
        let small = term.abs().hi <= 0.25 * dd::EPS * sum.abs().hi;
        if k > s + 1 && small && prev_small {
            return sum;
        }
        prev_small = small;
        k += 1;
        pow = pow * mu / k as f64;
        if pow.hi == 0.0 {
            return sum;
        }
    }
}
