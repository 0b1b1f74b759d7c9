use crate::{Error, Result};

/// Below this argument [`bose`] uses its Bernoulli series.
pub const BOSE_SERIES_BELOW: f64 = 1e-2;

/// `coth z`, written as `(1 + q)/(1 − q)` with `q = e^{−2z}` so nothing
/// overflows for large `z`.
pub fn coth_scaled(z: f64) -> Result<f64> {
    check_positive(z)?;
    let (q, one_minus_q) = q_pair(z);
    Ok((1.0 + q) / one_minus_q)
}

/// `csch² z = 4q/(1 − q)²` with `q = e^{−2z}`; underflows to zero rather
/// than overflowing.
pub fn csch2_scaled(z: f64) -> Result<f64> {
    check_positive(z)?;
    let (q, one_minus_q) = q_pair(z);
    Ok(4.0 * q / (one_minus_q * one_minus_q))
}

/// `coth z − 1 = 2q/(1 − q)`, free of the cancellation in the subtraction.
pub(crate) fn coth_minus_one(z: f64) -> f64 {
    let (q, one_minus_q) = q_pair(z);
    2.0 * q / one_minus_q
}

/// `(coth z, csch² z)` for `z > 0` from one exponential.
pub(crate) fn coth_csch2(z: f64) -> (f64, f64) {
    let (q, one_minus_q) = q_pair(z);
    (
        (1.0 + q) / one_minus_q,
        4.0 * q / (one_minus_q * one_minus_q),
    )
}

#[inline]
fn q_pair(z: f64) -> (f64, f64) {
    let q = libm::exp(-2.0 * z);
    (q, -libm::expm1(-2.0 * z))
}

fn check_positive(z: f64) -> Result<()> {
    if z > 0.0 {
        Ok(())
    } else {
        Err(Error::domain("hyperbolic argument", z))
    }
}

/// `x/(e^x − 1)`, the Bose occupation times the quantum `x = βħω`.
///
/// Equals 1 at `x = 0`; small arguments use `1 − x/2 + x²/12 − x⁴/720`.
pub fn bose(x: f64) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain("bose argument", x));
    }
    if x < BOSE_SERIES_BELOW {
        let x2 = x * x;
        return Ok(1.0 - x / 2.0 + x2 / 12.0 - x2 * x2 / 720.0);
    }
    if x == f64::INFINITY {
        return Ok(0.0);
    }
    Ok(x / libm::expm1(x))
}
