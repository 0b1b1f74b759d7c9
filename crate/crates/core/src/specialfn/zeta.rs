use alloc::vec::Vec;

use once_cell::race::OnceBox;

use super::bernoulli;
use crate::dd::{self, Dd};
use crate::{Error, Result};

/// Summation cut for the Euler–Maclaurin tail of odd arguments.
const EM_CUT: u32 = 16;

/// Riemann zeta at an integer `n ≥ 2`.
///
/// Even arguments use `ζ(2k) = (−1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!)`.
/// Odd arguments sum the first terms directly and close the tail with the
/// Euler–Maclaurin expansion; the result is accurate well past binary64.
pub fn zeta_int(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("zeta argument", n as f64));
    }
    Ok(zeta_dd(n).to_f64())
}

/// `ζ(n)` for `n ≥ 2` in double-double.
pub(crate) fn zeta_dd(n: u32) -> Dd {
    debug_assert!(n >= 2);
    let t = tables();
    match t.positive.get(n as usize) {
        Some(z) => *z,
        None => compute_zeta(n),
    }
}

/// `ζ(−n)` for `n ≥ 0`, i.e. `(−1)^n B_{n+1}/(n+1)`.
pub(crate) fn zeta_neg_dd(n: u32) -> Dd {
    let t = tables();
    t.negative[n as usize]
}

pub(crate) const NEG_MAX: u32 = (bernoulli::CACHED - 1) as u32;

struct Tables {
    positive: Vec<Dd>,
    negative: Vec<Dd>,
}

fn tables() -> &'static Tables {
    static T: OnceBox<Tables> = OnceBox::new();
    T.get_or_init(|| {
        let positive = (0..=24u32)
            .map(|n| {
                if n < 2 {
                    Dd::from_f64(f64::NAN)
                } else {
                    compute_zeta(n)
                }
            })
            .collect();
        let b = &bernoulli::shared().dd;
        let negative = (0..=NEG_MAX)
            .map(|n| {
                let v = b[n as usize + 1] / (n as f64 + 1.0);
                if n % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect();
        alloc::boxed::Box::new(Tables { positive, negative })
    })
}

fn factorial_dd(n: u32) -> Dd {
    (2..=n).fold(Dd::ONE, |acc, k| acc * k as f64)
}

fn compute_zeta(n: u32) -> Dd {
    if n.is_multiple_of(2) && (n as usize) < bernoulli::shared().dd.len() {
        even_closed_form(n)
    } else {
        euler_maclaurin(n)
    }
}

fn even_closed_form(n: u32) -> Dd {
    let bn = bernoulli::shared().dd[n as usize].abs();
    bn * (dd::PI * 2.0).powi(n) / (factorial_dd(n) * 2.0)
}

/// `Σ_{m<M} m^{−s}` plus the Euler–Maclaurin tail
/// `M^{1−s}/(s−1) + M^{−s}/2 + Σ_k B_{2k}/(2k)! · s(s+1)…(s+2k−2) · M^{−s−2k+1}`.
fn euler_maclaurin(n: u32) -> Dd {
    let b = &bernoulli::shared().dd;
    let s = n as f64;
    let mut head = Dd::ZERO;
    for m in (1..EM_CUT).rev() {
        head += Dd::from_f64(m as f64).powi(n).recip();
    }
    let m = Dd::from_f64(EM_CUT as f64);
    let m_pow = m.powi(n);
    let mut tail = m / (m_pow * (s - 1.0)) + m_pow.recip() * 0.5;
    let inv_m2 = (m * m).recip();
    let mut rising = Dd::from_f64(s);
    let mut m_fac = (m_pow * m).recip();
    let mut fact = Dd::from_f64(2.0);
    let mut k = 1usize;
    while 2 * k < b.len() {
        let term = b[2 * k] * rising * m_fac / fact;
        tail += term;
        if term.abs().hi < 1e-36 {
            break;
        }
        let kk = k as f64;
        rising = rising * (s + 2.0 * kk - 1.0) * (s + 2.0 * kk);
        m_fac = m_fac * inv_m2;
        fact = fact * (2.0 * kk + 1.0) * (2.0 * kk + 2.0);
        k += 1;
    }
    head + tail
}
