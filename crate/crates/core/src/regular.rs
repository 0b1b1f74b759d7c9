//! Exponential-cutoff regularization of the mode sums.
//!
//! With the cutoff `e^{−αx}` attached, the constrained-minus-free moment of
//! order `p` is
//!
//! ```text
//! G_p(α) = ½∫₀^∞ x^{p+1}e^{−αx}dx + Σ_{m≥1} ∫_m^∞ x^{p+1}e^{−αx}dx − ∫₀^∞dm ∫_m^∞ x^{p+1}e^{−αx}dx
//!        = Γ(p+2)/(2α^{p+2}) + Σ_m Γ(p+2, αm)/α^{p+2} − Γ(p+3)/α^{p+3}
//!        = (−d/dα)^{p+1} h(α),   h(α) = 1/(2α) + 1/(α(e^α − 1)) − 1/α² = Σ_{n≥2} B_n α^{n−2}/n!
//! ```
//!
//! so `g_p = lim_{α→0} G_p(α) = B_{p+3}/((p+3)(p+2))`. Odd Bernoulli numbers
//! vanish, hence `g_p = 0` for every even `p`: `g_0 = 0` says the number of
//! modes per unit volume does not depend on the plate separation, and
//! `g_1 = −1/360` is the zero-temperature Casimir energy.
//!
//! The same parity fixes the shape of `G_p(α) − g_p`: only odd powers of `α`
//! for even `p`, only even powers for odd `p`. [`richardson_limit`] uses
//! exactly those powers.

use alloc::vec::Vec;

use crate::dd::{self, Dd};
use crate::specialfn::{bernoulli, bernoulli_shared, ExactRational};
use crate::thermo::SeriesControl;
use crate::{Error, Result};

/// Largest moment order supported by the floating-point evaluations.
pub const P_MAX: u32 = 8;

/// Cutoff parameter `α = 1/k_c`, in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CutoffParam(f64);

impl CutoffParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha <= 1.0 {
            Ok(CutoffParam(alpha))
        } else {
            Err(Error::domain("cutoff alpha", alpha))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// `g_p = B_{p+3}/((p+3)(p+2))`, exact.
pub fn g_p_exact(p: u32) -> ExactRational {
    let n = p as usize + 3;
    let denom = ExactRational::from_integer(((p + 3) as i64) * ((p + 2) as i64));
    bernoulli(n) / denom
}

fn check_order(p: u32) -> Result<()> {
    if p <= P_MAX {
        Ok(())
    } else {
        Err(Error::domain("moment order p", p as f64))
    }
}

fn factorial(n: u32) -> f64 {
    (2..=n).map(f64::from).product()
}

/// `Γ(n, x)` for integer `n ≥ 1`, from `Γ(1, x) = e^{−x}` and
/// `Γ(s+1, x) = sΓ(s, x) + x^s e^{−x}`.
fn upper_gamma_int(n: u32, x: Dd) -> Dd {
    let e = (-x).exp();
    let mut g = e;
    let mut xs = Dd::ONE;
    for s in 1..n {
        xs = xs * x;
        g = g * s as f64 + xs * e;
    }
    g
}

fn g_p_numeric_dd(p: u32, a: CutoffParam, ctl: SeriesControl) -> Result<Dd> {
    check_order(p)?;
    let alpha = Dd::from_f64(a.get());
    let inv = alpha.recip();
    let scale = inv.powi(p + 2);
    let half_space = scale * (factorial(p + 1) / 2.0);
    let bulk = scale * inv * factorial(p + 2);

    let magnitude = bulk.hi.max(half_space.hi);
    if magnitude * dd::EPS > ctl.tol() {
        return Err(Error::Cancellation {
            p,
            alpha: a.get(),
            magnitude,
        });
    }

    let cut = 60.0 + 10.0 * p as f64;
    let mut modes = Dd::ZERO;
    let mut m = 1usize;
    loop {
        let x = alpha * m as f64;
        modes += upper_gamma_int(p + 2, x);
        if x.hi > cut {
            break;
        }
        if m >= ctl.max_terms() {
            return Err(Error::NotConverged {
                t: a.get(),
                terms: m,
                bound: x.hi,
            });
        }
        m += 1;
    }
    Ok(half_space + modes * scale - bulk)
}

/// `G_p(α)` from the closed forms of its three integrals.
///
/// The three terms grow like `α^{−(p+3)}` while their difference stays
/// `O(1)`; the evaluation is carried in double-double and refuses (with
/// [`Error::Cancellation`]) when even that cannot resolve `ctl.tol`.
pub fn g_p_numeric(p: u32, a: CutoffParam, ctl: SeriesControl) -> Result<f64> {
    Ok(g_p_numeric_dd(p, a, ctl)?.to_f64())
}

/// `G_p(α) = (−1)^{p+1} h^{(p+1)}(α)` through the Bernoulli expansion of
/// `h`, differentiated term by term.
pub fn g_p_deriv_form(p: u32, a: CutoffParam) -> Result<f64> {
    check_order(p)?;
    let b = &bernoulli_shared().float;
    let alpha = a.get();
    let mut sum = 0.0;
    let mut pow = 1.0; // α^{n−p−3}
    let mut inv_fact = 1.0; // 1/(n−p−3)!
    let first = p as usize + 3;
    for (j, &bn) in b
        .iter()
        .enumerate()
        .skip(first)
        .map(|(n, bn)| (n - first, bn))
    {
        if j > 0 {
            pow *= alpha;
            inv_fact /= j as f64;
        }
        if bn == 0.0 {
            continue;
        }
        // B_n/n! · (n−2)!/(n−p−3)!
        let nf = (j + first) as f64;
        let term = bn / (nf * (nf - 1.0)) * inv_fact * pow;
        sum += term;
        if j > 0 && term.abs() < 1e-18 {
            break;
        }
    }
    Ok(if p.is_multiple_of(2) { -sum } else { sum })
}

/// Regularized zero-temperature Casimir energy `G_1(α)`.
pub fn eps_c_zero_regularized(a: CutoffParam, ctl: SeriesControl) -> Result<f64> {
    g_p_numeric(1, a, ctl)
}

/// Powers of `α` present in `G_p(α) − g_p`, lowest first.
pub fn expansion_orders(p: u32, count: usize) -> Vec<u32> {
    let first = if p.is_multiple_of(2) { 1 } else { 2 };
    (0..count as u32).map(|k| first + 2 * k).collect()
}

/// Value at `α = 0` of `g + Σ_j c_j α^{orders[j]}` fitted exactly through
/// `samples` (`(α, value)` pairs; one more sample than orders).
pub fn extrapolate_to_zero(samples: &[(f64, f64)], orders: &[u32]) -> Result<f64> {
    let n = samples.len();
    if n == 0 || orders.len() + 1 != n {
        return Err(Error::Config(
            "extrapolation needs one more sample than orders",
        ));
    }
    // Rows: [1, α^{k_1}, …, α^{k_{n−1}} | value]
    let mut rows: Vec<Vec<f64>> = samples
        .iter()
        .map(|&(alpha, v)| {
            let mut r = Vec::with_capacity(n + 1);
            r.push(1.0);
            r.extend(orders.iter().map(|&k| libm::pow(alpha, k as f64)));
            r.push(v);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| rows[i][col].abs().total_cmp(&rows[j][col].abs()))
            .expect("non-empty");
        if rows[pivot][col].abs() < 1e-300 {
            return Err(Error::Config("extrapolation samples are not distinct"));
        }
        rows.swap(col, pivot);
        let pivot_row = rows[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != col {
                let f = row[col] / pivot_row[col];
                if f != 0.0 {
                    for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x -= f * y;
                    }
                }
            }
        }
    }
    let g = rows[0][n] / rows[0][0];
    if g.is_finite() {
        Ok(g)
    } else {
        Err(Error::Config("extrapolation samples are not distinct"))
    }
}

/// `α → 0` limit of [`g_p_numeric`] over the given cutoffs, eliminating the
/// powers of `α` listed by [`expansion_orders`].
pub fn richardson_limit(p: u32, alphas: &[CutoffParam], ctl: SeriesControl) -> Result<f64> {
    if alphas.len() < 2 {
        return Err(Error::Config(
            "Richardson extrapolation needs at least two cutoffs",
        ));
    }
    let samples = alphas
        .iter()
        .map(|&a| Ok((a.get(), g_p_numeric(p, a, ctl)?)))
        .collect::<Result<Vec<_>>>()?;
    extrapolate_to_zero(&samples, &expansion_orders(p, alphas.len() - 1))
}
