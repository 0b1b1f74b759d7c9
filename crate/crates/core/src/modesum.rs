//! Thermal mode sums: the second, independent route to `ε_c` and `φ_c`.
//!
//! Nothing here touches the Poisson-dual series of [`crate::thermo`]. The
//! constrained system is a sum over plate modes `m = 0, 1, 2, …` of
//! thermal occupation integrals; the free system is the matching integral
//! over `m`. Both integrals are carried by polylogarithms of `e^{−ηm}` with
//! `η = T_c/T = π/t`:
//!
//! ```text
//! f(m) = ∫_m^∞ y²/(e^{ηy} − 1) dy
//!      = [(ηm)² Li₁ + 2ηm Li₂ + 2 Li₃](e^{−ηm}) / η³
//! F(m) = ∫_m^∞ x ln(1 − e^{−ηx}) dx
//!      = −(m/η) Li₂(e^{−ηm}) − Li₃(e^{−ηm})/η²
//! ```
//!
//! Normalization. Each mode carries two polarizations, so the thermal
//! energies are `u′ = 2[f(0)/2 + Σ f(m)]` and `u′_free = 2∫f = 2t⁴/15`;
//! the latter restores the Stefan–Boltzmann density `π²(k_BT)⁴/(15(ħc)³)`
//! through `D`. The free-energy mode sum enters with `k_B T/(2πd)` in front
//! (one factor of `ħc` in the textbook form of that prefactor is
//! dimensionally spurious), which against `D` reduces to `2t/π`. The
//! integral `∫₀^∞ x² ln(1 − e^{−ηx}) dx` equals `−2ζ(4)/η³`.
//!
//! The subtraction `u′ − u′_free` cancels quantities of order `t⁴` down to
//! `1/360`, so all sums run in double-double and round once at the end.

use crate::dd::{self, Dd};
use crate::specialfn::{li_neg_exp, zeta_dd};
use crate::thermo::{self, DimlessTemp, SeriesControl};
use crate::{Error, Result};

/// Sums keep going at least until `ηm` passes this.
pub const BOLTZMANN_CUT: f64 = 60.0;

/// `η = π/t` together with the temperature it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalKernel {
    t: DimlessTemp,
    eta: Dd,
}

impl ThermalKernel {
    pub fn new(t: DimlessTemp) -> Result<Self> {
        if t.get() <= 0.0 {
            return Err(Error::domain("thermal kernel temperature", t.get()));
        }
        Ok(ThermalKernel {
            t,
            eta: dd::PI / t.get(),
        })
    }

    pub fn t(&self) -> DimlessTemp {
        self.t
    }

    /// `η = T_c/T`.
    pub fn eta(&self) -> f64 {
        self.eta.to_f64()
    }
}

fn check_mode(m: f64) -> Result<()> {
    if m >= 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("mode index", m))
    }
}

fn occupation_dd(m: f64, k: &ThermalKernel) -> Dd {
    let eta3 = k.eta.powi(3);
    if m == 0.0 {
        return zeta_dd(3) * 2.0 / eta3;
    }
    let a = k.eta * m;
    let li1 = li_neg_exp(1, a);
    let li2 = li_neg_exp(2, a);
    let li3 = li_neg_exp(3, a);
    (a * a * li1 + a * li2 * 2.0 + li3 * 2.0) / eta3
}

fn log_integral_dd(m: f64, k: &ThermalKernel) -> Dd {
    let eta2 = k.eta.sqr();
    if m == 0.0 {
        return -zeta_dd(3) / eta2;
    }
    let a = k.eta * m;
    -(a * li_neg_exp(2, a) + li_neg_exp(3, a)) / eta2
}

/// `f(m) = ∫_m^∞ y²/(e^{ηy} − 1) dy`.
pub fn f_therm(m: f64, k: &ThermalKernel) -> Result<f64> {
    check_mode(m)?;
    Ok(occupation_dd(m, k).to_f64())
}

/// `F(m) = ∫_m^∞ x ln(1 − e^{−ηx}) dx`.
pub fn f_free(m: f64, k: &ThermalKernel) -> Result<f64> {
    check_mode(m)?;
    Ok(log_integral_dd(m, k).to_f64())
}

/// `Σ_{m≥1} term(m)` until `ηm` is past [`BOLTZMANN_CUT`] and the
/// geometric tail `|term|/(1 − e^{−η})` is below double-double resolution.
fn mode_sum(k: &ThermalKernel, ctl: SeriesControl, term: impl Fn(f64) -> Dd) -> Result<Dd> {
    let ratio_gap = -libm::expm1(-k.eta.hi);
    let mut acc = Dd::ZERO;
    let mut m = 1usize;
    loop {
        let mf = m as f64;
        let x = term(mf);
        acc += x;
        let tail = x.hi.abs() / ratio_gap;
        if k.eta.hi * mf > BOLTZMANN_CUT && tail <= dd::EPS * acc.hi.abs() {
            return Ok(acc);
        }
        if m >= ctl.max_terms() {
            return Err(Error::NotConverged {
                t: k.t.get(),
                terms: m,
                bound: tail,
            });
        }
        m += 1;
    }
}

fn free_thermal_dd(k: &ThermalKernel) -> Dd {
    zeta_dd(4) * 12.0 / k.eta.powi(4)
}

/// `u′(d,T) − u′(∞,T)`, each with both polarizations.
fn thermal_excess_dd(k: &ThermalKernel, ctl: SeriesControl) -> Result<Dd> {
    let tail = mode_sum(k, ctl, |m| occupation_dd(m, k))?;
    Ok(occupation_dd(0.0, k) - free_thermal_dd(k) + tail * 2.0)
}

/// Thermal energy of the constrained system, `2[f(0)/2 + Σ_{m≥1} f(m)]`.
pub fn u_prime_constrained(k: &ThermalKernel, ctl: SeriesControl) -> Result<f64> {
    let tail = mode_sum(k, ctl, |m| occupation_dd(m, k))?;
    Ok((occupation_dd(0.0, k) + tail * 2.0).to_f64())
}

/// Thermal energy of the unconstrained system, `2∫₀^∞ f(m) dm = 12ζ(4)/η⁴ = 2t⁴/15`.
pub fn u_prime_free(k: &ThermalKernel) -> f64 {
    free_thermal_dd(k).to_f64()
}

fn eps_zero_dd() -> Dd {
    Dd::ratio(-1.0, 360.0)
}

/// `ε_c(0) + u′(d,T) − u′(∞,T)`.
pub fn eps_c_oracle(t: DimlessTemp, ctl: SeriesControl) -> Result<f64> {
    let k = ThermalKernel::new(t)?;
    Ok((eps_zero_dd() + thermal_excess_dd(&k, ctl)?).to_f64())
}

/// `ε_c(0) + (2t/π)[F(0)/2 + Σ_{m≥1} F(m) − ∫₀^∞ F]`.
pub fn phi_c_oracle(t: DimlessTemp, ctl: SeriesControl) -> Result<f64> {
    let k = ThermalKernel::new(t)?;
    let tail = mode_sum(&k, ctl, |m| log_integral_dd(m, &k))?;
    let integral = -zeta_dd(4) * 2.0 / k.eta.powi(3);
    let bracket = log_integral_dd(0.0, &k) * 0.5 + tail - integral;
    let prefactor = Dd::from_f64(t.get()) * 2.0 / dd::PI;
    Ok((eps_zero_dd() + prefactor * bracket).to_f64())
}

/// Smallest temperature at which [`kirchhoff_extract`] is accepted; below
/// it `ε_c(t)` is not yet exponentially small.
pub const KIRCHHOFF_MIN_T: f64 = 3.0;

/// Zero-temperature Casimir energy from convergent thermal sums alone:
/// `−[u′(d,T) − u′(∞,T)]` at a high temperature. The error is `|ε_c(t)|`.
pub fn kirchhoff_extract(t_large: DimlessTemp, ctl: SeriesControl) -> Result<f64> {
    Ok(kirchhoff_dd(t_large, ctl)?.to_f64())
}

fn kirchhoff_dd(t_large: DimlessTemp, ctl: SeriesControl) -> Result<Dd> {
    if t_large.get() < KIRCHHOFF_MIN_T {
        return Err(Error::domain(
            "Kirchhoff extraction temperature",
            t_large.get(),
        ));
    }
    let k = ThermalKernel::new(t_large)?;
    Ok(-thermal_excess_dd(&k, ctl)?)
}

/// A Kirchhoff-route estimate together with its reference and the
/// predicted residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KirchhoffEstimate {
    pub t: f64,
    pub estimate: f64,
    pub reference: f64,
    /// `estimate − reference`, formed before rounding either side.
    pub difference: f64,
    /// `|ε_c(t)|` from the closed-form series.
    pub residual_bound: f64,
}

pub fn kirchhoff_report(t_large: DimlessTemp, ctl: SeriesControl) -> Result<KirchhoffEstimate> {
    let est = kirchhoff_dd(t_large, ctl)?;
    let reference = eps_zero_dd();
    Ok(KirchhoffEstimate {
        t: t_large.get(),
        estimate: est.to_f64(),
        reference: reference.to_f64(),
        difference: (est - reference).to_f64(),
        residual_bound: thermo::eps_c(t_large, ctl)?.abs(),
    })
}
