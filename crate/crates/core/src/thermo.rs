//! Closed-form dimensionless Casimir thermodynamics.
//!
//! The Poisson-dual series, with `y_m = 2πmt`, are
//!
//! ```text
//! ε_c(t) = −4t³ Σ_m coth(y_m) csch²(y_m) / (2πm)
//! φ_c(t) = −2t  Σ_m [coth(y_m) + y_m csch²(y_m)] / (2πm)³
//! σ_c(t) = (ε_c − φ_c) / t
//! ```
//!
//! The bracket in `φ_c` tends to 1, so its constant part is summed exactly
//! (`Σ 1/m³ = ζ(3)`) and only the exponentially small remainder
//! `coth y − 1 + y csch² y` goes through the loop. That gives
//! `φ_c = −t (σ_∞ + A S)` and `σ_c = σ_∞ + A S − |ε_c|/t` with
//! `σ_∞ = ζ(3)/(4π³)`, `A = 2/(2π)³`.
//!
//! Every loop stops on an explicit majorant of its remaining tail, never on
//! the size of the last term.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::dd;
use crate::specialfn::{coth_csch2, coth_minus_one, zeta_dd, zeta_int};
use crate::sum::NeumaierSum;
use crate::{Error, Result};

const TWO_PI: f64 = 2.0 * PI;

/// Reduced temperature `t = πT/T_c = k_B T d/(ħc)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DimlessTemp(f64);

impl DimlessTemp {
    pub const ZERO: DimlessTemp = DimlessTemp(0.0);

    pub fn new(t: f64) -> Result<Self> {
        if t.is_finite() && t >= 0.0 {
            Ok(DimlessTemp(t))
        } else {
            Err(Error::domain("reduced temperature", t))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for DimlessTemp {
    type Error = Error;
    fn try_from(t: f64) -> Result<Self> {
        DimlessTemp::new(t)
    }
}

/// Absolute truncation tolerance and term cap for every infinite sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    tol: f64,
    max_terms: usize,
}

impl SeriesControl {
    pub const DEFAULT_TOL: f64 = 1e-14;
    pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::domain("series tolerance", tol));
        }
        if max_terms == 0 {
            return Err(Error::Config("max_terms must be at least 1"));
        }
        Ok(SeriesControl { tol, max_terms })
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    fn with_tol(self, tol: f64) -> Self {
        SeriesControl { tol, ..self }
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            tol: Self::DEFAULT_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
        }
    }
}

/// Energy, free energy and entropy (all dimensionless) at one temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CasimirPoint {
    pub t: DimlessTemp,
    pub eps_c: f64,
    pub phi_c: f64,
    pub sigma_c: f64,
}

impl CasimirPoint {
    /// `φ_c ≤ ε_c ≤ 0`, `σ_c ≥ 0`, `ε_c ≥ −1/360` and `φ_c = ε_c − tσ_c`,
    /// the last two to `1e-12`.
    pub fn satisfies_invariants(&self) -> bool {
        let t = self.t.get();
        self.phi_c <= self.eps_c
            && self.eps_c <= 0.0
            && self.sigma_c >= 0.0
            && self.eps_c >= EPS_C_ZERO - 1e-12
            && (self.phi_c - (self.eps_c - t * self.sigma_c)).abs() <= 1e-12
    }
}

const EPS_C_ZERO: f64 = -1.0 / 360.0;

/// Zero-temperature Casimir energy `−4ζ(4)/(2π)⁴ = −1/360`.
pub fn eps_c_zero() -> f64 {
    let zeta4 = zeta_int(4).expect("zeta(4)");
    let via_zeta = -4.0 * zeta4 / (TWO_PI * TWO_PI * TWO_PI * TWO_PI);
    debug_assert!((via_zeta - EPS_C_ZERO).abs() <= 1e-15);
    EPS_C_ZERO
}

/// High-temperature entropy limit `ζ(3)/(4π³)`.
pub fn sigma_classical() -> f64 {
    (zeta_dd(3) / (dd::PI.powi(3) * 4.0)).to_f64()
}

/// `A = 2/(2π)³`, weight of the free-energy remainder sum.
const FREE_WEIGHT: f64 = 2.0 / (TWO_PI * TWO_PI * TWO_PI);
/// `4/(2π)⁴`: `|ε_c|` terms are this times `h(y_m)/m⁴`, `h(y) = y³ coth y csch² y ≤ 1`.
const ENERGY_WEIGHT: f64 = 4.0 / (TWO_PI * TWO_PI * TWO_PI * TWO_PI);

/// `|ε_c(t)| = Σ_m 4t³/(2πm) coth(y_m) csch²(y_m)`, summed until
/// `2 · 4/(2π)⁴ · h(y_{M+1}) / (3M³)` (a majorant of the tail, doubled) is
/// below `tol`.
fn energy_sum(t: f64, ctl: SeriesControl) -> Result<f64> {
    let z = TWO_PI * t;
    let prefactor = 4.0 * t * t * t / TWO_PI;
    let mut acc = NeumaierSum::new();
    let (mut coth, mut csch2) = coth_csch2(z);
    let mut m = 1usize;
    loop {
        acc += prefactor / m as f64 * coth * csch2;
        let y_next = (m + 1) as f64 * z;
        (coth, csch2) = coth_csch2(y_next);
        let h_next = y_next * y_next * y_next * coth * csch2;
        let mf = m as f64;
        let bound = 2.0 * ENERGY_WEIGHT * h_next / (3.0 * mf * mf * mf);
        if bound < ctl.tol {
            return Ok(acc.sum());
        }
        if m >= ctl.max_terms {
            return Err(Error::NotConverged { t, terms: m, bound });
        }
        m += 1;
    }
}

/// `S = Σ_m [coth(y_m) − 1 + y_m csch²(y_m)] / m³`, stopped when
/// `A · weight · (bracket at m = M+1) / (2M²) < tol`. The bracket is
/// decreasing in `y`, so this bounds `A · weight · tail`.
fn free_sum(t: f64, weight: f64, ctl: SeriesControl) -> Result<f64> {
    let z = TWO_PI * t;
    let bracket = |y: f64| coth_minus_one(y) + y * coth_csch2(y).1;
    let mut acc = NeumaierSum::new();
    let mut current = bracket(z);
    let mut m = 1usize;
    loop {
        let mf = m as f64;
        acc += current / (mf * mf * mf);
        current = bracket((m + 1) as f64 * z);
        let bound = FREE_WEIGHT * weight * current / (2.0 * mf * mf);
        if bound < ctl.tol {
            return Ok(acc.sum());
        }
        if m >= ctl.max_terms {
            return Err(Error::NotConverged { t, terms: m, bound });
        }
        m += 1;
    }
}

/// Casimir energy `ε_c(t)`.
pub fn eps_c(t: DimlessTemp, ctl: SeriesControl) -> Result<f64> {
    let t = t.get();
    if t == 0.0 {
        return Ok(eps_c_zero());
    }
    Ok(-energy_sum(t, ctl)?)
}

/// Casimir free energy `φ_c(t)`.
pub fn phi_c(t: DimlessTemp, ctl: SeriesControl) -> Result<f64> {
    let t = t.get();
    if t == 0.0 {
        return Ok(eps_c_zero());
    }
    let s = free_sum(t, t, ctl)?;
    Ok(-t * (sigma_classical() + FREE_WEIGHT * s))
}

/// Casimir entropy `σ_c(t) = (ε_c − φ_c)/t`; zero at `t = 0`.
pub fn sigma_c(t: DimlessTemp, ctl: SeriesControl) -> Result<f64> {
    Ok(evaluate(t, ctl)?.sigma_c)
}

/// All three observables from one pass over each series. Both loops are
/// run tight enough that each of `ε_c`, `φ_c` and `σ_c` is within
/// `ctl.tol`.
pub fn evaluate(t: DimlessTemp, ctl: SeriesControl) -> Result<CasimirPoint> {
    let tv = t.get();
    if tv == 0.0 {
        let e0 = eps_c_zero();
        return Ok(CasimirPoint {
            t,
            eps_c: e0,
            phi_c: e0,
            sigma_c: 0.0,
        });
    }
    // σ picks up the energy tail divided by t and half of each budget.
    let energy = energy_sum(tv, ctl.with_tol(ctl.tol * (0.5 * tv).min(1.0)))?;
    let s = free_sum(tv, tv.max(2.0), ctl)?;
    let sigma_inf = sigma_classical();
    let remainder = FREE_WEIGHT * s;
    let deficit = energy / tv - remainder;
    Ok(CasimirPoint {
        t,
        eps_c: -energy,
        phi_c: -tv * (sigma_inf + remainder),
        sigma_c: sigma_inf - deficit,
    })
}

/// Evenly spaced points on `[t_min, t_max]`, ascending.
pub fn curve(
    t_min: f64,
    t_max: f64,
    steps: usize,
    ctl: SeriesControl,
) -> Result<Vec<CasimirPoint>> {
    if !(t_min >= 0.0 && t_min.is_finite()) {
        return Err(Error::domain("curve t_min", t_min));
    }
    if !(t_max > t_min && t_max.is_finite()) {
        return Err(Error::domain("curve t_max", t_max));
    }
    if steps < 2 {
        return Err(Error::Config("curve needs at least two steps"));
    }
    let span = t_max - t_min;
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            let t = if i + 1 == steps {
                t_max
            } else {
                t_min + span * i as f64 / last
            };
            evaluate(DimlessTemp::new(t)?, ctl)
        })
        .collect()
}
