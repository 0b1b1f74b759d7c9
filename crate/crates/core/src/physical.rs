//! SI observables for concrete plates.
//!
//! Everything scales with the energy density `D = ħcπ²/(2d⁴)`:
//! `E_c = L²d·D·ε_c`, `F_c = L²d·D·φ_c`, `S_c = k_B π² L² σ_c/(2d²)`, and
//! the pressure on the plates is `P = D(2φ_c + ε_c)`, which at `T = 0` is the
//! Casimir pressure `−π²ħc/(240 d⁴)`.

use core::f64::consts::PI;

use crate::thermo::{self, DimlessTemp, SeriesControl};
use crate::{Error, Result};

/// `ħ`, `c` and `k_B` in whatever units the caller wants to work in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub hbar: f64,
    pub c: f64,
    pub k_b: f64,
}

impl Constants {
    /// CODATA 2018 (all three are exact in the revised SI apart from the
    /// decimal expansion of `ħ`).
    pub const SI: Constants = Constants {
        hbar: 1.054571817e-34,
        c: 2.99792458e8,
        k_b: 1.380649e-23,
    };

    /// `ħ = c = k_B = 1`.
    pub const NATURAL: Constants = Constants {
        hbar: 1.0,
        c: 1.0,
        k_b: 1.0,
    };

    fn hbar_c(&self) -> f64 {
        self.hbar * self.c
    }
}

impl Default for Constants {
    fn default() -> Self {
        Constants::SI
    }
}

/// Plate separation `d`, edge length `L`, temperature `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateConfig {
    d: f64,
    plate_size: f64,
    temperature: f64,
    constants: Constants,
}

impl PlateConfig {
    pub fn new(d: f64, plate_size: f64, temperature: f64) -> Result<Self> {
        Self::with_constants(d, plate_size, temperature, Constants::SI)
    }

    pub fn with_constants(
        d: f64,
        plate_size: f64,
        temperature: f64,
        constants: Constants,
    ) -> Result<Self> {
        let positive = |x: f64| x > 0.0 && x.is_finite();
        if !positive(d) {
            return Err(Error::domain("plate separation", d));
        }
        if !positive(plate_size) {
            return Err(Error::domain("plate size", plate_size));
        }
        if !(temperature >= 0.0 && temperature.is_finite()) {
            return Err(Error::domain("temperature", temperature));
        }
        if plate_size < d {
            return Err(Error::Config("plate size must be at least the separation"));
        }
        if !(positive(constants.hbar) && positive(constants.c) && positive(constants.k_b)) {
            return Err(Error::Config("physical constants must be positive"));
        }
        Ok(PlateConfig {
            d,
            plate_size,
            temperature,
            constants,
        })
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn plate_size(&self) -> f64 {
        self.plate_size
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn constants(&self) -> Constants {
        self.constants
    }

    /// Same plates and constants at another separation.
    pub fn at_separation(&self, d: f64) -> Result<Self> {
        Self::with_constants(d, self.plate_size, self.temperature, self.constants)
    }

    /// Same plates and constants at another temperature.
    pub fn at_temperature(&self, temperature: f64) -> Result<Self> {
        Self::with_constants(self.d, self.plate_size, temperature, self.constants)
    }

    /// False when `L < 10d`, where edge effects the slab model ignores are
    /// no longer small.
    pub fn is_thin_slab(&self) -> bool {
        self.plate_size >= 10.0 * self.d
    }

    /// `D = ħcπ²/(2d⁴)`.
    pub fn energy_density(&self) -> f64 {
        let d2 = self.d * self.d;
        self.constants.hbar_c() * PI * PI / (2.0 * d2 * d2)
    }

    /// `t = πT/T_c`.
    pub fn reduced_temperature(&self) -> DimlessTemp {
        let t = PI * self.temperature / characteristic_temperature(self);
        DimlessTemp::new(t).expect("validated configuration gives a finite t")
    }

    fn volume(&self) -> f64 {
        self.plate_size * self.plate_size * self.d
    }
}

/// `T_c = ħcπ/(k_B d)`.
pub fn characteristic_temperature(cfg: &PlateConfig) -> f64 {
    cfg.constants.hbar_c() * PI / (cfg.constants.k_b * cfg.d)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalReport {
    /// Characteristic temperature, K.
    pub t_c: f64,
    pub t: f64,
    /// `D`, J/m³.
    pub energy_density: f64,
    /// `E_c`, J.
    pub energy: f64,
    /// `F_c`, J.
    pub free_energy: f64,
    /// `S_c`, J/K.
    pub entropy: f64,
    /// Pa; negative is attractive.
    pub pressure: f64,
}

pub fn report(cfg: &PlateConfig, ctl: SeriesControl) -> Result<PhysicalReport> {
    let t = cfg.reduced_temperature();
    let point = thermo::evaluate(t, ctl)?;
    let dens = cfg.energy_density();
    let l2 = cfg.plate_size * cfg.plate_size;
    Ok(PhysicalReport {
        t_c: characteristic_temperature(cfg),
        t: t.get(),
        energy_density: dens,
        energy: cfg.volume() * dens * point.eps_c,
        free_energy: cfg.volume() * dens * point.phi_c,
        entropy: cfg.constants.k_b * PI * PI * l2 * point.sigma_c / (2.0 * cfg.d * cfg.d),
        pressure: dens * (2.0 * point.phi_c + point.eps_c),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroTempForce {
    /// N, on the whole plate.
    pub total: f64,
    /// Pa.
    pub per_area: f64,
}

/// The `T = 0` Casimir force `−π²ħcL²/(240 d⁴)`.
pub fn casimir_force_zero_t(cfg: &PlateConfig) -> ZeroTempForce {
    let d2 = cfg.d * cfg.d;
    let per_area = -PI * PI * cfg.constants.hbar_c() / (240.0 * d2 * d2);
    debug_assert!({
        let from_series = cfg.energy_density() * 3.0 * thermo::eps_c_zero();
        ((from_series - per_area) / per_area).abs() < 1e-12
    });
    ZeroTempForce {
        total: per_area * cfg.plate_size * cfg.plate_size,
        per_area,
    }
}
