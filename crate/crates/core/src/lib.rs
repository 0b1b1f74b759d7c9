//! Thermodynamics of the Casimir effect for the radiation field confined
//! between two parallel, perfectly conducting plates.
//!
//! Everything in this crate is dimensionless unless it lives in
//! [`physical`]. The reduced temperature is `t = πT/T_c` with
//! `k_B T_c = ħcπ/d`, and energy densities are measured in units of
//! `D = ħcπ²/(2d⁴)`.
//!
//! Two evaluation paths are provided and are kept free of shared series code
//! so they can check each other:
//!
//! * [`thermo`] sums the Poisson-dual series for the Casimir energy
//!   `ε_c(t)`, free energy `φ_c(t)` and entropy `σ_c(t)`;
//! * [`modesum`] builds the same quantities from the thermal occupation
//!   integrals of the individual plate modes, using polylogarithms.
//!
//! [`regular`] holds the exponential-cutoff regularization: the `g_p`
//! functionals, their exact Bernoulli-number limits and a numerical cutoff
//! evaluation. [`specialfn`] provides the special functions all of these
//! consume.
//!
//! The crate is `no_std` and needs only `alloc` (for the exact rationals
//! behind the Bernoulli numbers).

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod dd;
mod error;
pub mod modesum;
pub mod physical;
pub mod regular;
pub mod specialfn;
pub mod sum;
pub mod thermo;

pub use error::{Error, Result};
pub use thermo::{CasimirPoint, DimlessTemp, SeriesControl};
