//! Special functions and exact sequences: Bernoulli numbers over exact
//! rationals, Riemann zeta at integers, polylogarithms of orders 1–4,
//! overflow-free hyperbolic factors and the Bose function.
//!
//! Branch switch points are the `pub const`s re-exported here.

mod bernoulli;
mod elementary;
mod polylog;
mod rational;
mod zeta;

pub use bernoulli::{bernoulli, BernoulliTable};
pub use elementary::{bose, coth_scaled, csch2_scaled, BOSE_SERIES_BELOW};
pub use polylog::{polylog, LOG_SERIES_BELOW};
pub use rational::ExactRational;
pub use zeta::zeta_int;

pub(crate) use bernoulli::shared as bernoulli_shared;
pub(crate) use elementary::{coth_csch2, coth_minus_one};
pub(crate) use polylog::li_neg_exp;
pub(crate) use zeta::zeta_dd;
