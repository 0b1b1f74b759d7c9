use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    /// A series hit its term cap before its tail bound dropped below the
    /// requested tolerance.
    #[error("series at t = {t} not converged after {terms} terms (tail bound {bound:e})")]
    NotConverged { t: f64, terms: usize, bound: f64 },

    /// The cutoff functional would lose more than the tolerance to
    /// cancellation between its three terms.
    #[error("cancellation risk for g_{p} at alpha = {alpha}: term magnitude {magnitude:e}")]
    Cancellation { p: u32, alpha: f64, magnitude: f64 },

    #[error("invalid configuration: {0}")]
    Config(&'static str),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64) -> Self {
        Error::Domain { what, value }
    }
}
