use crate::constants::Dimension;
use crate::numerics::QuadratureError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the formula.
    #[error("{what}: {detail}")]
    Domain { what: &'static str, detail: String },

    /// A field evaluator was asked for a point in the wrong region.
    #[error("{what}: point at rho = {rho:e} m is outside the region (boundary at {boundary:e} m); use {use_instead}")]
    Region {
        what: &'static str,
        rho: f64,
        boundary: f64,
        use_instead: &'static str,
    },

    #[error("{0} is only defined for circular polarization")]
    Unsupported(&'static str),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: Dimension, right: Dimension },

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

impl Error {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }
}
