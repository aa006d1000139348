//! Numerical oracles: adaptive quadrature on finite, semi-infinite and
//! doubly-infinite intervals, and bracketing root finding.
//!
//! Nothing in here knows about the physics; the other modules call these to
//! check their closed forms.

mod quadrature;
mod roots;

pub use quadrature::{
    integrate_finite, integrate_real_line, integrate_semi_infinite, Integrator, QuadratureError, QuadratureResult,
};
pub use roots::{bisect, find_root, Bracket};

/// Default relative tolerance for module-level checks.
pub const DEFAULT_TOL: f64 = 1e-10;
