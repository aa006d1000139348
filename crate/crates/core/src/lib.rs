//! Closed-form quantities of a guided-wave photon model, each paired with an
//! independent numerical oracle.
//!
//! The crate is organised by physical subsystem:
//!
//! | module          | contents                                                        |
//! |-----------------|-----------------------------------------------------------------|
//! | [`constants`]   | CODATA 2018 constants and dimension-tagged [`Quantity`] values  |
//! | [`numerics`]    | adaptive Gauss–Kronrod quadrature and bracketing root finding   |
//! | [`nuclear`]     | threshold-field shells around bare nuclei                       |
//! | [`manley_rowe`] | power/frequency bookkeeping of three-wave exchange              |
//! | [`waveguide`]   | TEM fields of the charge-guided tube, closure and stress checks |
//! | [`relativity`]  | speed ratio, Lorentz factor and photon sizing                   |
//! | [`dipole`]      | rotating-dipole fields, parity and charge-induction criteria    |
//! | [`cavity`]      | spherical cavity functions and the lowest eigenradius           |
//! | [`forces`]      | strip pressure and force between neighbouring photons           |
//! | [`report`]      | tables, sweeps, the SVG flux figure and the audit of findings   |
//!
//! Every module is pure: functions take plain values and return records, so
//! checks can be fanned out freely.
//!
//! ```
//! use photon_audit::nuclear::{schwinger_radius, FM};
//! let r = schwinger_radius(26).unwrap() / FM;
//! assert!((r - 169.7).abs() < 0.1);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod cavity;
pub mod constants;
pub mod dipole;
mod error;
pub mod forces;
pub mod manley_rowe;
pub mod nuclear;
pub mod numerics;
pub mod relativity;
pub mod report;
pub mod vector;
pub mod waveguide;

pub use constants::{Dimension, PhysicalConstants, Quantity, SI};
pub use error::{Error, Result};
