//! TEM mode of a thin cylindrical guide of radius b.
//!
//! ```text
//! E_in = E₀(ρ̂ − jφ̂) e^{−jφ} e^{i(ωt−kz)}            cB_in =  j E_in
//! E_ex = −E₀(b²/ρ²)(ρ̂ + jφ̂) e^{−jφ} e^{i(ωt−kz)}    cB_ex = −j E_ex
//! ```
//!
//! i carries the space-time oscillation and j the azimuthal structure. The
//! polarization selects j = 0 (linear) or j = ±i (circular); [`Bicomplex`]
//! keeps j symbolic where the projection matters, as for the angular momentum.
//!
//! Permittivity is ε₀ throughout.

mod bicomplex;
mod closure;
mod fields;
mod geometry;

pub use bicomplex::Bicomplex;
pub use closure::{closure_integrals, wall_densities, ClosureIntegrals, CUTOFF};
pub use fields::{
    angular_momentum, energy_momentum, field_exterior, field_exterior_bicomplex, field_interior,
    field_interior_bicomplex, interface_charge_current, potentials, poynting_exterior, poynting_from_fields,
    pulse_energy, stress_from_fields, surface_pressure, wall_fields, AngularMomentum, BVec3, EnergyMomentum,
    GuidedModeParams, InterfaceSources, PhasorField, Polarization,
};
pub use geometry::{flux_line_geometry, Arc, FluxLine, Point};
