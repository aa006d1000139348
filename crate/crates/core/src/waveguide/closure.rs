//! Field-flux and source-potential energy integrals of one pulse.
//!
//! The four integrals are evaluated from field samples rather than from the
//! closed form they are compared with:
//!
//! * (ε₀/4)∫E·E* dV and (1/4μ₀)∫B·B* dV by nested quadrature over φ and ρ.
//!   The exterior is integrated in ln ρ out to [`CUTOFF`]·b and the remainder
//!   added from the sampled ρ⁻⁴ coefficient at the cutoff.
//! * (1/4)∫Φκ* dV and (1/4)∫A·J* dV over the charge layer at ρ = b, by
//!   quadrature over φ. The densities are the Gauss-law jumps, outer minus
//!   inner; A is the Lorenz-gauge potential Φ/c ẑ.
//!
//! Nothing depends on z once the carrier is conjugated, so the axial
//! integral is the factor l.

use std::cell::{Cell, RefCell};
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::fields::{field_exterior, field_interior, potentials, pulse_energy, wall_fields, GuidedModeParams};
use crate::constants::SI;
use crate::numerics::Integrator;
use crate::{Error, Result};

/// Outer radius, in units of b, of the exterior quadrature.
pub const CUTOFF: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosureIntegrals {
    /// πε₀E₀²b²l
    pub reference: f64,
    pub electric_interior: f64,
    pub electric_exterior: f64,
    pub magnetic_interior: f64,
    pub magnetic_exterior: f64,
    pub charge_potential: f64,
    pub current_potential: f64,
    pub evaluations: usize,
}

impl ClosureIntegrals {
    pub fn electric(&self) -> f64 {
        self.electric_interior + self.electric_exterior
    }

    pub fn magnetic(&self) -> f64 {
        self.magnetic_interior + self.magnetic_exterior
    }

    /// The four energies in order: electric, magnetic, charge-potential, current-potential.
    pub fn energies(&self) -> [f64; 4] {
        [
            self.electric(),
            self.magnetic(),
            self.charge_potential,
            self.current_potential,
        ]
    }

    /// Largest relative departure of the four energies from the reference.
    pub fn max_relative_error(&self) -> f64 {
        self.energies()
            .iter()
            .map(|e| ((e - self.reference) / self.reference).abs())
            .fold(0.0, f64::max)
    }
}

/// Evaluates the four integrals to relative tolerance `tol`.
pub fn closure_integrals(p: &GuidedModeParams, tol: f64) -> Result<ClosureIntegrals> {
    if !p.polarization.is_circular() {
        return Err(Error::Unsupported("closure_integrals"));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(
            "closure_integrals",
            format!("tol must be > 0, got {tol}"),
        ));
    }
    // work in units of E₀ and b, restore at the end
    let inner_tol = tol * 1e-2;
    let quad = Integrator::relative(tol * 0.1);
    let ring = Integrator::relative(inner_tol);
    let mut evaluations = 0;

    // φ-integrated |E|²/E₀² and |cB|²/E₀² at a radius
    let ring_average = |rho: f64, evals: &Cell<usize>| -> Result<(f64, f64)> {
        let sample = |phi: f64, magnetic: bool| {
            let f = if rho < p.b {
                field_interior(p, rho, phi, 0.0, 0.0)
            } else {
                field_exterior(p, rho, phi, 0.0, 0.0)
            }
            .expect("radius chosen inside its region");
            if magnetic {
                f.b.norm_sqr() * SI.c * SI.c / (p.e0 * p.e0)
            } else {
                f.e.norm_sqr() / (p.e0 * p.e0)
            }
        };
        let e = ring.integrate(|phi| sample(phi, false), 0.0, 2.0 * PI)?;
        let m = ring.integrate(|phi| sample(phi, true), 0.0, 2.0 * PI)?;
        evals.set(evals.get() + e.evaluations + m.evaluations);
        Ok((e.value, m.value))
    };

    let radial = |outer: bool, magnetic: bool| -> Result<(f64, usize)> {
        let err = RefCell::new(None);
        let evals = Cell::new(0);
        let integrand = |s: f64| -> f64 {
            // interior: u = ρ/b on (0,1); exterior: s = ln(ρ/b) on (0, ln CUTOFF)
            let u = if outer { s.exp() } else { s };
            let jac = if outer { u } else { 1.0 };
            match ring_average(u * p.b, &evals) {
                Ok((e, m)) => (if magnetic { m } else { e }) * u * jac,
                Err(x) => {
                    err.borrow_mut().get_or_insert(x);
                    f64::NAN
                }
            }
        };
        let hi = if outer { CUTOFF.ln() } else { 1.0 };
        let r = quad.integrate(integrand, 0.0, hi);
        if let Some(e) = err.into_inner() {
            return Err(e);
        }
        let mut value = r?.value;
        if outer {
            // ∫_R^∞ C u⁻⁴ u du = C / (2R²) with C the sampled u⁴·ring integral
            let (e, m) = ring_average(CUTOFF * p.b, &evals)?;
            let c = (if magnetic { m } else { e }) * CUTOFF.powi(4);
            value += c / (2.0 * CUTOFF * CUTOFF);
        }
        Ok((value, evals.get()))
    };

    // (1/4)·E₀²·b²·l·∫∫ |e|² u du dφ, with ε₀ or 1/(μ₀c²) = ε₀ in front
    let energy_scale = 0.25 * SI.eps0 * p.e0 * p.e0 * p.b * p.b * p.l;
    let mut out = [0.0; 4];
    for (slot, (outer, magnetic)) in [(false, false), (true, false), (false, true), (true, true)]
        .into_iter()
        .enumerate()
    {
        let (v, n) = radial(outer, magnetic)?;
        evaluations += n;
        out[slot] = v * energy_scale;
    }
    let magnetic_scale = 1.0 / (SI.mu0 * SI.c * SI.c * SI.eps0);
    let [electric_interior, electric_exterior, mi, me] = out;

    let (charge_potential, current_potential, n) = source_potential(p, &ring)?;
    evaluations += n;

    Ok(ClosureIntegrals {
        reference: pulse_energy(p),
        electric_interior,
        electric_exterior,
        magnetic_interior: mi * magnetic_scale,
        magnetic_exterior: me * magnetic_scale,
        charge_potential,
        current_potential,
        evaluations,
    })
}

/// Gauss-law surface charge ε₀ρ̂·(E_ex − E_in) and surface current
/// ρ̂ × (H_ex − H_in)·ẑ at the wall.
pub fn wall_densities(p: &GuidedModeParams, phi: f64, z: f64, t: f64) -> (Complex64, Complex64) {
    let (inner, outer) = wall_fields(p, phi, z, t);
    let sigma = (outer.e.x() - inner.e.x()) * SI.eps0;
    let k = (outer.b.y() - inner.b.y()) / SI.mu0;
    (sigma, k)
}

fn source_potential(p: &GuidedModeParams, ring: &Integrator) -> Result<(f64, f64, usize)> {
    let charge = ring.integrate(
        |phi| {
            let (pot, _) = potentials(p, p.b, phi, 0.0, 0.0);
            let (sigma, _) = wall_densities(p, phi, 0.0, 0.0);
            (pot * sigma.conj()).re
        },
        0.0,
        2.0 * PI,
    )?;
    let current = ring.integrate(
        |phi| {
            let (_, a_z) = potentials(p, p.b, phi, 0.0, 0.0);
            let (_, k) = wall_densities(p, phi, 0.0, 0.0);
            (a_z * k.conj()).re
        },
        0.0,
        2.0 * PI,
    )?;
    let area = p.b * p.l;
    Ok((
        0.25 * charge.value * area,
        0.25 * current.value * area,
        charge.evaluations + current.evaluations,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::waveguide::Polarization;

    #[test]
    fn four_integrals_agree() {
        let p = GuidedModeParams::new(1.84e16, 1e-17, 2.0 * PI * 6e14, 2.1e-7, Polarization::Right).unwrap();
        let c = closure_integrals(&p, 1e-10).unwrap();
        assert!(c.max_relative_error() < 1e-8, "{c:?}");
        let half = c.reference / 2.0;
        assert!(((c.electric_interior - half) / half).abs() < 1e-8);
        assert!(((c.electric_exterior - half) / half).abs() < 1e-8);
        assert!(((c.magnetic_exterior - half) / half).abs() < 1e-8);
    }

    #[test]
    fn left_handed_and_linear() {
        let p = GuidedModeParams::new(3.0e5, 2.0, 1e9, 0.5, Polarization::Left).unwrap();
        assert!(closure_integrals(&p, 1e-10).unwrap().max_relative_error() < 1e-8);
        let lin = p.with_polarization(Polarization::Linear);
        assert!(matches!(closure_integrals(&lin, 1e-10), Err(Error::Unsupported(_))));
    }
}
