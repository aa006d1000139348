use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::bicomplex::Bicomplex;
use crate::constants::{PhysicalConstants, SI};
use crate::vector::{cylindrical_to_cartesian, CVec3, Vec3};
use crate::{Error, Result};

/// Value substituted for the azimuthal unit j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    /// j = 0
    Linear,
    /// j = +i
    Right,
    /// j = −i
    Left,
}

impl Polarization {
    pub fn j(self) -> Complex64 {
        match self {
            Polarization::Linear => Complex64::new(0.0, 0.0),
            Polarization::Right => Complex64::i(),
            Polarization::Left => -Complex64::i(),
        }
    }

    pub fn is_circular(self) -> bool {
        self != Polarization::Linear
    }
}

/// State of one guided photon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GuidedModeParams {
    /// Field amplitude (V/m).
    pub e0: f64,
    /// Guide radius (m).
    pub b: f64,
    /// Angular frequency (rad/s).
    pub omega: f64,
    /// Axial wavenumber (rad/m).
    pub k: f64,
    pub polarization: Polarization,
    /// Pulse length (m).
    pub l: f64,
}

impl GuidedModeParams {
    /// Parameters with k = ω/c.
    pub fn new(e0: f64, b: f64, omega: f64, l: f64, polarization: Polarization) -> Result<Self> {
        for (name, v) in [("E0", e0), ("b", b), ("omega", omega), ("l", l)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(
                    "GuidedModeParams",
                    format!("{name} must be > 0, got {v}"),
                ));
            }
        }
        Ok(GuidedModeParams {
            e0,
            b,
            omega,
            k: omega / SI.c,
            polarization,
            l,
        })
    }

    pub fn with_k(mut self, k: f64) -> Self {
        self.k = k;
        self
    }

    pub fn with_polarization(mut self, polarization: Polarization) -> Self {
        self.polarization = polarization;
        self
    }

    /// ωt − kz
    pub fn phase(&self, z: f64, t: f64) -> f64 {
        self.omega * t - self.k * z
    }

    fn require_circular(&self, what: &'static str) -> Result<()> {
        if self.polarization.is_circular() {
            Ok(())
        } else {
            Err(Error::Unsupported(what))
        }
    }
}

/// Phasor E (V/m) and B (T) in cylindrical components (ρ, φ, z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasorField {
    #[serde(serialize_with = "serialize_cvec")]
    pub e: CVec3,
    #[serde(serialize_with = "serialize_cvec")]
    pub b: CVec3,
}

fn serialize_cvec<S: serde::Serializer>(v: &CVec3, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for c in v.0 {
        seq.serialize_element(&[c.re, c.im])?;
    }
    seq.end()
}

impl PhasorField {
    /// Axial components vanish exactly.
    pub fn is_tem(&self) -> bool {
        self.e.z() == Complex64::new(0.0, 0.0) && self.b.z() == Complex64::new(0.0, 0.0)
    }

    /// Same field with Cartesian components at azimuth `phi`.
    pub fn to_cartesian(&self, phi: f64) -> PhasorField {
        PhasorField {
            e: cylindrical_to_cartesian(self.e, phi),
            b: cylindrical_to_cartesian(self.b, phi),
        }
    }
}

/// Bicomplex phasor vector.
pub type BVec3 = Vec3<Bicomplex>;

fn carrier(p: &GuidedModeParams, phi: f64, z: f64, t: f64) -> Complex64 {
    let j = p.polarization.j();
    (-j * phi).exp() * Complex64::from_polar(1.0, p.phase(z, t))
}

fn interior_unchecked(p: &GuidedModeParams, k: &PhysicalConstants, phi: f64, z: f64, t: f64) -> PhasorField {
    let j = p.polarization.j();
    let x = carrier(p, phi, z, t) * p.e0;
    let e = Vec3::new(x, -j * x, Complex64::new(0.0, 0.0));
    PhasorField { e, b: e.scale(j / k.c) }
}

fn exterior_unchecked(p: &GuidedModeParams, k: &PhysicalConstants, rho: f64, phi: f64, z: f64, t: f64) -> PhasorField {
    let j = p.polarization.j();
    let x = carrier(p, phi, z, t) * (-p.e0 * (p.b / rho).powi(2));
    let e = Vec3::new(x, j * x, Complex64::new(0.0, 0.0));
    PhasorField {
        e,
        b: e.scale(-j / k.c),
    }
}

/// Fields inside the guide, ρ < b, with j substituted per the polarization.
pub fn field_interior(p: &GuidedModeParams, rho: f64, phi: f64, z: f64, t: f64) -> Result<PhasorField> {
    if !(rho >= 0.0 && rho < p.b) {
        return Err(Error::Region {
            what: "field_interior",
            rho,
            boundary: p.b,
            use_instead: "field_exterior",
        });
    }
    Ok(interior_unchecked(p, &SI, phi, z, t))
}

/// Fields outside the guide, ρ > b.
pub fn field_exterior(p: &GuidedModeParams, rho: f64, phi: f64, z: f64, t: f64) -> Result<PhasorField> {
    if !(rho > p.b) {
        return Err(Error::Region {
            what: "field_exterior",
            rho,
            boundary: p.b,
            use_instead: "field_interior",
        });
    }
    Ok(exterior_unchecked(p, &SI, rho, phi, z, t))
}

/// Inner and outer limits of the fields at ρ = b.
pub fn wall_fields(p: &GuidedModeParams, phi: f64, z: f64, t: f64) -> (PhasorField, PhasorField) {
    (
        interior_unchecked(p, &SI, phi, z, t),
        exterior_unchecked(p, &SI, p.b, phi, z, t),
    )
}

/// Interior (E, cB) with j kept symbolic.
pub fn field_interior_bicomplex(p: &GuidedModeParams, rho: f64, phi: f64, z: f64, t: f64) -> Result<(BVec3, BVec3)> {
    field_interior(p, rho, phi, z, t)?;
    let x = Bicomplex::exp_j(-phi) * Bicomplex::exp_i(p.phase(z, t)) * p.e0;
    let e = Vec3::new(x, -(Bicomplex::J * x), Bicomplex::ZERO);
    Ok((e, e.scale(Bicomplex::J)))
}

/// Exterior (E, cB) with j kept symbolic.
pub fn field_exterior_bicomplex(p: &GuidedModeParams, rho: f64, phi: f64, z: f64, t: f64) -> Result<(BVec3, BVec3)> {
    field_exterior(p, rho, phi, z, t)?;
    let x = Bicomplex::exp_j(-phi) * Bicomplex::exp_i(p.phase(z, t)) * (-p.e0 * (p.b / rho).powi(2));
    let e = Vec3::new(x, Bicomplex::J * x, Bicomplex::ZERO);
    Ok((e, e.scale(-Bicomplex::J)))
}

/// Scalar potential Φ and axial vector potential A_z = Φ/c (Lorenz gauge).
pub fn potentials(p: &GuidedModeParams, rho: f64, phi: f64, z: f64, t: f64) -> (Complex64, Complex64) {
    let x = carrier(p, phi, z, t);
    let radial = if rho <= p.b { rho } else { p.b * p.b / rho };
    let pot = x * (-p.e0 * radial);
    (pot, pot / SI.c)
}

/// Sources carried by the wall at ρ = b.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterfaceSources {
    /// κ = ε₀ ρ̂·(E_in − E_ex) (C/m²)
    pub kappa: Complex64,
    /// Axial ηI = ρ̂ × (cB_in − cB_ex) (V/m)
    pub eta_current: Complex64,
    /// Mean of inner and outer fields at the wall.
    pub wall: PhasorField,
}

impl InterfaceSources {
    /// Axial surface current (A/m).
    pub fn current(&self) -> Complex64 {
        self.eta_current / SI.eta
    }
}

pub fn interface_charge_current(p: &GuidedModeParams, phi: f64, z: f64, t: f64) -> InterfaceSources {
    let (inner, outer) = wall_fields(p, phi, z, t);
    let de = inner.e - outer.e;
    let dcb = (inner.b - outer.b).scale_real(SI.c);
    InterfaceSources {
        kappa: de.x() * SI.eps0,
        // ρ̂ × φ̂ = ẑ
        eta_current: dcb.y(),
        wall: PhasorField {
            e: (inner.e + outer.e).scale_real(0.5),
            b: (inner.b + outer.b).scale_real(0.5),
        },
    }
}

/// W = πε₀E₀²b²l, the energy of one pulse.
pub fn pulse_energy(p: &GuidedModeParams) -> f64 {
    PI * SI.eps0 * p.e0 * p.e0 * p.b * p.b * p.l
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyMomentum {
    /// J
    pub energy: f64,
    /// kg·m/s
    pub momentum: f64,
    /// Interior axial Poynting flux (W/m²).
    pub poynting_interior: f64,
}

pub fn energy_momentum(p: &GuidedModeParams) -> Result<EnergyMomentum> {
    p.require_circular("energy_momentum")?;
    let w = pulse_energy(p);
    Ok(EnergyMomentum {
        energy: w,
        momentum: w / SI.c,
        poynting_interior: p.e0 * p.e0 / SI.eta,
    })
}

/// Time-averaged axial Poynting flux ½Re(E × H*)·ẑ from a field sample.
pub fn poynting_from_fields(f: &PhasorField) -> f64 {
    let h = f.b.scale_real(1.0 / SI.mu0);
    0.5 * f.e.cross(h.map(|c| c.conj())).z().re
}

/// Exterior flux E₀²b⁴/(ηρ⁴).
pub fn poynting_exterior(p: &GuidedModeParams, rho: f64) -> Result<f64> {
    p.require_circular("poynting_exterior")?;
    if !(rho > p.b) {
        return Err(Error::Region {
            what: "poynting_exterior",
            rho,
            boundary: p.b,
            use_instead: "energy_momentum",
        });
    }
    Ok(p.e0 * p.e0 * (p.b / rho).powi(4) / SI.eta)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularMomentum {
    /// L = −ij(W/ω) with j symbolic (J·s).
    pub symbolic: Bicomplex,
    /// L after substituting j (±i) or keeping the j-free part (linear).
    pub value: f64,
    /// W/L; infinite when L vanishes.
    pub energy_ratio: f64,
}

pub fn angular_momentum(p: &GuidedModeParams) -> AngularMomentum {
    let w = pulse_energy(p);
    let symbolic = -(Bicomplex::I * Bicomplex::J) * Bicomplex::real(w / p.omega);
    let value = match p.polarization {
        Polarization::Linear => symbolic.real_j(),
        pol => symbolic.substitute(pol.j()),
    }
    .re;
    let energy_ratio = if value == 0.0 { f64::INFINITY } else { w / value };
    AngularMomentum {
        symbolic,
        value,
        energy_ratio,
    }
}

/// (ε₀|E|² − |B|²/μ₀)/4 for a phasor sample; positive pushes outward.
pub fn stress_from_fields(e: CVec3, b: CVec3) -> f64 {
    (SI.eps0 * e.norm_sqr() - b.norm_sqr() / SI.mu0) / 4.0
}

/// Surface pressure on the wall from the interface fields.
pub fn surface_pressure(p: &GuidedModeParams, phi: f64, z: f64, t: f64) -> Result<f64> {
    p.require_circular("surface_pressure")?;
    let w = interface_charge_current(p, phi, z, t).wall;
    Ok(stress_from_fields(w.e, w.b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::RVec3;

    fn params(pol: Polarization) -> GuidedModeParams {
        GuidedModeParams::new(1.84e16, 1e-17, 2.0 * PI * 6e14, 2.1e-7, pol).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn circular_moduli() {
        for pol in [Polarization::Right, Polarization::Left] {
            let p = params(pol);
            let f = field_interior(&p, 0.3 * p.b, 1.1, 2e-8, 1e-16).unwrap();
            assert!(rel(f.e.norm(), 2f64.sqrt() * p.e0) < 1e-14);
            assert!(rel(SI.c * f.b.norm(), f.e.norm()) < 1e-14);
            assert!(f.is_tem());
        }
    }

    #[test]
    fn linear_is_radial_and_unmagnetised() {
        let p = params(Polarization::Linear);
        let (z, t) = (3e-8, 2e-16);
        let f = field_interior(&p, 0.5 * p.b, 0.7, z, t).unwrap();
        let expect = Complex64::from_polar(p.e0, p.phase(z, t));
        assert!((f.e.x() - expect).norm() < 1e-14 * p.e0);
        assert_eq!(f.e.y(), Complex64::new(0.0, 0.0));
        assert_eq!(f.b.norm(), 0.0);
    }

    #[test]
    fn interior_lines_straight() {
        let p = params(Polarization::Right);
        let dir = |rho| {
            let f = field_interior(&p, rho, 0.4, 0.0, 0.0).unwrap().to_cartesian(0.4);
            let e = f.e.re();
            e.scale(1.0 / e.norm())
        };
        let a: RVec3 = dir(0.1 * p.b);
        let b: RVec3 = dir(0.9 * p.b);
        assert!((a - b).max_abs() < 1e-14);
        // uniform x̂ at zero phase
        assert!((a - RVec3::new(1.0, 0.0, 0.0)).max_abs() < 1e-14);
    }

    #[test]
    fn regions_enforced() {
        let p = params(Polarization::Right);
        assert!(matches!(
            field_interior(&p, p.b, 0.0, 0.0, 0.0),
            Err(Error::Region { .. })
        ));
        assert!(matches!(
            field_exterior(&p, p.b, 0.0, 0.0, 0.0),
            Err(Error::Region { .. })
        ));
        assert!(field_exterior(&p, 0.5 * p.b, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn exterior_decay() {
        let p = params(Polarization::Left);
        let (inner, outer) = wall_fields(&p, 0.3, 0.0, 0.0);
        assert!(rel(inner.e.norm(), outer.e.norm()) < 1e-14);
        let f1 = field_exterior(&p, 1.0000001 * p.b, 0.3, 0.0, 0.0).unwrap();
        let f2 = field_exterior(&p, 2.0 * p.b, 0.3, 0.0, 0.0).unwrap();
        assert!(rel(f2.e.norm() * 4.0, outer.e.norm()) < 1e-14);
        assert!(rel(f1.e.norm(), outer.e.norm()) < 1e-6);
        let far = field_exterior(&p, 1e9 * p.b, 0.3, 0.0, 0.0).unwrap();
        assert!(far.e.norm() < 1e-17 * p.e0);
    }

    #[test]
    fn bicomplex_projection_matches_substitution() {
        for pol in [Polarization::Right, Polarization::Left] {
            let p = params(pol);
            let (rho, phi, z, t) = (0.4 * p.b, -2.2, 1e-7, 3e-16);
            let (e, cb) = field_interior_bicomplex(&p, rho, phi, z, t).unwrap();
            let f = field_interior(&p, rho, phi, z, t).unwrap();
            let pe = e.map(|c| c.substitute(pol.j()));
            let pb = cb.map(|c| c.substitute(pol.j()));
            assert!((pe - f.e).max_abs() < 1e-14 * p.e0);
            assert!((pb - f.b.scale_real(SI.c)).max_abs() < 1e-14 * p.e0);

            let rho = 3.0 * p.b;
            let (e, cb) = field_exterior_bicomplex(&p, rho, phi, z, t).unwrap();
            let f = field_exterior(&p, rho, phi, z, t).unwrap();
            assert!((e.map(|c| c.substitute(pol.j())) - f.e).max_abs() < 1e-14 * p.e0);
            assert!((cb.map(|c| c.substitute(pol.j())) - f.b.scale_real(SI.c)).max_abs() < 1e-14 * p.e0);
        }
    }

    #[test]
    fn wall_conditions() {
        for pol in [Polarization::Right, Polarization::Left] {
            let p = params(pol);
            for i in 0..16 {
                let phi = i as f64 * 0.4;
                let t = i as f64 * 1.3e-16;
                let (inn, out) = wall_fields(&p, phi, 1e-8 * i as f64, t);
                let tol = 1e-14 * p.e0;
                assert!((inn.e.x() + out.e.x()).norm() < tol);
                assert!((inn.e.y() - out.e.y()).norm() < tol);
                assert!(((inn.b.x() - out.b.x()) * SI.c).norm() < tol);
                assert!(((inn.b.y() + out.b.y()) * SI.c).norm() < tol);
            }
        }
    }

    #[test]
    fn exterior_divergence_free() {
        // finite-difference ∇·E in the transverse plane
        let p = params(Polarization::Right);
        let ex = |x: f64, y: f64| {
            let rho = x.hypot(y);
            let phi = y.atan2(x);
            field_exterior(&p, rho, phi, 0.0, 0.0).unwrap().to_cartesian(phi).e
        };
        for (x, y) in [(1.7, 0.3), (-2.5, 1.1), (0.4, -3.0)] {
            let (x, y) = (x * p.b, y * p.b);
            let h = 1e-5 * p.b;
            let dx = (ex(x + h, y).x() - ex(x - h, y).x()) / (2.0 * h);
            let dy = (ex(x, y + h).y() - ex(x, y - h).y()) / (2.0 * h);
            let scale = ex(x, y).norm() / p.b;
            assert!((dx + dy).norm() < 1e-7 * scale);
        }
    }

    #[test]
    fn potentials_generate_fields() {
        let p = params(Polarization::Left);
        for rho in [0.5 * p.b, 2.5 * p.b] {
            let phi = 0.9;
            let h = 1e-6;
            let d_rho = (potentials(&p, rho * (1.0 + h), phi, 0.0, 0.0).0
                - potentials(&p, rho * (1.0 - h), phi, 0.0, 0.0).0)
                / (2.0 * h * rho);
            let d_phi =
                (potentials(&p, rho, phi + h, 0.0, 0.0).0 - potentials(&p, rho, phi - h, 0.0, 0.0).0) / (2.0 * h * rho);
            let f = if rho < p.b {
                field_interior(&p, rho, phi, 0.0, 0.0)
            } else {
                field_exterior(&p, rho, phi, 0.0, 0.0)
            }
            .unwrap();
            assert!((f.e.x() + d_rho).norm() < 1e-8 * f.e.norm());
            assert!((f.e.y() + d_phi).norm() < 1e-8 * f.e.norm());
        }
    }

    #[test]
    fn interface_sources() {
        let p = params(Polarization::Right);
        let s = interface_charge_current(&p, 0.0, 0.0, 0.0);
        assert!(rel(s.kappa.norm(), 2.0 * SI.eps0 * p.e0) < 1e-14);
        assert!(rel(s.eta_current.norm(), 2.0 * p.e0) < 1e-14);
        assert!(rel(s.kappa.norm() * SI.eta * SI.c / s.eta_current.norm(), 1.0) < 1e-12);
        // printed interface fields: −jE₀φ̂ and jE₀ρ̂ / c
        let j = Complex64::i();
        assert!((s.wall.e.y() + j * p.e0).norm() < 1e-14 * p.e0);
        assert!((s.wall.b.x() * SI.c - j * p.e0).norm() < 1e-14 * p.e0);
        let flipped = interface_charge_current(&p, PI, 0.0, 0.0);
        assert!(rel(flipped.kappa.re, -s.kappa.re) < 1e-14);
    }

    #[test]
    fn energy_and_momenta() {
        let p = params(Polarization::Right);
        let em = energy_momentum(&p).unwrap();
        assert_eq!(em.energy / em.momentum, SI.c);
        let mut q = p;
        q.b *= 2.0;
        assert!(rel(energy_momentum(&q).unwrap().energy, 4.0 * em.energy) < 1e-14);
        assert!(energy_momentum(&params(Polarization::Linear)).is_err());
        let f = field_interior(&p, 0.2 * p.b, 0.0, 0.0, 0.0).unwrap();
        assert!(rel(poynting_from_fields(&f), em.poynting_interior) < 1e-12);
        let rho = 3.0 * p.b;
        let f = field_exterior(&p, rho, 0.1, 0.0, 0.0).unwrap();
        assert!(rel(poynting_from_fields(&f), poynting_exterior(&p, rho).unwrap()) < 1e-12);
    }

    #[test]
    fn angular_momentum_ratios() {
        let r = params(Polarization::Right);
        let w = pulse_energy(&r);
        let l = angular_momentum(&r);
        assert!(rel(l.value, w / r.omega) < 1e-14);
        assert!(rel(l.energy_ratio, r.omega) < 1e-14);
        let l = angular_momentum(&params(Polarization::Left));
        assert!(rel(l.energy_ratio, -r.omega) < 1e-14);
        let l = angular_momentum(&params(Polarization::Linear));
        assert_eq!(l.value, 0.0);
        assert!(l.energy_ratio.is_infinite());
        // W = ħω/2 gives L = ħ/2
        let e0 = (SI.hbar * r.omega / 2.0 / (PI * SI.eps0 * r.b * r.b * r.l)).sqrt();
        let half = GuidedModeParams { e0, ..r };
        assert!(rel(angular_momentum(&half).value, SI.hbar / 2.0) < 1e-12);
    }

    #[test]
    fn pressure_balance_and_probe() {
        let p = params(Polarization::Left);
        let scale = SI.eps0 * p.e0 * p.e0;
        for i in 0..8 {
            let g = surface_pressure(&p, 0.8 * i as f64, 0.0, 1e-16 * i as f64).unwrap();
            assert!(g.abs() <= 1e-12 * scale);
        }
        let w = interface_charge_current(&p, 0.2, 0.0, 0.0).wall;
        assert!(stress_from_fields(w.e, w.b.scale_real(1.1)) < 0.0);
    }
}
