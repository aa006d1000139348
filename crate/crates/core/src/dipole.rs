//! Rotating electric dipoles near a nucleus and the onset of guiding.
//!
//! A dipole p = p(x̂ ∓ iŷ)e^{iωt} has near field (3(p·r̂)r̂ − p)/(4πε₀r³). The
//! same field is written three ways:
//!
//! * linear-region form: {2 sinθ r̂ − (cosθ θ̂ ± jφ̂)} e^{±jφ}, with j = −i
//! * circular form: {2 sinθ r̂ − (cosθ θ̂ ∓ iφ̂)} e^{∓iφ}
//! * mixed form: {3 sinθ r̂ − (ρ̂ ∓ iφ̂)} e^{∓iφ}, with ρ̂ = sinθ r̂ + cosθ θ̂
//!
//! all times p/(4πε₀r³)·e^{i(ωt−kr)}. Each has its own evaluator so they can be
//! compared with [`rotating_near_field`], which works from the vector formula,
//! and with the static axial pattern 2cosθ r̂ + sinθ θ̂ of a z-directed dipole.
//!
//! Upper signs are [`Handedness::Upper`]. All vectors in spherical components
//! (r, θ, φ) unless the function says otherwise. ε is ε₀.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::constants::SI;
use crate::vector::{cartesian_to_spherical, spherical_to_cartesian, CVec3, RVec3, Vec3};
use crate::waveguide::PhasorField;
use crate::{Error, Result};

/// Which of the paired signs (∓/±) applies: upper is −/+.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    Upper,
    Lower,
}

impl Handedness {
    /// +1 for the upper sign of ±.
    pub fn sign(self) -> f64 {
        match self {
            Handedness::Upper => 1.0,
            Handedness::Lower => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Handedness::Upper => Handedness::Lower,
            Handedness::Lower => Handedness::Upper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DipoleParams {
    /// Dipole moment (C·m).
    pub p: f64,
    /// rad/s
    pub omega: f64,
    pub handedness: Handedness,
    /// Static radial nuclear field (V/m).
    pub e_n: f64,
}

impl DipoleParams {
    pub fn new(p: f64, omega: f64, handedness: Handedness, e_n: f64) -> Result<Self> {
        if !(p > 0.0) {
            return Err(Error::domain("DipoleParams", format!("p must be > 0, got {p}")));
        }
        if !(omega >= 0.0) {
            return Err(Error::domain(
                "DipoleParams",
                format!("omega must be >= 0, got {omega}"),
            ));
        }
        if !(e_n >= 0.0) {
            return Err(Error::domain("DipoleParams", format!("E_N must be >= 0, got {e_n}")));
        }
        Ok(DipoleParams {
            p,
            omega,
            handedness,
            e_n,
        })
    }

    pub fn k(&self) -> f64 {
        self.omega / SI.c
    }

    /// p/(4πε₀r³)
    pub fn near_amplitude(&self, r: f64) -> f64 {
        self.p / (4.0 * PI * SI.eps0 * r.powi(3))
    }
}

/// A point with both spherical (r, θ, φ) and cylindrical (ρ, φ, z) coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MixedPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl MixedPoint {
    pub fn spherical(r: f64, theta: f64, phi: f64) -> Self {
        MixedPoint { r, theta, phi }
    }

    pub fn cylindrical(rho: f64, phi: f64, z: f64) -> Self {
        MixedPoint {
            r: rho.hypot(z),
            theta: rho.atan2(z),
            phi,
        }
    }

    pub fn rho(&self) -> f64 {
        self.r * self.theta.sin()
    }

    pub fn z(&self) -> f64 {
        self.r * self.theta.cos()
    }

    pub fn cartesian(&self) -> RVec3 {
        let rho = self.rho();
        RVec3::new(rho * self.phi.cos(), rho * self.phi.sin(), self.z())
    }

    fn check(&self, what: &'static str) -> Result<()> {
        if self.r > 0.0 && self.r.is_finite() {
            Ok(())
        } else {
            Err(Error::domain(what, format!("r must be > 0, got {}", self.r)))
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn retarded(params: &DipoleParams, r: f64, t: f64) -> Complex64 {
    Complex64::from_polar(1.0, params.omega * t - params.k() * r)
}

/// Linear-region form with j = −i.
pub fn dipole_field_linear_region(params: &DipoleParams, pt: MixedPoint, t: f64) -> Result<CVec3> {
    pt.check("dipole_field_linear_region")?;
    let s = params.handedness.sign();
    let j = c(0.0, -1.0);
    let (st, ct) = pt.theta.sin_cos();
    let pattern = Vec3::new(c(2.0 * st, 0.0), c(-ct, 0.0), -(j * s));
    let phase = (j * (s * pt.phi)).exp() * retarded(params, pt.r, t);
    Ok(pattern.scale(phase * params.near_amplitude(pt.r)))
}

/// Circular form with explicit i.
pub fn dipole_field_circular(params: &DipoleParams, pt: MixedPoint, t: f64) -> Result<CVec3> {
    pt.check("dipole_field_circular")?;
    let s = params.handedness.sign();
    let (st, ct) = pt.theta.sin_cos();
    // −(cosθ θ̂ ∓ iφ̂) = −cosθ θ̂ ± iφ̂
    let pattern = Vec3::new(c(2.0 * st, 0.0), c(-ct, 0.0), c(0.0, s));
    let phase = Complex64::from_polar(1.0, -s * pt.phi) * retarded(params, pt.r, t);
    Ok(pattern.scale(phase * params.near_amplitude(pt.r)))
}

/// Mixed-coordinate form including the static E_N r̂.
pub fn total_field_mixed(params: &DipoleParams, pt: MixedPoint, t: f64) -> Result<CVec3> {
    pt.check("total_field_mixed")?;
    let s = params.handedness.sign();
    let (st, ct) = pt.theta.sin_cos();
    // ρ̂ ∓ iφ̂ in spherical components
    let cyl = Vec3::new(c(st, 0.0), c(ct, 0.0), c(0.0, -s));
    let radial = Vec3::new(c(3.0 * st, 0.0), c(0.0, 0.0), c(0.0, 0.0));
    let phase = Complex64::from_polar(1.0, -s * pt.phi) * retarded(params, pt.r, t);
    let osc = (radial - cyl).scale(phase * params.near_amplitude(pt.r));
    Ok(osc + Vec3::new(c(params.e_n, 0.0), c(0.0, 0.0), c(0.0, 0.0)))
}

/// p(x̂ ∓ iŷ)e^{iωt}, Cartesian.
pub fn rotating_dipole_moment(p: f64, omega: f64, t: f64, h: Handedness) -> CVec3 {
    let e = Complex64::from_polar(p, omega * t);
    Vec3::new(e, c(0.0, -h.sign()) * e, c(0.0, 0.0))
}

/// p(ρ̂ ∓ iφ̂)e^{i(ωt ∓ φ)} in cylindrical components at azimuth φ.
pub fn rotating_dipole_moment_cylindrical(p: f64, omega: f64, t: f64, phi: f64, h: Handedness) -> CVec3 {
    let s = h.sign();
    let e = Complex64::from_polar(p, omega * t - s * phi);
    Vec3::new(e, c(0.0, -s) * e, c(0.0, 0.0))
}

/// (3(p·r̂)r̂ − p)/(4πε₀r³)·e^{−ikr} for the rotating moment, from vector algebra.
pub fn rotating_near_field(params: &DipoleParams, pt: MixedPoint, t: f64) -> Result<CVec3> {
    pt.check("rotating_near_field")?;
    let p = rotating_dipole_moment(params.p, params.omega, t, params.handedness);
    let rhat = pt.cartesian().scale(1.0 / pt.r).to_complex();
    let pr: Complex64 = p.0.iter().zip(rhat.0).map(|(a, b)| a * b).sum();
    let e = (rhat.scale(pr * 3.0) - p).scale_real(1.0 / (4.0 * PI * SI.eps0 * pt.r.powi(3)));
    let e = e.scale(Complex64::from_polar(1.0, -params.k() * pt.r));
    Ok(cartesian_to_spherical(e, pt.theta, pt.phi))
}

/// Static z-directed pattern (2cosθ r̂ + sinθ θ̂)·p/(4πε₀r³)·e^{i(ωt−kr)}.
pub fn axial_dipole_field(params: &DipoleParams, pt: MixedPoint, t: f64) -> Result<CVec3> {
    pt.check("axial_dipole_field")?;
    let (st, ct) = pt.theta.sin_cos();
    let pattern = Vec3::new(c(2.0 * ct, 0.0), c(st, 0.0), c(0.0, 0.0));
    Ok(pattern.scale(retarded(params, pt.r, t) * params.near_amplitude(pt.r)))
}

/// ψ = ωt − kz ∓ φ
fn onset_phase(omega: f64, k: f64, z: f64, phi: f64, t: f64, h: Handedness) -> f64 {
    omega * t - k * z - h.sign() * phi
}

/// E₀[ρ̂ cos ψ + φ̂ sin ψ], cylindrical components.
pub fn near_axis_field(e0: f64, omega: f64, k: f64, rho_phi_z: (f64, f64, f64), t: f64, h: Handedness) -> RVec3 {
    let (_, phi, z) = rho_phi_z;
    let (s, c) = onset_phase(omega, k, z, phi, t, h).sin_cos();
    RVec3::new(e0 * c, e0 * s, 0.0)
}

/// E₀ of the near-axis field, −p/(4πε₀r³).
pub fn near_axis_amplitude(p: f64, r: f64) -> f64 {
    -p / (4.0 * PI * SI.eps0 * r.powi(3))
}

/// κ = ε₀E₀ cos ψ (C/m²).
pub fn induced_kappa(e0: f64, omega: f64, k: f64, z: f64, phi: f64, t: f64, h: Handedness) -> f64 {
    SI.eps0 * e0 * onset_phase(omega, k, z, phi, t, h).cos()
}

/// (E₀² + E_N²)^{1/2} > E_S
pub fn exceeds_threshold(e0: f64, e_n: f64) -> bool {
    e0.hypot(e_n) > SI.e_s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParityReport {
    pub parity: Parity,
    /// The sampled field vanished everywhere; reported as even.
    pub degenerate: bool,
    pub even_residual: f64,
    pub odd_residual: f64,
}

/// Compares transverse components at (b, φ) and (b, φ + π) on 16 azimuths.
///
/// `sampler(rho, phi)` returns the Cartesian field.
pub fn parity_check<F>(sampler: F, b: f64) -> ParityReport
where
    F: Fn(f64, f64) -> RVec3,
{
    let (mut even, mut odd, mut scale) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..16 {
        let phi = 2.0 * PI * i as f64 / 16.0;
        let a = sampler(b, phi);
        let m = sampler(b, phi + PI);
        let (a, m) = (RVec3::new(a.x(), a.y(), 0.0), RVec3::new(m.x(), m.y(), 0.0));
        even = even.max((a - m).norm());
        odd = odd.max((a + m).norm());
        scale = scale.max(a.norm()).max(m.norm());
    }
    let tol = 1e-10 * scale;
    let degenerate = scale == 0.0;
    let parity = if even <= tol {
        Parity::Even
    } else if odd <= tol {
        Parity::Odd
    } else {
        Parity::Neither
    };
    ParityReport {
        parity,
        degenerate,
        even_residual: if scale > 0.0 { even / scale } else { 0.0 },
        odd_residual: if scale > 0.0 { odd / scale } else { 0.0 },
    }
}

/// Static radial field E_N r̂ from a point charge at the origin, sampled at
/// height `z` above it, Cartesian.
pub fn radial_static_field(e_n: f64, rho: f64, phi: f64, z: f64) -> RVec3 {
    let pt = MixedPoint::cylindrical(rho, phi, z);
    pt.cartesian().scale(e_n / pt.r)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InductionCheck {
    pub passed: bool,
    /// Largest polar angle for which the condition holds at this phase.
    pub max_theta0: f64,
}

/// |E₀ cos(phase)| > margin·E_N·sin θ₀, with margin ≥ 1 standing in for "much greater".
pub fn induction_condition(e0: f64, e_n: f64, theta0: f64, phase: f64, margin: f64) -> Result<InductionCheck> {
    if !(margin >= 1.0) {
        return Err(Error::domain(
            "induction_condition",
            format!("margin must be >= 1, got {margin}"),
        ));
    }
    if !(e_n >= 0.0) {
        return Err(Error::domain(
            "induction_condition",
            format!("E_N must be >= 0, got {e_n}"),
        ));
    }
    // a float phase at an odd multiple of π/2 leaves cos at rounding level
    let cos = phase.cos();
    let cos = if cos.abs() <= 4.0 * f64::EPSILON { 0.0 } else { cos };
    let drive = (e0 * cos).abs();
    let passed = drive > margin * e_n * theta0.sin();
    let max_theta0 = if e_n == 0.0 {
        PI / 2.0
    } else {
        (drive / (margin * e_n)).min(1.0).asin()
    };
    Ok(InductionCheck { passed, max_theta0 })
}

/// E = E₀(ρ̂ ∓ iφ̂)e^{iψ}, cB = iE, cylindrical components.
pub fn guided_onset_fields(
    e0: f64,
    omega: f64,
    k: f64,
    rho_phi_z: (f64, f64, f64),
    t: f64,
    h: Handedness,
) -> PhasorField {
    let (_, phi, z) = rho_phi_z;
    let x = Complex64::from_polar(e0, onset_phase(omega, k, z, phi, t, h));
    let e = Vec3::new(x, c(0.0, -h.sign()) * x, c(0.0, 0.0));
    PhasorField {
        e,
        b: e.scale(c(0.0, 1.0 / SI.c)),
    }
}

/// Axial ηI = Re(cB_φ) at the wall for fields that vanish outside.
pub fn onset_surface_current(f: &PhasorField) -> f64 {
    (f.b.y() * SI.c).re
}

/// Q ≈ 1/(ka)³
pub fn radiation_q(ka: f64) -> Result<f64> {
    if !(ka > 0.0) {
        return Err(Error::domain("radiation_q", format!("ka must be > 0, got {ka}")));
    }
    Ok(ka.powi(-3))
}

/// Fields of an oscillating charged spherical shell, as (E_ex, B_ex, E_in, B_in).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellFields {
    pub e_ex: CVec3,
    pub b_ex: CVec3,
    pub e_in: CVec3,
    pub b_in: CVec3,
}

impl ShellFields {
    fn add(self, o: ShellFields) -> ShellFields {
        ShellFields {
            e_ex: self.e_ex + o.e_ex,
            b_ex: self.b_ex + o.b_ex,
            e_in: self.e_in + o.e_in,
            b_in: self.b_in + o.b_in,
        }
    }
}

/// Shell of radius `a` with charge `q` displaced by `delta` (p = qδ), at (r, θ)
/// and time t, for angular frequency `omega`.
pub fn shell_fields(q: f64, a: f64, delta: f64, omega: f64, r: f64, theta: f64, t: f64) -> Result<ShellFields> {
    if !(r > 0.0 && a > 0.0) {
        return Err(Error::domain("shell_fields", "r and a must be > 0"));
    }
    let p = q * delta;
    let k = omega / SI.c;
    let (st, ct) = theta.sin_cos();
    let ret = Complex64::from_polar(1.0, omega * t - k * r);
    let osc = Complex64::from_polar(1.0, omega * t);
    let i = c(0.0, 1.0);
    let ex_amp = p / (4.0 * PI * SI.eps0 * r.powi(3));
    let in_amp = p / (4.0 * PI * SI.eps0 * a.powi(3));
    let zero = c(0.0, 0.0);
    Ok(ShellFields {
        e_ex: Vec3::new(c(2.0 * ct, 0.0), c(st, 0.0), zero).scale(ret * ex_amp),
        b_ex: Vec3::new(zero, zero, i * (SI.eta * p * k * st / (4.0 * PI * r * r))).scale(ret),
        e_in: Vec3::new(c(ct, 0.0), c(-st, 0.0), zero).scale(osc * in_amp),
        b_in: Vec3::new(zero, zero, i * (SI.eta * p * k * r * st / (8.0 * PI * a.powi(3)))).scale(ret),
    })
}

/// Sum of the shell fields of several (q, a) shells sharing δ.
pub fn shell_superposition(
    shells: &[(f64, f64)],
    delta: f64,
    omega: f64,
    r: f64,
    theta: f64,
    t: f64,
) -> Result<ShellFields> {
    let zero = Vec3::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0));
    let mut acc = ShellFields {
        e_ex: zero,
        b_ex: zero,
        e_in: zero,
        b_in: zero,
    };
    for &(q, a) in shells {
        acc = acc.add(shell_fields(q, a, delta, omega, r, theta, t)?);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoShellSummary {
    /// Inner-shell exterior amplitude p/(4πε₀r³) at the outer radius (V/m).
    pub inner_exterior_at_outer: f64,
    /// Outer-shell interior amplitude at the outer radius; opposite charge.
    pub outer_interior_at_outer: f64,
    /// |sum of the two amplitudes| relative to either.
    pub amplitude_residual: f64,
    /// Largest |E_ex + E_in| over θ relative to the amplitude, from the
    /// vector forms; nonzero because the angular patterns differ.
    pub pattern_residual: f64,
    pub inner_exterior_at_inner: f64,
    pub outer_interior_at_inner: f64,
    /// inner_exterior_at_inner / |outer_interior_at_inner|
    pub inner_ratio: f64,
}

/// Positive shell of charge Ze at `a_inner`, negative one at `a_outer`, both
/// displaced by `delta`.
pub fn two_shell_cancellation(z: u32, a_inner: f64, a_outer: f64, delta: f64) -> Result<TwoShellSummary> {
    if !(delta > 0.0) {
        return Err(Error::domain(
            "two_shell_cancellation",
            format!("delta must be > 0, got {delta}"),
        ));
    }
    if !(a_inner > 0.0 && a_outer > a_inner) {
        return Err(Error::domain("two_shell_cancellation", "need 0 < a_inner < a_outer"));
    }
    let q = f64::from(z) * SI.e;
    let p = q * delta;
    let amp = |r: f64| p / (4.0 * PI * SI.eps0 * r.powi(3));
    let inner_ex_out = amp(a_outer);
    let outer_in_out = -amp(a_outer);
    let inner_ex_in = amp(a_inner);
    let outer_in_in = -amp(a_outer);

    let mut pattern: f64 = 0.0;
    for i in 0..=32 {
        let theta = PI * i as f64 / 32.0;
        let inner = shell_fields(q, a_inner, delta, 0.0, a_outer, theta, 0.0)?;
        let outer = shell_fields(-q, a_outer, delta, 0.0, a_outer, theta, 0.0)?;
        pattern = pattern.max((inner.e_ex + outer.e_in).norm() / inner_ex_out);
    }
    Ok(TwoShellSummary {
        inner_exterior_at_outer: inner_ex_out,
        outer_interior_at_outer: outer_in_out,
        amplitude_residual: (inner_ex_out + outer_in_out).abs() / inner_ex_out,
        pattern_residual: pattern,
        inner_exterior_at_inner: inner_ex_in,
        outer_interior_at_inner: outer_in_in,
        inner_ratio: inner_ex_in / outer_in_in.abs(),
    })
}

/// Spherical components to Cartesian at the point.
pub fn to_cartesian(v: CVec3, pt: MixedPoint) -> CVec3 {
    spherical_to_cartesian(v, pt.theta, pt.phi)
}
