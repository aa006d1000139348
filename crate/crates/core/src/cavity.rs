//! Dipole fields in a spherical cavity and its lowest eigenradius.
//!
//! With σ = kr the fields use two radial functions,
//!
//! ```text
//! j(σ)  = (1/σ)(cos σ + sin σ / σ)              (as printed)
//! j*(σ) = (1/σ)(cos σ / σ + (1 − 1/σ²) sin σ)
//! ```
//!
//! j* is (1/σ)·d(σ j₁)/dσ for the spherical Bessel function j₁, finite at the
//! origin with limit 2/3. The printed j grows like 2/σ there; the regular
//! j₁(σ) = sin σ/σ² − cos σ/σ is offered beside it through [`RadialForm`].
//! Below σ = [`SERIES_CROSSOVER`] both regular functions use their Taylor series.
//!
//! Tangential E vanishes on the wall r = a when j*(ka) = 0. The first root is
//! σ* ≈ 2.7437, so a/λ = σ*/2π ≈ 0.4367.

use std::f64::consts::PI;

use serde::Serialize;

use crate::constants::SI;
use crate::numerics::{bisect, Bracket};
use crate::vector::RVec3;
use crate::{Error, Result};

/// Below this |σ| the regular functions switch to series.
pub const SERIES_CROSSOVER: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RadialForm {
    /// (1/σ)(cos σ + sin σ/σ)
    Printed,
    /// Spherical Bessel j₁
    Regular,
}

fn check_sigma(what: &'static str, sigma: f64) -> Result<()> {
    if sigma == 0.0 || !sigma.is_finite() {
        return Err(Error::domain(
            what,
            format!("sigma must be finite and nonzero, got {sigma}"),
        ));
    }
    Ok(())
}

/// Σ (−1)ⁿ cₙ σ^{2n}, with cₙ from `coef(n)`, until terms drop below 1e-17.
fn even_series(sigma: f64, coef: impl Fn(u32) -> f64) -> f64 {
    let s2 = sigma * sigma;
    let mut sum = 0.0;
    let mut pow = 1.0;
    for n in 0..12 {
        let term = coef(n) * pow;
        sum += if n % 2 == 0 { term } else { -term };
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
        pow *= s2;
    }
    sum
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// j(σ) as printed.
pub fn sph_j(sigma: f64) -> Result<f64> {
    check_sigma("sph_j", sigma)?;
    Ok((sigma.cos() + sigma.sin() / sigma) / sigma)
}

/// Spherical Bessel j₁(σ), defined for all σ.
pub fn sph_j_regular(sigma: f64) -> f64 {
    if sigma.abs() < SERIES_CROSSOVER {
        // j₁ = Σ (−1)ⁿ (2n+2) σ^{2n+1} / (2n+3)!
        sigma * even_series(sigma, |n| f64::from(2 * n + 2) / factorial(2 * n + 3))
    } else {
        sigma.sin() / (sigma * sigma) - sigma.cos() / sigma
    }
}

pub fn radial_j(form: RadialForm, sigma: f64) -> Result<f64> {
    match form {
        RadialForm::Printed => sph_j(sigma),
        RadialForm::Regular => {
            check_sigma("sph_j_regular", sigma)?;
            Ok(sph_j_regular(sigma))
        }
    }
}

/// j*(σ); the series branch keeps full precision near the origin.
pub fn sph_jstar(sigma: f64) -> Result<f64> {
    check_sigma("sph_jstar", sigma)?;
    Ok(jstar_unchecked(sigma))
}

fn jstar_unchecked(sigma: f64) -> f64 {
    if sigma.abs() < SERIES_CROSSOVER {
        // Σ (−1)ⁿ (2n+2)² σ^{2n} / (2n+3)!
        even_series(sigma, |n| f64::from((2 * n + 2) * (2 * n + 2)) / factorial(2 * n + 3))
    } else {
        let s = sigma;
        (s.cos() / s + (1.0 - 1.0 / (s * s)) * s.sin()) / s
    }
}

/// Cavity radius `a` driven by a dipole of moment scale `p` (C·m) at wavenumber `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityMode {
    pub p: f64,
    pub k: f64,
    pub a: f64,
}

impl CavityMode {
    pub fn new(p: f64, k: f64, a: f64) -> Result<Self> {
        for (name, v) in [("p", p), ("k", k), ("a", a)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain("CavityMode", format!("{name} must be > 0, got {v}")));
            }
        }
        Ok(CavityMode { p, k, a })
    }

    /// The lowest eigenmode for wavelength `lambda`.
    pub fn lowest(p: f64, lambda: f64) -> Result<Self> {
        let eig = lowest_eigenradius()?;
        CavityMode::new(p, 2.0 * PI / lambda, eig.a_over_lambda * lambda)
    }

    pub fn omega(&self) -> f64 {
        self.k * SI.c
    }
}

/// Real E (V/m) and B (T) in spherical components (r, θ, φ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityFields {
    pub e: [f64; 3],
    pub b: [f64; 3],
}

impl CavityFields {
    pub fn e_vec(&self) -> RVec3 {
        RVec3::new(self.e[0], self.e[1], self.e[2])
    }

    pub fn b_vec(&self) -> RVec3 {
        RVec3::new(self.b[0], self.b[1], self.b[2])
    }
}

/// ```text
/// E = (pk³/4πε₀){(2/σ) j(σ) cosθ r̂ − j*(σ) sinθ θ̂} sin ωt
/// B = (ηpk³/4π) j(σ) sinθ φ̂ cos ωt
/// ```
pub fn cavity_fields(mode: &CavityMode, r: f64, theta: f64, t: f64, form: RadialForm) -> Result<CavityFields> {
    if !(r > 0.0 && r <= mode.a) {
        return Err(Error::domain(
            "cavity_fields",
            format!("r = {r:e} must lie in (0, a = {:e}]", mode.a),
        ));
    }
    let sigma = mode.k * r;
    let j = radial_j(form, sigma)?;
    let js = jstar_unchecked(sigma);
    let (st, ct) = theta.sin_cos();
    let (sw, cw) = (mode.omega() * t).sin_cos();
    let k3 = mode.p * mode.k.powi(3) / (4.0 * PI);
    // 2j/σ through the series near 0 for the regular form
    let two_j_over_sigma = match form {
        RadialForm::Regular if sigma.abs() < SERIES_CROSSOVER => {
            2.0 * even_series(sigma, |n| f64::from(2 * n + 2) / factorial(2 * n + 3))
        }
        _ => 2.0 * j / sigma,
    };
    let e_amp = k3 / SI.eps0 * sw;
    Ok(CavityFields {
        e: [e_amp * two_j_over_sigma * ct, -e_amp * js * st, 0.0],
        b: [0.0, 0.0, SI.eta * k3 * j * st * cw],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenradius {
    /// First positive root of j*.
    pub sigma: f64,
    pub a_over_lambda: f64,
    #[serde(skip)]
    pub bracket: Bracket,
}

/// Scan step used to isolate the first sign change of j*.
const SCAN_STEP: f64 = 0.01;

/// Smallest positive σ with j*(σ) = 0, and σ/2π.
pub fn lowest_eigenradius() -> Result<Eigenradius> {
    lowest_eigenradius_tol(1e-13)
}

pub fn lowest_eigenradius_tol(tol: f64) -> Result<Eigenradius> {
    let mut lo = SCAN_STEP;
    let mut f_lo = jstar_unchecked(lo);
    loop {
        let hi = lo + SCAN_STEP;
        let f_hi = jstar_unchecked(hi);
        if f_lo.signum() != f_hi.signum() {
            let bracket = bisect(jstar_unchecked, lo, hi, tol)?;
            let sigma = bracket.root();
            return Ok(Eigenradius {
                sigma,
                a_over_lambda: sigma / (2.0 * PI),
                bracket,
            });
        }
        if hi > 10.0 {
            return Err(Error::domain("lowest_eigenradius", "no root of j* below 10"));
        }
        lo = hi;
        f_lo = f_hi;
    }
}

/// One harmonic identity sampled over a period.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub max_residual: f64,
    pub holds: bool,
}

/// Checks 4cos³ωt = cos3ωt + 3cosωt, 4sin³ωt = −sin3ωt + 3sinωt and the
/// misprinted 4cos³ωt = 3cosωt + 3cosωt on `samples` points of one period.
pub fn cubic_harmonics(omega: f64, samples: usize) -> Result<Vec<IdentityCheck>> {
    if !(omega > 0.0) || samples == 0 {
        return Err(Error::domain(
            "cubic_harmonics",
            "need omega > 0 and at least one sample",
        ));
    }
    let period = 2.0 * PI / omega;
    type Side = fn(f64) -> (f64, f64);
    let cases: [(&'static str, Side); 3] = [
        ("4cos^3 = cos3 + 3cos", |x| {
            (4.0 * x.cos().powi(3), (3.0 * x).cos() + 3.0 * x.cos())
        }),
        ("4sin^3 = -sin3 + 3sin", |x| {
            (4.0 * x.sin().powi(3), -(3.0 * x).sin() + 3.0 * x.sin())
        }),
        ("4cos^3 = 3cos + 3cos", |x| (4.0 * x.cos().powi(3), 6.0 * x.cos())),
    ];
    Ok(cases
        .iter()
        .map(|&(identity, f)| {
            let max_residual = (0..samples)
                .map(|i| {
                    let t = period * i as f64 / samples as f64;
                    let (l, r) = f(omega * t);
                    (l - r).abs()
                })
                .fold(0.0, f64::max);
            IdentityCheck {
                identity,
                max_residual,
                holds: max_residual <= 1e-12,
            }
        })
        .collect())
}
