//! Sub-luminal propagation, field augmentation and photon sizing.
//!
//! The guide speed is written u/c = 1 − 10^{−α}. Continued charge induction
//! needs ΛE₀ = E_S, and with the large-α form Λ ≈ 10^{α/2}/√2 that gives
//! E₀ = √2·E_S·10^{−α/2}. The pulse energy πε₀E₀²b²l = hν/2 then fixes the
//! length l for a given radius b.
//!
//! Frequencies come from ν = c/λ, so λ = 500 nm is 599.6 THz.

use num_complex::Complex64;
use serde::Serialize;

use crate::constants::{PhysicalConstants, SI};
use crate::vector::{CVec3, RVec3};
use crate::{Error, Result};

/// u/c = 1 − 10^{−α}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpeedRatio {
    pub alpha: f64,
}

impl SpeedRatio {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::domain("SpeedRatio", format!("alpha must be > 0, got {alpha}")));
        }
        Ok(SpeedRatio { alpha })
    }

    /// 10^{−α}
    pub fn deficit(&self) -> f64 {
        10f64.powf(-self.alpha)
    }

    pub fn u_over_c(&self) -> f64 {
        1.0 - self.deficit()
    }
}

/// Below this α the large-α form of Λ is flagged as unreliable.
pub const APPROXIMATION_ALPHA: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LorentzFactor {
    /// (1 − u²/c²)^{−1/2}
    pub exact: f64,
    /// 10^{α/2}/√2
    pub approx: f64,
    /// Set when α < [`APPROXIMATION_ALPHA`].
    pub approximation_warning: bool,
}

pub fn lorentz_factor(alpha: f64) -> Result<LorentzFactor> {
    let s = SpeedRatio::new(alpha)?;
    let d = s.deficit();
    // 1 − (1 − d)² = d(2 − d), without cancellation
    let exact = 1.0 / (d * (2.0 - d)).sqrt();
    let approx = 10f64.powf(alpha / 2.0) / 2f64.sqrt();
    Ok(LorentzFactor {
        exact,
        approx,
        approximation_warning: alpha < APPROXIMATION_ALPHA,
    })
}

/// Moving-frame fields normal to `u` seen from the fixed frame:
///
/// ```text
/// E' = Λ(E − u × B),   B' = Λ(B + u × E / c²)
/// ```
///
/// `e`, `b` and `u` are Cartesian. Components along `u` are outside the scope
/// of the formula and are rejected.
pub fn transform_fields(e: CVec3, b: CVec3, u: RVec3) -> Result<(CVec3, CVec3)> {
    let speed = u.norm();
    if !(speed < SI.c) {
        return Err(Error::domain(
            "transform_fields",
            format!("|u| = {speed:e} must be below c"),
        ));
    }
    if speed == 0.0 {
        return Ok((e, b));
    }
    let n = u.scale(1.0 / speed).to_complex();
    let along = |v: CVec3| v.0.iter().zip(n.0).map(|(a, b)| a * b).sum::<Complex64>().norm();
    if along(e) > 1e-12 * e.norm() || along(b) * SI.c > 1e-12 * (e.norm() + SI.c * b.norm()) {
        return Err(Error::domain(
            "transform_fields",
            "fields must be normal to the velocity",
        ));
    }
    let lambda = 1.0 / (1.0 - (speed / SI.c).powi(2)).sqrt();
    let uc = u.to_complex();
    let e2 = (e - uc.cross(b)).scale_real(lambda);
    let b2 = (b + uc.cross(e).scale_real(1.0 / (SI.c * SI.c))).scale_real(lambda);
    Ok((e2, b2))
}

/// Λ(1 + u/c), the gain of the guide fields under [`transform_fields`]; ≈ 2Λ.
pub fn augmentation_factor(alpha: f64) -> Result<f64> {
    let s = SpeedRatio::new(alpha)?;
    Ok(lorentz_factor(alpha)?.exact * (1.0 + s.u_over_c()))
}

/// E₀ = √2·E_S·10^{−α/2}
pub fn dipole_strength(alpha: f64) -> Result<f64> {
    dipole_strength_with(&SI, alpha)
}

pub fn dipole_strength_with(k: &PhysicalConstants, alpha: f64) -> Result<f64> {
    SpeedRatio::new(alpha)?;
    Ok(2f64.sqrt() * k.e_s * 10f64.powf(-alpha / 2.0))
}

/// E₀ = E_S/Λ with the exact Lorentz factor.
pub fn dipole_strength_exact(alpha: f64) -> Result<f64> {
    Ok(SI.e_s / lorentz_factor(alpha)?.exact)
}

/// Inverse of [`dipole_strength`].
pub fn alpha_from_field(e0: f64) -> Result<f64> {
    let top = 2f64.sqrt() * SI.e_s;
    if !(e0 > 0.0 && e0 < top) {
        return Err(Error::domain(
            "alpha_from_field",
            format!("E0 = {e0:e} must lie in (0, sqrt(2)·E_S = {top:e})"),
        ));
    }
    Ok(-2.0 * (e0 / top).log10())
}

/// Length l (m) and l/λ of a pulse of energy hν/2 with ν = c/λ.
pub fn photon_length(b: f64, alpha: f64, lambda: f64) -> Result<(f64, f64)> {
    for (name, v) in [("b", b), ("lambda", lambda)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::domain("photon_length", format!("{name} must be > 0, got {v}")));
        }
    }
    let e0 = dipole_strength(alpha)?;
    let nu = SI.c / lambda;
    let l = SI.h * nu / (2.0 * std::f64::consts::PI * SI.eps0 * e0 * e0 * b * b);
    Ok((l, l / lambda))
}

/// Values listed in the published sizing table (λ = 500 nm).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PublishedSizing {
    pub b: f64,
    pub alpha: f64,
    pub e0: f64,
    pub l_over_lambda: f64,
    pub l: f64,
}

pub const PUBLISHED_LAMBDA: f64 = 500e-9;

pub const PUBLISHED_SIZING: [PublishedSizing; 4] = [
    PublishedSizing {
        b: 10e-18,
        alpha: 4.0,
        e0: 1.84e16,
        l_over_lambda: 0.42,
        l: 210e-9,
    },
    PublishedSizing {
        b: 100e-18,
        alpha: 2.0,
        e0: 1.84e17,
        l_over_lambda: 0.42,
        l: 0.021e-9,
    },
    PublishedSizing {
        b: 10e-18,
        alpha: 2.0,
        e0: 1.84e17,
        l_over_lambda: 0.0042,
        l: 2.1e-9,
    },
    PublishedSizing {
        b: 100e-18,
        alpha: 4.0,
        e0: 1.84e16,
        l_over_lambda: 0.0042,
        l: 2.1e-9,
    },
];

/// Relative tolerance for agreement with a published sizing value.
pub const SIZING_TOLERANCE: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Consistency {
    Consistent,
    PrintedValueMismatch,
    /// No published row for these inputs.
    Unpublished,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhotonSizing {
    /// m
    pub b: f64,
    pub alpha: f64,
    /// V/m
    pub e0: f64,
    pub l_over_lambda: f64,
    /// m
    pub l: f64,
    pub published: Option<PublishedSizing>,
    pub consistency: Consistency,
    /// Columns that miss the published value by more than [`SIZING_TOLERANCE`].
    pub mismatched: Vec<&'static str>,
}

fn published_sizing(b: f64, alpha: f64, lambda: f64) -> Option<PublishedSizing> {
    let same = |x: f64, y: f64| ((x - y) / y).abs() < 1e-9;
    if !same(lambda, PUBLISHED_LAMBDA) {
        return None;
    }
    PUBLISHED_SIZING
        .iter()
        .find(|r| same(r.b, b) && same(r.alpha, alpha))
        .copied()
}

/// One sizing row per (b, α), compared with the published row when one exists.
pub fn table2(rows: &[(f64, f64)], lambda: f64) -> Result<Vec<PhotonSizing>> {
    rows.iter()
        .map(|&(b, alpha)| {
            let e0 = dipole_strength(alpha)?;
            let (l, l_over_lambda) = photon_length(b, alpha, lambda)?;
            let published = published_sizing(b, alpha, lambda);
            let mut mismatched = Vec::new();
            if let Some(p) = published {
                let off = |x: f64, y: f64| ((x - y) / y).abs() > SIZING_TOLERANCE;
                if off(e0, p.e0) {
                    mismatched.push("E0");
                }
                if off(l_over_lambda, p.l_over_lambda) {
                    mismatched.push("l/lambda");
                }
                if off(l, p.l) {
                    mismatched.push("l");
                }
            }
            let consistency = match (published, mismatched.is_empty()) {
                (None, _) => Consistency::Unpublished,
                (Some(_), true) => Consistency::Consistent,
                (Some(_), false) => Consistency::PrintedValueMismatch,
            };
            Ok(PhotonSizing {
                b,
                alpha,
                e0,
                l_over_lambda,
                l,
                published,
                consistency,
                mismatched,
            })
        })
        .collect()
}

/// The four published (b, α) inputs.
pub fn published_inputs() -> Vec<(f64, f64)> {
    PUBLISHED_SIZING.iter().map(|r| (r.b, r.alpha)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::waveguide::{field_exterior, field_interior, GuidedModeParams, Polarization};
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn lorentz_forms() {
        let l = lorentz_factor(4.0).unwrap();
        assert!((l.approx - 70.710678).abs() < 1e-5);
        assert!(rel(l.exact, l.approx) < 1e-4);
        assert!(!l.approximation_warning);
        let small = lorentz_factor(1e-6).unwrap();
        assert!(small.approximation_warning);
        assert!((small.approx - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-5);
        assert!(small.exact > 1.0);
        let near = lorentz_factor(30.0).unwrap();
        assert!(near.exact.is_finite() && rel(near.exact, near.approx) < 1e-12);
        assert!(lorentz_factor(0.0).is_err());
    }

    #[test]
    fn ratio_tends_to_one() {
        let mut prev = f64::INFINITY;
        for i in 0..40 {
            let a = 2.0 + 0.25 * i as f64;
            let l = lorentz_factor(a).unwrap();
            let gap = (l.exact / l.approx - 1.0).abs();
            assert!(gap < 0.005 && gap <= prev);
            prev = gap;
        }
    }

    #[test]
    fn strengths() {
        assert!(rel(dipole_strength(4.0).unwrap(), 1.84e16) < 0.005);
        assert!(rel(dipole_strength(2.0).unwrap(), 1.84e17) < 0.005);
        for a in [0.3, 2.0, 4.0, 7.5] {
            let back = alpha_from_field(dipole_strength(a).unwrap()).unwrap();
            assert!((back - a).abs() < 1e-12);
        }
        assert!(alpha_from_field(2.0 * SI.e_s).is_err());
        assert!(rel(dipole_strength_exact(6.0).unwrap(), dipole_strength(6.0).unwrap()) < 1e-5);
    }

    #[test]
    fn identity_transform() {
        let e = CVec3::new(
            Complex64::new(1.0, 2.0),
            Complex64::new(-3.0, 0.5),
            Complex64::new(0.0, 0.0),
        );
        let b = e.scale_real(1e-8);
        let (e2, b2) = transform_fields(e, b, RVec3::new(0.0, 0.0, 0.0)).unwrap();
        assert_eq!((e2, b2), (e, b));
        let tiny = transform_fields(e, b, RVec3::new(0.0, 0.0, 1e-9)).unwrap();
        assert!((tiny.0 - e).max_abs() < 1e-12 * e.norm());
        let parallel = CVec3::new(
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        );
        assert!(transform_fields(parallel, b, RVec3::new(0.0, 0.0, 1e5)).is_err());
        assert!(transform_fields(e, b, RVec3::new(0.0, 0.0, SI.c)).is_err());
    }

    #[test]
    fn guide_fields_augmented() {
        let alpha = 4.0;
        let u = RVec3::new(0.0, 0.0, SpeedRatio::new(alpha).unwrap().u_over_c() * SI.c);
        let gain = augmentation_factor(alpha).unwrap();
        assert!(rel(gain, 2.0 * lorentz_factor(alpha).unwrap().approx) < 1e-3);
        for pol in [Polarization::Right, Polarization::Left] {
            let p = GuidedModeParams::new(1.0, 1.0, 1.0, 1.0, pol).unwrap();
            let phi = 0.8;
            for f in [
                field_interior(&p, 0.5, phi, 0.0, 0.0).unwrap(),
                field_exterior(&p, 2.0, phi, 0.0, 0.0).unwrap(),
            ] {
                let f = f.to_cartesian(phi);
                let (e2, b2) = transform_fields(f.e, f.b, u).unwrap();
                assert!((e2 - f.e.scale_real(gain)).max_abs() < 1e-12 * gain * f.e.norm());
                assert!((b2 - f.b.scale_real(gain)).max_abs() < 1e-12 * gain * f.b.norm());
            }
        }
    }

    #[test]
    fn published_sizing_rows() {
        let rows = table2(&published_inputs(), PUBLISHED_LAMBDA).unwrap();
        assert_eq!(rows.len(), 4);
        for (i, r) in rows.iter().enumerate() {
            let w = PI * SI.eps0 * r.e0 * r.e0 * r.b * r.b * r.l;
            assert!(rel(w, SI.h * SI.c / PUBLISHED_LAMBDA / 2.0) < 1e-12);
            if i == 1 {
                assert_eq!(r.consistency, Consistency::PrintedValueMismatch);
                assert_eq!(r.mismatched, vec!["l/lambda"]);
                assert!(rel(r.l_over_lambda, 4.2e-5) < 0.02);
            } else {
                assert_eq!(r.consistency, Consistency::Consistent, "{r:?}");
            }
        }
        assert!(table2(&[], PUBLISHED_LAMBDA).unwrap().is_empty());
        let custom = table2(&[(50e-18, 3.0)], PUBLISHED_LAMBDA).unwrap();
        assert_eq!(custom[0].consistency, Consistency::Unpublished);
    }

    #[test]
    fn length_scaling() {
        let (l1, _) = photon_length(10e-18, 4.0, 500e-9).unwrap();
        let (l2, _) = photon_length(100e-18, 4.0, 500e-9).unwrap();
        assert!(rel(l1 / l2, 100.0) < 1e-12);
        let (l3, _) = photon_length(10e-18, 4.0, 1000e-9).unwrap();
        assert!(rel(l1 / l3, 2.0) < 1e-12);
        assert!(rel(l1, 211.3e-9) < 1e-3);
    }
}
