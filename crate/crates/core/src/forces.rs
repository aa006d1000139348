//! Pressure and force between two neighbouring photons on parallel paths.
//!
//! Photon 1 sits at (−d, 0) and photon 2 at (+d, 0); both travel along +z with
//! phase χ = ωt − kz. The strip is the plane x = 0, of length Δz. Each photon's
//! exterior field is the real part of the outer TEM field,
//!
//! ```text
//! E  = E₀(b²/ρ²)[−x̂ cos(χ ± 2φ) ∓ ŷ sin(χ ± 2φ)]
//! cB = E₀(b²/ρ²)[±x̂ sin(χ ± 2φ) − ŷ cos(χ ± 2φ)]
//! ```
//!
//! with (ρ, φ) measured from its own centre. At speed c the summed fields exert
//! no pressure on the strip. With u = c(1 − 10^{−α}) the magnetic stress falls
//! short of the electric by (u/c)², which leaves
//!
//! ```text
//! P = (ε₀/2)[(−Ex² + Ey²) + (u/c)²(−c²Bx² + c²By²)]  ≈  ε₀·10^{−α}(...)
//! F∥  = −πε₀Δz (b⁴/d³) E₀² 10^{−α} cos 2χ
//! F↑↓ = −πε₀Δz (b⁴/d³) E₀² 10^{−α}
//! ```
//!
//! P is the separating pressure, −T_xx of the Maxwell tensor; a negative force
//! pulls the photons together.

use std::f64::consts::PI;

use serde::Serialize;

use crate::constants::SI;
use crate::dipole::Handedness;
use crate::numerics::{Integrator, QuadratureResult};
use crate::relativity::SpeedRatio;
use crate::vector::RVec3;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spin {
    Parallel,
    Antiparallel,
}

/// Two identical photons a distance 2d apart.
///
/// `branch` picks the double sign. For parallel spins both photons take it.
/// For antiparallel spins the upper branch is photon 1 lower plus photon 2
/// upper, and the lower branch is the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhotonPairConfig {
    pub b: f64,
    pub d: f64,
    pub e0: f64,
    pub alpha: f64,
    pub delta_z: f64,
    pub spin: Spin,
    pub chi: f64,
    pub branch: Handedness,
}

impl PhotonPairConfig {
    pub fn new(b: f64, d: f64, e0: f64, alpha: f64, delta_z: f64, spin: Spin, chi: f64) -> Result<Self> {
        for (name, v) in [("b", b), ("d", d), ("e0", e0), ("delta_z", delta_z)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(
                    "PhotonPairConfig",
                    format!("{name} must be > 0, got {v}"),
                ));
            }
        }
        if d <= b {
            return Err(Error::domain(
                "PhotonPairConfig",
                format!("half-spacing d = {d:e} must exceed radius b = {b:e}"),
            ));
        }
        SpeedRatio::new(alpha)?;
        if !chi.is_finite() {
            return Err(Error::domain("PhotonPairConfig", "chi must be finite"));
        }
        Ok(PhotonPairConfig {
            b,
            d,
            e0,
            alpha,
            delta_z,
            spin,
            chi,
            branch: Handedness::Upper,
        })
    }

    pub fn with_branch(self, branch: Handedness) -> Self {
        PhotonPairConfig { branch, ..self }
    }

    pub fn with_chi(self, chi: f64) -> Self {
        PhotonPairConfig { chi, ..self }
    }

    pub fn with_alpha(self, alpha: f64) -> Result<Self> {
        SpeedRatio::new(alpha)?;
        Ok(PhotonPairConfig { alpha, ..self })
    }

    pub fn with_spacing(self, d: f64) -> Result<Self> {
        PhotonPairConfig::new(self.b, d, self.e0, self.alpha, self.delta_z, self.spin, self.chi)
            .map(|c| c.with_branch(self.branch))
    }

    /// 10^{−α}
    pub fn deficit(&self) -> f64 {
        10f64.powf(-self.alpha)
    }

    /// Handedness of photon 1 and photon 2.
    pub fn handedness(&self) -> (Handedness, Handedness) {
        match self.spin {
            Spin::Parallel => (self.branch, self.branch),
            Spin::Antiparallel => (self.branch.flip(), self.branch),
        }
    }

    /// Strip point (0, y) in photon 1's polar coordinates.
    pub fn strip_polar(&self, y: f64) -> (f64, f64) {
        (self.d.hypot(y), y.atan2(self.d))
    }
}

/// Real E and cB, both in V/m, Cartesian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealFields {
    pub e: RVec3,
    pub cb: RVec3,
}

impl RealFields {
    pub fn b(&self) -> RVec3 {
        self.cb.scale(1.0 / SI.c)
    }

    fn add(self, o: RealFields) -> RealFields {
        RealFields {
            e: self.e + o.e,
            cb: self.cb + o.cb,
        }
    }

    pub fn max_difference(&self, o: &RealFields) -> f64 {
        (self.e - o.e).max_abs().max((self.cb - o.cb).max_abs())
    }
}

fn check_rho(what: &'static str, b: f64, rho: f64) -> Result<()> {
    if !(rho >= b) {
        return Err(Error::Region {
            what,
            rho,
            boundary: b,
            use_instead: "the interior fields of the waveguide module",
        });
    }
    Ok(())
}

/// Compound-angle form.
pub fn external_real_fields(e0: f64, b: f64, rho: f64, phi: f64, chi: f64, h: Handedness) -> Result<RealFields> {
    check_rho("external_real_fields", b, rho)?;
    let s = h.sign();
    let a = e0 * b * b / (rho * rho);
    let (sn, cs) = (chi + s * 2.0 * phi).sin_cos();
    Ok(RealFields {
        e: RVec3::new(-a * cs, -s * a * sn, 0.0),
        cb: RVec3::new(s * a * sn, -a * cs, 0.0),
    })
}

fn expanded(a: f64, c2: f64, s2: f64, chi: f64, s: f64) -> RealFields {
    let (sx, cx) = chi.sin_cos();
    let p = -c2 * cx + s * s2 * sx;
    let q = s * c2 * sx + s2 * cx;
    RealFields {
        e: RVec3::new(a * p, -a * q, 0.0),
        cb: RVec3::new(a * q, a * p, 0.0),
    }
}

/// Same fields written with single-angle functions of 2φ and χ.
pub fn external_expanded_fields(e0: f64, b: f64, rho: f64, phi: f64, chi: f64, h: Handedness) -> Result<RealFields> {
    check_rho("external_expanded_fields", b, rho)?;
    let (s2, c2) = (2.0 * phi).sin_cos();
    Ok(expanded(e0 * b * b / (rho * rho), c2, s2, chi, h.sign()))
}

/// Fields of photon 2 at a strip point seen at (ρ, φ) from photon 1: the
/// expanded form with cos 2φ kept and sin 2φ negated.
pub fn mirrored_fields(e0: f64, b: f64, rho: f64, phi: f64, chi: f64, h: Handedness) -> Result<RealFields> {
    check_rho("mirrored_fields", b, rho)?;
    let (s2, c2) = (2.0 * phi).sin_cos();
    Ok(expanded(e0 * b * b / (rho * rho), c2, -s2, chi, h.sign()))
}

/// Photon centred at (x0, 0) evaluated at (x, y).
pub fn translated_fields(e0: f64, b: f64, x0: f64, x: f64, y: f64, chi: f64, h: Handedness) -> Result<RealFields> {
    let (dx, dy) = (x - x0, y);
    external_real_fields(e0, b, dx.hypot(dy), dy.atan2(dx), chi, h)
}

/// Strip fields from the closed-form sums (with the factor 2 on both E and cB).
pub fn summed_strip_fields(cfg: &PhotonPairConfig, y: f64) -> RealFields {
    let (rho, phi) = cfg.strip_polar(y);
    let a = 2.0 * cfg.e0 * cfg.b * cfg.b / (rho * rho);
    let (s2, c2) = (2.0 * phi).sin_cos();
    let (sx, cx) = cfg.chi.sin_cos();
    let s = cfg.branch.sign();
    match cfg.spin {
        Spin::Parallel => RealFields {
            e: RVec3::new(-a * c2 * cx, -s * a * c2 * sx, 0.0),
            cb: RVec3::new(s * a * c2 * sx, -a * c2 * cx, 0.0),
        },
        Spin::Antiparallel => {
            let g = c2 * cx + s * s2 * sx;
            RealFields {
                e: RVec3::new(-a * g, 0.0, 0.0),
                cb: RVec3::new(0.0, -a * g, 0.0),
            }
        }
    }
}

/// Strip fields exactly as printed: the parallel cB carries b²/ρ² rather than
/// 2b²/ρ², and the antiparallel E has ±cos 2φ cos χ + sin 2φ sin χ.
pub fn printed_strip_fields(cfg: &PhotonPairConfig, y: f64) -> RealFields {
    let (rho, phi) = cfg.strip_polar(y);
    let a = cfg.e0 * cfg.b * cfg.b / (rho * rho);
    let (s2, c2) = (2.0 * phi).sin_cos();
    let (sx, cx) = cfg.chi.sin_cos();
    let s = cfg.branch.sign();
    match cfg.spin {
        Spin::Parallel => RealFields {
            e: RVec3::new(-2.0 * a * c2 * cx, -s * 2.0 * a * c2 * sx, 0.0),
            cb: RVec3::new(s * a * c2 * sx, -a * c2 * cx, 0.0),
        },
        Spin::Antiparallel => RealFields {
            e: RVec3::new(-2.0 * a * (s * c2 * cx + s2 * sx), 0.0, 0.0),
            cb: RVec3::new(0.0, -2.0 * a * (c2 * cx + s * s2 * sx), 0.0),
        },
    }
}

/// Direct sum of the two translated single-photon evaluations.
pub fn brute_force_strip_fields(cfg: &PhotonPairConfig, y: f64) -> Result<RealFields> {
    let (h1, h2) = cfg.handedness();
    let one = translated_fields(cfg.e0, cfg.b, -cfg.d, 0.0, y, cfg.chi, h1)?;
    let two = translated_fields(cfg.e0, cfg.b, cfg.d, 0.0, y, cfg.chi, h2)?;
    Ok(one.add(two))
}

/// How the reduced speed enters the magnetic stress.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpeedModel {
    /// (u/c)² = (1 − 10^{−α})²
    Exact,
    /// (u/c)² ≈ 1 − 2·10^{−α}
    Leading,
}

/// Separating pressure on the strip at (0, y), from the summed fields.
pub fn strip_pressure(cfg: &PhotonPairConfig, y: f64, model: SpeedModel) -> f64 {
    let f = summed_strip_fields(cfg, y);
    let electric = -f.e.x() * f.e.x() + f.e.y() * f.e.y();
    let magnetic = -f.cb.x() * f.cb.x() + f.cb.y() * f.cb.y();
    let delta = cfg.deficit();
    let ratio_sq = match model {
        SpeedModel::Exact => (1.0 - delta) * (1.0 - delta),
        SpeedModel::Leading => 1.0 - 2.0 * delta,
    };
    0.5 * SI.eps0 * (electric + ratio_sq * magnetic)
}

fn pressure_scale(cfg: &PhotonPairConfig) -> f64 {
    4.0 * SI.eps0 * cfg.b.powi(4) * cfg.e0 * cfg.e0 * cfg.deficit()
}

/// Closed-form leading-order pressure with the odd-in-y term dropped.
pub fn strip_pressure_closed(cfg: &PhotonPairConfig, y: f64) -> f64 {
    let (d, chi) = (cfg.d, cfg.chi);
    let rho8 = (d * d + y * y).powi(4);
    let even = (y * y - d * d).powi(2);
    match cfg.spin {
        Spin::Parallel => -pressure_scale(cfg) * even * (2.0 * chi).cos() / rho8,
        Spin::Antiparallel => {
            let (s, c) = chi.sin_cos();
            -pressure_scale(cfg) * (even * c * c + 4.0 * d * d * y * y * s * s) / rho8
        }
    }
}

/// The odd-in-y part of the leading-order pressure.
pub fn strip_pressure_odd(cfg: &PhotonPairConfig, y: f64) -> f64 {
    match cfg.spin {
        Spin::Parallel => 0.0,
        Spin::Antiparallel => {
            let d = cfg.d;
            let rho2 = d * d + y * y;
            let (s, c) = cfg.chi.sin_cos();
            -pressure_scale(cfg) * cfg.branch.sign() * 2.0 * (2.0 * d * y) * (d * d - y * y) * s * c / rho2.powi(4)
        }
    }
}

/// Pressure with the printed sign: positive for parallel spins, negative for antiparallel.
pub fn printed_strip_pressure(cfg: &PhotonPairConfig, y: f64) -> f64 {
    let closed = strip_pressure_closed(cfg, y) + strip_pressure_odd(cfg, y);
    match cfg.spin {
        Spin::Parallel => -closed,
        Spin::Antiparallel => closed,
    }
}

/// Closed-form strip force, N.
pub fn strip_force_closed(cfg: &PhotonPairConfig) -> f64 {
    let f = -PI * SI.eps0 * cfg.delta_z * cfg.b.powi(4) / cfg.d.powi(3) * cfg.e0 * cfg.e0 * cfg.deficit();
    match cfg.spin {
        Spin::Parallel => f * (2.0 * cfg.chi).cos(),
        Spin::Antiparallel => f,
    }
}

/// Δz∫P dy over the whole strip, integrated in s = y/d.
///
/// The field terms of P cancel down to O(10^-α) of the energy density, so the
/// best attainable relative accuracy is roughly ε·10^α (1e-10 at α = 6);
/// tighter requests fail to converge.
pub fn strip_force_quadrature(cfg: &PhotonPairConfig, model: SpeedModel, rel_tol: f64) -> Result<QuadratureResult> {
    let r = Integrator::relative(rel_tol).integrate_real_line(|s| strip_pressure(cfg, cfg.d * s, model))?;
    let scale = cfg.delta_z * cfg.d;
    Ok(QuadratureResult {
        value: r.value * scale,
        error_estimate: r.error_estimate * scale.abs(),
        ..r
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StripForce {
    pub closed: f64,
    pub quadrature: f64,
    pub exact_speed: f64,
    /// |quadrature − closed| / |closed|
    pub residual: f64,
}

/// Closed form against leading-order quadrature, plus the exact-speed quadrature.
pub fn strip_force(cfg: &PhotonPairConfig, rel_tol: f64) -> Result<StripForce> {
    let closed = strip_force_closed(cfg);
    let quadrature = strip_force_quadrature(cfg, SpeedModel::Leading, rel_tol)?.value;
    let exact_speed = strip_force_quadrature(cfg, SpeedModel::Exact, rel_tol)?.value;
    Ok(StripForce {
        closed,
        quadrature,
        exact_speed,
        residual: relative_residual(quadrature, closed),
    })
}

fn relative_residual(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

/// ∫ of the odd pressure term over the strip, in units of the even term's
/// full-amplitude integral.
pub fn odd_term_integral(cfg: &PhotonPairConfig, tol: f64) -> Result<f64> {
    let unit = pressure_scale(cfg) / cfg.d.powi(4);
    let odd = Integrator::new(tol).integrate_real_line(|s| strip_pressure_odd(cfg, cfg.d * s) / unit)?;
    Ok((odd.value / (PI / 4.0)).abs())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralCheck {
    pub integrand: &'static str,
    pub quadrature: f64,
    pub exact: f64,
    pub relative_error: f64,
}

/// Strip integrals with ρ² = d² + y², checked by quadrature in y.
pub fn useful_integrals_check(d: f64, rel_tol: f64) -> Result<Vec<IntegralCheck>> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::domain(
            "useful_integrals_check",
            format!("d must be > 0, got {d}"),
        ));
    }
    let rho2 = move |y: f64| d * d + y * y;
    type Integrand = Box<dyn Fn(f64) -> f64>;
    let cases: [(&'static str, Integrand, f64); 4] = [
        (
            "y^2/rho^8",
            Box::new(move |y| y * y / rho2(y).powi(4)),
            PI / (16.0 * d.powi(5)),
        ),
        (
            "1/rho^4",
            Box::new(move |y| 1.0 / rho2(y).powi(2)),
            PI / (2.0 * d.powi(3)),
        ),
        (
            "(y^2-d^2)^2/rho^8",
            Box::new(move |y| (y * y - d * d).powi(2) / rho2(y).powi(4)),
            PI / (4.0 * d.powi(3)),
        ),
        (
            "4d^2y^2/rho^8",
            Box::new(move |y| 4.0 * d * d * y * y / rho2(y).powi(4)),
            PI / (4.0 * d.powi(3)),
        ),
    ];
    let integrator = Integrator::relative(rel_tol);
    cases
        .into_iter()
        .map(|(integrand, f, exact)| {
            let q = integrator.integrate_real_line(f)?.value;
            Ok(IntegralCheck {
                integrand,
                quadrature: q,
                exact,
                relative_error: relative_residual(q, exact),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ForceSweepRow {
    pub d: f64,
    pub alpha: f64,
    pub spin: Spin,
    pub closed: f64,
    pub quadrature: f64,
    pub residual: f64,
}

/// Force over the grid `ds` × `alphas`, other parameters from `base`.
pub fn force_sweep(base: &PhotonPairConfig, ds: &[f64], alphas: &[f64], rel_tol: f64) -> Result<Vec<ForceSweepRow>> {
    let mut rows = Vec::with_capacity(ds.len() * alphas.len());
    for &d in ds {
        for &alpha in alphas {
            let cfg = base.with_spacing(d)?.with_alpha(alpha)?;
            let closed = strip_force_closed(&cfg);
            let quadrature = strip_force_quadrature(&cfg, SpeedModel::Leading, rel_tol)?.value;
            rows.push(ForceSweepRow {
                d,
                alpha,
                spin: cfg.spin,
                closed,
                quadrature,
                residual: relative_residual(quadrature, closed),
            });
        }
    }
    Ok(rows)
}

/// Least-squares slope of ln|y| against ln x.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::domain("loglog_slope", "need at least two paired points"));
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.abs().ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 || !sxy.is_finite() {
        return Err(Error::domain("loglog_slope", "degenerate abscissae"));
    }
    Ok(sxy / sxx)
}
