//! Physical constants and dimension-tagged scalars.
//!
//! Values are CODATA 2018. The exact SI defining constants (c, h, e) are used
//! verbatim; μ₀ is the CODATA 2018 recommended value and ε₀ is derived from it
//! as 1/(μ₀c²) so that c²ε₀μ₀ = 1 holds to rounding.
//!
//! The vacuum-nonlinearity threshold is carried twice: the exact expression
//! m²c³/(eħ) from [`PhysicalConstants::schwinger_threshold`], and the rounded
//! reference value `e_s = 1.3e18 V/m` used by the published nuclear and sizing
//! tables. Both agree within 2%; the tables only reproduce with the rounded one.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Div, Mul, Neg};

use crate::{Error, Result};

/// Exponents of the SI base dimensions length, mass, time and current.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dimension {
    pub length: i8,
    pub mass: i8,
    pub time: i8,
    pub current: i8,
}

impl Dimension {
    pub const fn new(length: i8, mass: i8, time: i8, current: i8) -> Self {
        Dimension {
            length,
            mass,
            time,
            current,
        }
    }

    pub const NONE: Dimension = Dimension::new(0, 0, 0, 0);
    pub const LENGTH: Dimension = Dimension::new(1, 0, 0, 0);
    pub const MASS: Dimension = Dimension::new(0, 1, 0, 0);
    pub const TIME: Dimension = Dimension::new(0, 0, 1, 0);
    pub const FREQUENCY: Dimension = Dimension::new(0, 0, -1, 0);
    pub const SPEED: Dimension = Dimension::new(1, 0, -1, 0);
    pub const CHARGE: Dimension = Dimension::new(0, 0, 1, 1);
    pub const ENERGY: Dimension = Dimension::new(2, 1, -2, 0);
    pub const POWER: Dimension = Dimension::new(2, 1, -3, 0);
    pub const ACTION: Dimension = Dimension::new(2, 1, -1, 0);
    pub const MOMENTUM: Dimension = Dimension::new(1, 1, -1, 0);
    pub const FORCE: Dimension = Dimension::new(1, 1, -2, 0);
    pub const PRESSURE: Dimension = Dimension::new(-1, 1, -2, 0);
    /// V/m = kg·m·s⁻³·A⁻¹
    pub const ELECTRIC_FIELD: Dimension = Dimension::new(1, 1, -3, -1);
    /// T = kg·s⁻²·A⁻¹
    pub const MAGNETIC_FIELD: Dimension = Dimension::new(0, 1, -2, -1);
    /// F/m = A²·s⁴·kg⁻¹·m⁻³
    pub const PERMITTIVITY: Dimension = Dimension::new(-3, -1, 4, 2);
    /// H/m = kg·m·s⁻²·A⁻²
    pub const PERMEABILITY: Dimension = Dimension::new(1, 1, -2, -2);
    /// Ω = kg·m²·s⁻³·A⁻²
    pub const IMPEDANCE: Dimension = Dimension::new(2, 1, -3, -2);
    pub const SURFACE_CHARGE: Dimension = Dimension::new(-2, 0, 1, 1);
    pub const VOLUME_CHARGE: Dimension = Dimension::new(-3, 0, 1, 1);

    const fn combine(self, other: Dimension, sign: i8) -> Dimension {
        Dimension::new(
            self.length + sign * other.length,
            self.mass + sign * other.mass,
            self.time + sign * other.time,
            self.current + sign * other.current,
        )
    }

    pub const fn times(self, other: Dimension) -> Dimension {
        self.combine(other, 1)
    }

    pub const fn per(self, other: Dimension) -> Dimension {
        self.combine(other, -1)
    }

    pub const fn powi(self, n: i8) -> Dimension {
        Dimension::new(self.length * n, self.mass * n, self.time * n, self.current * n)
    }

    fn half(self) -> Option<Dimension> {
        let all_even = [self.length, self.mass, self.time, self.current]
            .iter()
            .all(|e| e % 2 == 0);
        all_even.then(|| Dimension::new(self.length / 2, self.mass / 2, self.time / 2, self.current / 2))
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Dimension::NONE {
            return f.write_str("1");
        }
        let mut first = true;
        for (sym, e) in [
            ("m", self.length),
            ("kg", self.mass),
            ("s", self.time),
            ("A", self.current),
        ] {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("·")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A real value tagged with its SI dimension.
///
/// Multiplication and division always succeed and combine exponents; addition,
/// subtraction and comparison require equal dimensions and fail otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub dim: Dimension,
}

impl Quantity {
    pub const fn new(value: f64, dim: Dimension) -> Self {
        Quantity { value, dim }
    }

    pub const fn scalar(value: f64) -> Self {
        Quantity::new(value, Dimension::NONE)
    }

    fn require_same(&self, other: &Quantity) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn try_add(self, other: Quantity) -> Result<Quantity> {
        self.require_same(&other)?;
        Ok(Quantity::new(self.value + other.value, self.dim))
    }

    pub fn try_sub(self, other: Quantity) -> Result<Quantity> {
        self.require_same(&other)?;
        Ok(Quantity::new(self.value - other.value, self.dim))
    }

    /// Relative difference |a − b|/|b| between quantities of the same dimension.
    pub fn relative_difference(self, reference: Quantity) -> Result<f64> {
        self.require_same(&reference)?;
        Ok(((self.value - reference.value) / reference.value).abs())
    }

    pub fn powi(self, n: i8) -> Quantity {
        Quantity::new(self.value.powi(n as i32), self.dim.powi(n))
    }

    pub fn sqrt(self) -> Result<Quantity> {
        match self.dim.half() {
            Some(dim) => Ok(Quantity::new(self.value.sqrt(), dim)),
            None => Err(Error::domain("Quantity::sqrt", format!("odd exponent in {}", self.dim))),
        }
    }

    /// Value in the given dimension, or an error if the tag differs.
    pub fn value_in(self, dim: Dimension) -> Result<f64> {
        self.require_same(&Quantity::new(0.0, dim))?;
        Ok(self.value)
    }
}

impl Mul for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: Quantity) -> Quantity {
        Quantity::new(self.value * rhs.value, self.dim.times(rhs.dim))
    }
}

impl Div for Quantity {
    type Output = Quantity;
    fn div(self, rhs: Quantity) -> Quantity {
        Quantity::new(self.value / rhs.value, self.dim.per(rhs.dim))
    }
}

impl Mul<f64> for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: f64) -> Quantity {
        Quantity::new(self.value * rhs, self.dim)
    }
}

impl Neg for Quantity {
    type Output = Quantity;
    fn neg(self) -> Quantity {
        Quantity::new(-self.value, self.dim)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} {}", self.value, self.dim)
    }
}

/// Constants shared by every module, in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Speed of light (m/s).
    pub c: f64,
    /// Planck constant (J·s).
    pub h: f64,
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Elementary charge (C).
    pub e: f64,
    /// Electron mass (kg).
    pub m_e: f64,
    /// Vacuum permittivity (F/m), derived as 1/(μ₀c²).
    pub eps0: f64,
    /// Vacuum permeability (H/m).
    pub mu0: f64,
    /// Free-space wave impedance √(μ₀/ε₀) = μ₀c (Ω).
    pub eta: f64,
    /// Rounded vacuum-nonlinearity threshold used by the reference tables (V/m).
    pub e_s: f64,
}

const C: f64 = 299_792_458.0;
const H: f64 = 6.626_070_15e-34;
const MU0: f64 = 1.256_637_062_12e-6;

/// CODATA 2018 constants with the rounded 1.3×10¹⁸ V/m threshold.
pub const SI: PhysicalConstants = PhysicalConstants {
    c: C,
    h: H,
    hbar: H / (2.0 * PI),
    e: 1.602_176_634e-19,
    m_e: 9.109_383_701_5e-31,
    eps0: 1.0 / (MU0 * C * C),
    mu0: MU0,
    eta: MU0 * C,
    e_s: 1.3e18,
};

impl Default for PhysicalConstants {
    fn default() -> Self {
        SI
    }
}

/// Electron rate and length scales built from m, c and ħ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectronScales {
    /// m c² / ħ
    pub rate: f64,
    /// ħ / (m c)
    pub length: f64,
}

impl PhysicalConstants {
    /// Same constants with a different reference threshold field.
    pub fn with_threshold(self, e_s: f64) -> Self {
        PhysicalConstants { e_s, ..self }
    }

    /// Same constants with the reference threshold replaced by the exact m²c³/(eħ).
    pub fn with_exact_threshold(self) -> Self {
        self.with_threshold(self.schwinger_threshold())
    }

    /// Threshold field m²c³/(eħ) evaluated from the constants, not the rounded value.
    pub fn schwinger_threshold(&self) -> f64 {
        self.m_e * self.m_e * self.c.powi(3) / (self.e * self.hbar)
    }

    /// Coulomb constant 1/(4πε₀).
    pub fn coulomb(&self) -> f64 {
        1.0 / (4.0 * PI * self.eps0)
    }

    /// Electron rate and length using ħ. The published values (7.8×10²⁰ and
    /// 386 fm) correspond to ħ; see [`Self::electron_intrinsic_planck`] for h.
    pub fn electron_intrinsic(&self) -> ElectronScales {
        ElectronScales {
            rate: self.m_e * self.c * self.c / self.hbar,
            length: self.hbar / (self.m_e * self.c),
        }
    }

    /// Frequency mc²/h and Compton wavelength h/(mc).
    pub fn electron_intrinsic_planck(&self) -> ElectronScales {
        ElectronScales {
            rate: self.m_e * self.c * self.c / self.h,
            length: self.h / (self.m_e * self.c),
        }
    }

    pub fn c_q(&self) -> Quantity {
        Quantity::new(self.c, Dimension::SPEED)
    }
    pub fn h_q(&self) -> Quantity {
        Quantity::new(self.h, Dimension::ACTION)
    }
    pub fn hbar_q(&self) -> Quantity {
        Quantity::new(self.hbar, Dimension::ACTION)
    }
    pub fn e_q(&self) -> Quantity {
        Quantity::new(self.e, Dimension::CHARGE)
    }
    pub fn m_e_q(&self) -> Quantity {
        Quantity::new(self.m_e, Dimension::MASS)
    }
    pub fn eps0_q(&self) -> Quantity {
        Quantity::new(self.eps0, Dimension::PERMITTIVITY)
    }
    pub fn mu0_q(&self) -> Quantity {
        Quantity::new(self.mu0, Dimension::PERMEABILITY)
    }
    pub fn eta_q(&self) -> Quantity {
        Quantity::new(self.eta, Dimension::IMPEDANCE)
    }
    pub fn e_s_q(&self) -> Quantity {
        Quantity::new(self.e_s, Dimension::ELECTRIC_FIELD)
    }

    /// m²c³/(eħ) built from tagged quantities; its tag is checked by the tests.
    pub fn schwinger_threshold_q(&self) -> Quantity {
        self.m_e_q().powi(2) * self.c_q().powi(3) / (self.e_q() * self.hbar_q())
    }
}
