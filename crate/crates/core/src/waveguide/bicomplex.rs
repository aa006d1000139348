use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// z₁ + z₂·j with z₁, z₂ ordinary complex numbers in i.
///
/// i and j are independent commuting units, i² = j² = −1. The four real
/// coefficients of {1, i, j, ij} are (z₁.re, z₁.im, z₂.re, z₂.im).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bicomplex {
    pub z1: Complex64,
    pub z2: Complex64,
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl Bicomplex {
    pub const ZERO: Bicomplex = Bicomplex { z1: ZERO, z2: ZERO };
    pub const ONE: Bicomplex = Bicomplex { z1: ONE, z2: ZERO };
    pub const I: Bicomplex = Bicomplex {
        z1: Complex64::new(0.0, 1.0),
        z2: ZERO,
    };
    pub const J: Bicomplex = Bicomplex { z1: ZERO, z2: ONE };

    pub const fn new(z1: Complex64, z2: Complex64) -> Self {
        Bicomplex { z1, z2 }
    }

    pub fn real(x: f64) -> Self {
        Bicomplex::new(Complex64::new(x, 0.0), ZERO)
    }

    pub fn from_complex(z: Complex64) -> Self {
        Bicomplex::new(z, ZERO)
    }

    /// Coefficients of 1, i, j and ij.
    pub fn coefficients(&self) -> [f64; 4] {
        [self.z1.re, self.z1.im, self.z2.re, self.z2.im]
    }

    pub fn from_coefficients([a, b, c, d]: [f64; 4]) -> Self {
        Bicomplex::new(Complex64::new(a, b), Complex64::new(c, d))
    }

    /// e^{iθ}
    pub fn exp_i(theta: f64) -> Self {
        Bicomplex::from_complex(Complex64::from_polar(1.0, theta))
    }

    /// e^{jφ} = cos φ + j sin φ
    pub fn exp_j(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Bicomplex::new(Complex64::new(c, 0.0), Complex64::new(s, 0.0))
    }

    /// e^{z₁ + z₂j} = e^{z₁}(cos z₂ + j sin z₂)
    pub fn exp(self) -> Self {
        let e = self.z1.exp();
        Bicomplex::new(e * self.z2.cos(), e * self.z2.sin())
    }

    pub fn scale(self, s: f64) -> Self {
        Bicomplex::new(self.z1 * s, self.z2 * s)
    }

    /// Part free of j; the projection used when only the real part with
    /// respect to j is retained.
    pub fn real_j(self) -> Complex64 {
        self.z1
    }

    /// Substitutes j by the complex number `j`. For j = ±i this is a ring
    /// homomorphism onto the ordinary complex numbers.
    pub fn substitute(self, j: Complex64) -> Complex64 {
        self.z1 + self.z2 * j
    }
}

impl Add for Bicomplex {
    type Output = Bicomplex;
    fn add(self, o: Self) -> Self {
        Bicomplex::new(self.z1 + o.z1, self.z2 + o.z2)
    }
}

impl Sub for Bicomplex {
    type Output = Bicomplex;
    fn sub(self, o: Self) -> Self {
        Bicomplex::new(self.z1 - o.z1, self.z2 - o.z2)
    }
}

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Self {
        Bicomplex::new(-self.z1, -self.z2)
    }
}

impl Mul for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, o: Self) -> Self {
        Bicomplex::new(self.z1 * o.z1 - self.z2 * o.z2, self.z1 * o.z2 + self.z2 * o.z1)
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coefficients();
        write!(f, "{a} + {b}i + {c}j + {d}ij")
    }
}
