//! Three-component vectors over real, complex or bicomplex scalars.
//!
//! Components are stored in whatever orthonormal basis the caller is working
//! in; the basis-change helpers at the bottom convert cylindrical and
//! spherical components to Cartesian.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize)]
pub struct Vec3<T>(pub [T; 3]);

pub type RVec3 = Vec3<f64>;
pub type CVec3 = Vec3<Complex64>;

impl<T: Copy> Vec3<T> {
    pub const fn new(a: T, b: T, c: T) -> Self {
        Vec3([a, b, c])
    }

    pub fn map<U>(self, f: impl Fn(T) -> U) -> Vec3<U> {
        let [a, b, c] = self.0;
        Vec3([f(a), f(b), f(c)])
    }

    pub fn zip<U: Copy, V>(self, other: Vec3<U>, f: impl Fn(T, U) -> V) -> Vec3<V> {
        let [a, b, c] = self.0;
        let [x, y, z] = other.0;
        Vec3([f(a, x), f(b, y), f(c, z)])
    }

    pub fn x(&self) -> T {
        self.0[0]
    }
    pub fn y(&self) -> T {
        self.0[1]
    }
    pub fn z(&self) -> T {
        self.0[2]
    }
}

impl<T: Copy + Add<Output = T>> Add for Vec3<T> {
    type Output = Vec3<T>;
    fn add(self, rhs: Self) -> Self {
        self.zip(rhs, |a, b| a + b)
    }
}

impl<T: Copy + Sub<Output = T>> Sub for Vec3<T> {
    type Output = Vec3<T>;
    fn sub(self, rhs: Self) -> Self {
        self.zip(rhs, |a, b| a - b)
    }
}

impl<T: Copy + Neg<Output = T>> Neg for Vec3<T> {
    type Output = Vec3<T>;
    fn neg(self) -> Self {
        self.map(|a| -a)
    }
}

impl<T: Copy + Mul<Output = T>> Vec3<T> {
    pub fn scale(self, s: T) -> Self {
        self.map(|a| a * s)
    }
}

impl<T> Vec3<T>
where
    T: Copy + Mul<Output = T> + Sub<Output = T>,
{
    pub fn cross(self, o: Self) -> Self {
        let [a, b, c] = self.0;
        let [x, y, z] = o.0;
        Vec3([b * z - c * y, c * x - a * z, a * y - b * x])
    }
}

impl RVec3 {
    pub fn dot(self, o: RVec3) -> f64 {
        self.0.iter().zip(o.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn to_complex(self) -> CVec3 {
        self.map(|a| Complex64::new(a, 0.0))
    }

    pub fn max_abs(self) -> f64 {
        self.0.iter().fold(0.0f64, |m, a| m.max(a.abs()))
    }
}

impl CVec3 {
    /// Hermitian product Σ aᵢ bᵢ*.
    pub fn hdot(self, o: CVec3) -> Complex64 {
        self.0.iter().zip(o.0).map(|(a, b)| a * b.conj()).sum()
    }

    /// |v|² = v·v*
    pub fn norm_sqr(self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn re(self) -> RVec3 {
        self.map(|a| a.re)
    }

    pub fn scale_real(self, s: f64) -> CVec3 {
        self.map(|a| a * s)
    }

    pub fn max_abs(self) -> f64 {
        self.0.iter().fold(0.0f64, |m, a| m.max(a.norm()))
    }
}

/// Rotates (ρ, φ, z) components at azimuth `phi` to Cartesian (x, y, z).
pub fn cylindrical_to_cartesian<T>(v: Vec3<T>, phi: f64) -> Vec3<T>
where
    T: Copy + Mul<f64, Output = T> + Add<Output = T> + Sub<Output = T>,
{
    let (s, c) = phi.sin_cos();
    let [vr, vp, vz] = v.0;
    Vec3([vr * c - vp * s, vr * s + vp * c, vz])
}

/// Rotates (r, θ, φ) components at polar angle `theta` and azimuth `phi` to Cartesian.
pub fn spherical_to_cartesian<T>(v: Vec3<T>, theta: f64, phi: f64) -> Vec3<T>
where
    T: Copy + Mul<f64, Output = T> + Add<Output = T> + Sub<Output = T>,
{
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let [vr, vt, vp] = v.0;
    Vec3([
        vr * (st * cp) + vt * (ct * cp) - vp * sp,
        vr * (st * sp) + vt * (ct * sp) + vp * cp,
        vr * ct - vt * st,
    ])
}

/// Rotates Cartesian components to (r, θ, φ) at the given angles.
pub fn cartesian_to_spherical<T>(v: Vec3<T>, theta: f64, phi: f64) -> Vec3<T>
where
    T: Copy + Mul<f64, Output = T> + Add<Output = T> + Sub<Output = T>,
{
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let [x, y, z] = v.0;
    Vec3([
        x * (st * cp) + y * (st * sp) + z * ct,
        x * (ct * cp) + y * (ct * sp) - z * st,
        y * cp - x * sp,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_product_basis() {
        let x = RVec3::new(1.0, 0.0, 0.0);
        let y = RVec3::new(0.0, 1.0, 0.0);
        assert_eq!(x.cross(y), RVec3::new(0.0, 0.0, 1.0));
    }

    #[test]
    fn spherical_round_trip() {
        let v = RVec3::new(0.3, -1.2, 2.5);
        let (t, p) = (0.7, -2.1);
        let back = cartesian_to_spherical(spherical_to_cartesian(v, t, p), t, p);
        assert!((back - v).max_abs() < 1e-14);
    }

    #[test]
    fn cylindrical_radial_unit() {
        let phi = 0.4;
        let r = cylindrical_to_cartesian(RVec3::new(1.0, 0.0, 0.0), phi);
        assert!((r.x() - phi.cos()).abs() < 1e-15 && (r.y() - phi.sin()).abs() < 1e-15);
    }
}
