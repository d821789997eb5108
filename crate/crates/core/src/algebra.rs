//! Scalar and vector foundations: complex scalars, Cartesian 3-vectors,
//! spacetime points in (ct, x, y, z) coordinates, and the rank-4
//! Levi-Civita symbol.
//!
//! Index 0 is always the time coordinate x^0 = ct; indices 1, 2, 3 are the
//! spatial x, y, z. Every time derivative stored anywhere in this crate is
//! taken with respect to x^0, so (1/c) ∂/∂t in field language.

use num_complex::Complex64;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub};

/// Complex scalar used for connection and curvature components.
pub type CScalar = Complex64;

/// √(5/6), the constant carried by the complex spatial E-rows of the
/// connection. Computed from integer arithmetic, never from a decimal
/// literal, so every call site sees the identical correctly rounded value.
pub fn sqrt_five_sixths() -> f64 {
    (5.0_f64 / 6.0_f64).sqrt()
}

/// Cartesian 3-vector in Gaussian field units (statvolt/cm ≡ gauss).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub const fn zero() -> Self {
        Vec3::new(0.0, 0.0, 0.0)
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_sqr(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0).then(|| self / n)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Largest component magnitude.
    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }
}

impl Index<usize> for Vec3 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("Vec3 index out of range: {i}"),
        }
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

/// Event in Cartesian coordinates (x^0, x^1, x^2, x^3) = (ct, x, y, z),
/// every component a length in cm.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SpacetimePoint(pub [f64; 4]);

impl SpacetimePoint {
    pub const fn new(ct: f64, x: f64, y: f64, z: f64) -> Self {
        SpacetimePoint([ct, x, y, z])
    }

    pub const fn origin() -> Self {
        SpacetimePoint([0.0; 4])
    }

    pub fn ct(&self) -> f64 {
        self.0[0]
    }

    /// Spatial part (x, y, z).
    pub fn spatial(&self) -> Vec3 {
        Vec3::new(self.0[1], self.0[2], self.0[3])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    /// Point shifted by `h` along coordinate axis `a`.
    pub fn shifted(&self, a: usize, h: f64) -> SpacetimePoint {
        let mut c = self.0;
        c[a] += h;
        SpacetimePoint(c)
    }
}

impl Index<usize> for SpacetimePoint {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Rank-4 Levi-Civita symbol with ε(0,1,2,3) = +1: the sign of the
/// permutation (i,j,k,l) of {0,1,2,3}, zero on any repeated index.
pub fn levi_civita(i: usize, j: usize, k: usize, l: usize) -> i32 {
    let p = [i, j, k, l];
    if p.iter().any(|&v| v > 3) {
        return 0;
    }
    let mut sign = 1i32;
    for a in 0..4 {
        for b in (a + 1)..4 {
            if p[a] == p[b] {
                return 0;
            }
            if p[a] > p[b] {
                sign = -sign;
            }
        }
    }
    sign
}
