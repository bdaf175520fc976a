//! Three families of 2x2 matrices closed under multiplication.
//!
//! Each family is a real algebra sitting inside the 2x2 matrices, written
//! down by its defining entries:
//!
//! * [`Rot2`]: [[x, y], [-y, x]], a copy of the complex numbers; its unit
//!   circle is SO(2).
//! * [`Split2`]: [[x, y], [y, x]], the split-complex numbers; its unit
//!   hyperbola gives the boosts of SO(1,1).
//! * [`Quat2`]: [[x+iy, r+is], [-r+is, x-iy]], a copy of the quaternions;
//!   its unit sphere is SU(2).
//!
//! The multiplication rules are closed by construction, and the tests also
//! multiply the full 2x2 matrices to confirm the defining shape survives.

use crate::mat::{ComplexMatrix, RealMatrix, C64};
use crate::Error;

/// Rotation-type element [[x, y], [-y, x]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rot2 {
    pub x: f64,
    pub y: f64,
}

impl Rot2 {
    pub fn new(x: f64, y: f64) -> Self {
        Rot2 { x, y }
    }

    pub fn identity() -> Self {
        Rot2 { x: 1.0, y: 0.0 }
    }

    pub fn mul(self, other: Rot2) -> Rot2 {
        Rot2 {
            x: self.x * other.x - self.y * other.y,
            y: self.x * other.y + self.y * other.x,
        }
    }

    pub fn det(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// Scale to the unit circle, landing in SO(2).
    pub fn normalize(self) -> Result<Rot2, Error> {
        let d = self.det();
        if !d.is_finite() {
            return Err(Error::NonFinite);
        }
        if d == 0.0 {
            return Err(Error::NonInvertible);
        }
        let s = libm::sqrt(d);
        Ok(Rot2 { x: self.x / s, y: self.y / s })
    }

    pub fn to_matrix(self) -> RealMatrix {
        RealMatrix::new(2, alloc::vec![self.x, self.y, -self.y, self.x])
            .expect("finite 2x2 entries")
    }
}

/// Split-type element [[x, y], [y, x]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Split2 {
    pub x: f64,
    pub y: f64,
}

impl Split2 {
    pub fn new(x: f64, y: f64) -> Self {
        Split2 { x, y }
    }

    pub fn identity() -> Self {
        Split2 { x: 1.0, y: 0.0 }
    }

    pub fn mul(self, other: Split2) -> Split2 {
        Split2 {
            x: self.x * other.x + self.y * other.y,
            y: self.x * other.y + self.y * other.x,
        }
    }

    pub fn det(self) -> f64 {
        self.x * self.x - self.y * self.y
    }

    /// Scale so |det| = 1; the sign of det is intrinsic and survives.
    pub fn normalize(self) -> Result<Split2, Error> {
        let d = self.det();
        if !d.is_finite() {
            return Err(Error::NonFinite);
        }
        if d == 0.0 {
            return Err(Error::NonInvertible);
        }
        let s = libm::sqrt(libm::fabs(d));
        Ok(Split2 { x: self.x / s, y: self.y / s })
    }

    pub fn to_matrix(self) -> RealMatrix {
        RealMatrix::new(2, alloc::vec![self.x, self.y, self.y, self.x])
            .expect("finite 2x2 entries")
    }
}

/// Quaternion-type element [[x+iy, r+is], [-r+is, x-iy]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quat2 {
    pub x: f64,
    pub y: f64,
    pub r: f64,
    pub s: f64,
}

impl Quat2 {
    pub fn new(x: f64, y: f64, r: f64, s: f64) -> Self {
        Quat2 { x, y, r, s }
    }

    pub fn identity() -> Self {
        Quat2::new(1.0, 0.0, 0.0, 0.0)
    }

    /// The four basis elements: identity, and the three imaginary units.
    pub fn basis() -> [Quat2; 4] {
        [
            Quat2::new(1.0, 0.0, 0.0, 0.0),
            Quat2::new(0.0, 0.0, 0.0, 1.0),
            Quat2::new(0.0, 0.0, 1.0, 0.0),
            Quat2::new(0.0, 1.0, 0.0, 0.0),
        ]
    }

    fn to_pair(self) -> (C64, C64) {
        (C64::new(self.x, self.y), C64::new(self.r, self.s))
    }

    fn from_pair(a: C64, b: C64) -> Quat2 {
        Quat2 { x: a.re, y: a.im, r: b.re, s: b.im }
    }

    pub fn mul(self, other: Quat2) -> Quat2 {
        let (a1, b1) = self.to_pair();
        let (a2, b2) = other.to_pair();
        Quat2::from_pair(a1 * a2 - b1 * b2.conj(), a1 * b2 + b1 * a2.conj())
    }

    pub fn neg(self) -> Quat2 {
        Quat2::new(-self.x, -self.y, -self.r, -self.s)
    }

    /// Squared norm; also the determinant of the matrix form.
    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y + self.r * self.r + self.s * self.s
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.norm_sq())
    }

    /// Scale to the unit sphere, landing in SU(2).
    pub fn normalize(self) -> Result<Quat2, Error> {
        let d = self.norm_sq();
        if !d.is_finite() {
            return Err(Error::NonFinite);
        }
        if d == 0.0 {
            return Err(Error::NonInvertible);
        }
        let s = libm::sqrt(d);
        Ok(Quat2::new(self.x / s, self.y / s, self.r / s, self.s / s))
    }

    pub fn to_matrix(self) -> ComplexMatrix {
        let (a, b) = self.to_pair();
        ComplexMatrix::new(2, alloc::vec![a, b, -b.conj(), a.conj()])
            .expect("finite 2x2 entries")
    }
}
