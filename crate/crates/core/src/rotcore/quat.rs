use std::ops::{Mul, Neg};

use super::vec3::Vec3;
use crate::error::{Result, RotError};

/// Unit-norm acceptance tolerance for quaternions supplied from outside the library.
pub const UNIT_TOL: f64 = 1e-9;

/// Quaternion `(w, x, y, z)`, scalar first, Hamilton convention.
///
/// As a rotation, `q` maps body coordinates to global coordinates:
/// `v_global = q * v_body * conj(q)`. `q` and `-q` are the same rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quat {
    pub const IDENTITY: Quat = Quat::new(1.0, 0.0, 0.0, 0.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Accepts `(w, x, y, z)` as a rotation if its norm is within [`UNIT_TOL`] of one,
    /// returning the renormalised quaternion.
    pub fn try_unit(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let q = Quat::new(w, x, y, z);
        if !q.is_finite() {
            return Err(RotError::NonFinite { what: "quaternion" });
        }
        let n = q.norm();
        if (n - 1.0).abs() > UNIT_TOL {
            return Err(RotError::NotUnitQuat { norm: n });
        }
        Ok(q.scale(1.0 / n))
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Quat::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// Rotation by `angle` about the global x-axis.
    pub fn rot_x(angle: f64) -> Self {
        let (s, c) = (0.5 * angle).sin_cos();
        Quat::new(c, s, 0.0, 0.0)
    }

    pub fn rot_y(angle: f64) -> Self {
        let (s, c) = (0.5 * angle).sin_cos();
        Quat::new(c, 0.0, s, 0.0)
    }

    pub fn rot_z(angle: f64) -> Self {
        let (s, c) = (0.5 * angle).sin_cos();
        Quat::new(c, 0.0, 0.0, s)
    }

    pub fn vec(self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    pub fn dot(self, o: Quat) -> f64 {
        self.w * o.w + self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, s: f64) -> Quat {
        Quat::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// Unit quaternion in the same direction. The zero quaternion yields NaN.
    pub fn normalized(self) -> Quat {
        self.scale(1.0 / self.norm())
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn conj(self) -> Quat {
        Quat::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Raw Hamilton product, without renormalisation.
    pub fn hamilton(self, b: Quat) -> Quat {
        let a = self;
        Quat::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }

    /// Rotates a body-frame vector into the global frame.
    pub fn rotate(self, v: Vec3) -> Vec3 {
        let u = self.vec();
        let t = u.cross(v) * 2.0;
        v + t * self.w + u.cross(t)
    }

    /// Same sign as `self` with a non-negative scalar part (ties broken on the
    /// first non-zero vector component).
    pub fn canonical(self) -> Quat {
        let key = [self.w, self.x, self.y, self.z]
            .into_iter()
            .find(|c| *c != 0.0)
            .unwrap_or(0.0);
        if key < 0.0 {
            -self
        } else {
            self
        }
    }

    /// Largest componentwise difference, minimised over the sign of `o`.
    pub fn max_abs_diff_up_to_sign(self, o: Quat) -> f64 {
        let d = |p: Quat| {
            (self.w - p.w)
                .abs()
                .max((self.x - p.x).abs())
                .max((self.y - p.y).abs())
                .max((self.z - p.z).abs())
        };
        d(o).min(d(-o))
    }

    /// Equality as rotations: componentwise within `tol`, up to global sign.
    pub fn eq_rotation(self, o: Quat, tol: f64) -> bool {
        self.max_abs_diff_up_to_sign(o) <= tol
    }
}

impl Default for Quat {
    fn default() -> Self {
        Quat::IDENTITY
    }
}

/// Composition `a * b` (apply `b`, then `a`), renormalised.
impl Mul for Quat {
    type Output = Quat;
    fn mul(self, b: Quat) -> Quat {
        self.hamilton(b).normalized()
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-self.w, -self.x, -self.y, -self.z)
    }
}
