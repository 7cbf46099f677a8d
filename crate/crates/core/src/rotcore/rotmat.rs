use std::ops::Mul;

use super::vec3::Vec3;
use crate::error::{Result, RotError};

/// Acceptance tolerance for orthonormality and determinant checks.
pub const SO3_TOL: f64 = 1e-9;

/// Row-major 3x3 rotation matrix. Columns are the body axes expressed in
/// global coordinates, so the bottom row is the global z-axis in body
/// coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotMat {
    pub m: [[f64; 3]; 3],
}

impl RotMat {
    pub const IDENTITY: RotMat = RotMat {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    pub const fn from_rows(m: [[f64; 3]; 3]) -> Self {
        Self { m }
    }

    /// Accepts `m` if it lies in SO(3) within [`SO3_TOL`].
    pub fn try_from_rows(m: [[f64; 3]; 3]) -> Result<Self> {
        let r = RotMat { m };
        r.validate(SO3_TOL)?;
        Ok(r)
    }

    pub fn from_flat(a: [f64; 9]) -> Self {
        RotMat {
            m: [[a[0], a[1], a[2]], [a[3], a[4], a[5]], [a[6], a[7], a[8]]],
        }
    }

    pub fn to_flat(&self) -> [f64; 9] {
        let m = &self.m;
        [
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
        ]
    }

    pub fn diag(a: f64, b: f64, c: f64) -> Self {
        RotMat {
            m: [[a, 0.0, 0.0], [0.0, b, 0.0], [0.0, 0.0, c]],
        }
    }

    pub fn rot_x(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        RotMat::from_rows([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])
    }

    pub fn rot_y(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        RotMat::from_rows([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])
    }

    pub fn rot_z(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        RotMat::from_rows([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn row(&self, i: usize) -> Vec3 {
        Vec3::from(self.m[i])
    }

    pub fn col(&self, j: usize) -> Vec3 {
        Vec3::new(self.m[0][j], self.m[1][j], self.m[2][j])
    }

    pub fn transpose(&self) -> RotMat {
        let m = &self.m;
        RotMat::from_rows([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn det(&self) -> f64 {
        self.row(0).dot(self.row(1).cross(self.row(2)))
    }

    pub fn mul_vec(&self, v: Vec3) -> Vec3 {
        Vec3::new(self.row(0).dot(v), self.row(1).dot(v), self.row(2).dot(v))
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|v| v.is_finite())
    }

    /// Largest entry of `|R^T R - I|` and `|det(R) - 1|`.
    pub fn residuals(&self) -> (f64, f64) {
        let mut ortho = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                let g = self.col(i).dot(self.col(j));
                let target = if i == j { 1.0 } else { 0.0 };
                ortho = ortho.max((g - target).abs());
            }
        }
        (ortho, (self.det() - 1.0).abs())
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        if !self.is_finite() {
            return Err(RotError::NonFinite {
                what: "rotation matrix",
            });
        }
        let (orthonormality, det_deviation) = self.residuals();
        if orthonormality > tol || det_deviation > tol {
            return Err(RotError::NotRotation {
                orthonormality,
                det_deviation,
            });
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, o: &RotMat) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(o.m.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Default for RotMat {
    fn default() -> Self {
        RotMat::IDENTITY
    }
}

impl Mul for RotMat {
    type Output = RotMat;
    fn mul(self, b: RotMat) -> RotMat {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.row(i).dot(b.col(j));
            }
        }
        RotMat::from_rows(out)
    }
}
