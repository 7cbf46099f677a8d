use super::quat::Quat;
use super::vec3::Vec3;
use crate::error::{Result, RotError};

pub const AXIS_TOL: f64 = 1e-12;

/// Rotation by `angle` radians about the unit axis `axis`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    pub axis: Vec3,
    pub angle: f64,
}

impl AxisAngle {
    pub fn try_new(axis: Vec3, angle: f64) -> Result<Self> {
        if !axis.is_finite() || !angle.is_finite() {
            return Err(RotError::NonFinite { what: "axis-angle" });
        }
        let n = axis.norm();
        if (n - 1.0).abs() > AXIS_TOL {
            return Err(RotError::NotUnitAxis { norm: n });
        }
        Ok(AxisAngle { axis, angle })
    }

    pub fn to_quat(&self) -> Quat {
        axisangle_to_quat(self)
    }
}

/// `q = (cos(angle/2), axis * sin(angle/2))`.
pub fn axisangle_to_quat(aa: &AxisAngle) -> Quat {
    let (s, c) = (0.5 * aa.angle).sin_cos();
    Quat::new(c, aa.axis.x * s, aa.axis.y * s, aa.axis.z * s)
}

/// Canonical axis-angle with `angle` in `[0, pi]`.
///
/// The zero rotation returns the axis `(0, 0, 1)`. For half-turns the axis
/// sign is fixed by [`Quat::canonical`].
pub fn quat_to_axisangle(q: Quat) -> AxisAngle {
    let q = q.canonical();
    let v = q.vec();
    let s = v.norm();
    if s == 0.0 {
        return AxisAngle {
            axis: Vec3::Z,
            angle: 0.0,
        };
    }
    AxisAngle {
        axis: v * (1.0 / s),
        angle: 2.0 * s.atan2(q.w),
    }
}
