use crate::rotcore::{atan2_safe, clamp_unit, Quat};

/// Intrinsic ZYX Euler angles: yaw about z, then pitch about the new y, then
/// roll about the new x.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EulerZyx {
    pub yaw: f64,
    pub pitch: f64,
    pub roll: f64,
}

impl EulerZyx {
    pub const fn new(yaw: f64, pitch: f64, roll: f64) -> Self {
        Self { yaw, pitch, roll }
    }
}

// |sin(pitch)| above this is treated as gimbal lock.
const GIMBAL_SIN: f64 = 1.0 - 1e-12;

pub fn euler_zyx_to_quat(e: &EulerZyx) -> Quat {
    Quat::rot_z(e.yaw) * Quat::rot_y(e.pitch) * Quat::rot_x(e.roll)
}

/// Principal-branch ZYX Euler angles with pitch in `[-pi/2, pi/2]`.
/// At gimbal lock the roll is set to zero and the remaining z-rotation is
/// assigned to the yaw.
pub fn quat_to_euler_zyx(q: Quat) -> EulerZyx {
    let Quat { w, x, y, z } = q;
    let sin_pitch = clamp_unit(2.0 * (w * y - x * z));
    if sin_pitch.abs() >= GIMBAL_SIN {
        let r12 = 2.0 * (x * y - w * z);
        let r22 = 1.0 - 2.0 * (x * x + z * z);
        return EulerZyx {
            yaw: atan2_safe(-r12, r22),
            pitch: sin_pitch.asin(),
            roll: 0.0,
        };
    }
    EulerZyx {
        yaw: atan2_safe(2.0 * (w * z + x * y), 1.0 - 2.0 * (y * y + z * z)),
        pitch: sin_pitch.asin(),
        roll: atan2_safe(2.0 * (w * x + y * z), 1.0 - 2.0 * (x * x + y * y)),
    }
}
