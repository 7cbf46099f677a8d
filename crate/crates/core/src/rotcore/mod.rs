//! Rotation value types, angle helpers and quaternion/matrix algebra.

mod angle;
mod axis_angle;
mod params;
mod quat;
mod rotmat;
mod sample;
mod vec3;

pub use angle::{atan2_safe, clamp_unit, msign, try_wrap, wrap};
pub use axis_angle::{axisangle_to_quat, quat_to_axisangle, AxisAngle, AXIS_TOL};
pub(crate) use params::project_to_domain;
pub use params::{FusedAngles, Hemisphere, TiltAngles, SINE_SUM_TOL};
pub use quat::{Quat, UNIT_TOL};
pub use rotmat::{RotMat, SO3_TOL};
pub use sample::random_rotation;
pub use vec3::Vec3;
