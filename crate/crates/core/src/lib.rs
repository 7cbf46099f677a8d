//! Fused angles and tilt angles: rotation representations that split a 3D
//! rotation into a yaw about the global z-axis and a tilt of the body z-axis.
//!
//! - [`rotcore`]: quaternions, rotation matrices, axis-angle and the fused/tilt
//!   parameter types.
//! - [`convert`]: closed-form conversions among all representations.
//! - [`fusedops`]: inverses, yaw extraction and removal, standard form,
//!   singularity classification, metrics, slerp.
//! - [`oracle`]: slow first-principles geometric constructions used to check
//!   the closed forms.
//! - [`cli`]: the `fusedrot` command-line tool.

pub mod cli;
pub mod convert;
pub mod error;
pub mod fusedops;
pub mod oracle;
pub mod rotcore;

pub use error::{Result, RotError};
pub use rotcore::{AxisAngle, FusedAngles, Hemisphere, Quat, RotMat, TiltAngles, Vec3};
