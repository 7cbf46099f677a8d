use std::fmt;
use std::str::FromStr;

use super::{
    euler_zyx_to_quat, fused_to_quat, fused_to_rotmat, fused_to_tilt, quat_to_euler_zyx,
    quat_to_fused, quat_to_rotmat, quat_to_tilt, rotmat_to_fused, rotmat_to_quat, rotmat_to_tilt,
    tilt_to_fused, tilt_to_quat, tilt_to_rotmat, EulerZyx,
};
use crate::error::{Result, RotError};
use crate::rotcore::{
    quat_to_axisangle, AxisAngle, FusedAngles, Hemisphere, Quat, RotMat, TiltAngles, Vec3, SO3_TOL,
};

/// Name of a rotation representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Repr {
    Quat,
    RotMat,
    Tilt,
    Fused,
    Euler,
    AxisAngle,
}

impl Repr {
    pub const ALL: [Repr; 6] = [
        Repr::Quat,
        Repr::RotMat,
        Repr::Tilt,
        Repr::Fused,
        Repr::Euler,
        Repr::AxisAngle,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Repr::Quat => "quat",
            Repr::RotMat => "rotmat",
            Repr::Tilt => "tilt",
            Repr::Fused => "fused",
            Repr::Euler => "euler",
            Repr::AxisAngle => "axisangle",
        }
    }

    /// Number of scalars in the flat value list of this representation.
    pub fn arity(self) -> usize {
        match self {
            Repr::Quat | Repr::Fused | Repr::AxisAngle => 4,
            Repr::RotMat => 9,
            Repr::Tilt | Repr::Euler => 3,
        }
    }

    /// Which flat-list positions hold angles (scaled by `--deg`).
    pub fn angle_slots(self) -> &'static [usize] {
        match self {
            Repr::Quat | Repr::RotMat => &[],
            Repr::Tilt | Repr::Euler => &[0, 1, 2],
            Repr::Fused => &[0, 1, 2],
            Repr::AxisAngle => &[3],
        }
    }
}

impl fmt::Display for Repr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownRepr(pub String);

impl fmt::Display for UnknownRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown representation '{}' (expected quat|rotmat|tilt|fused|euler|axisangle)",
            self.0
        )
    }
}

impl std::error::Error for UnknownRepr {}

impl FromStr for Repr {
    type Err = UnknownRepr;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Repr::ALL
            .into_iter()
            .find(|r| r.token() == s)
            .ok_or_else(|| UnknownRepr(s.to_string()))
    }
}

/// A rotation held in any supported representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rotation {
    Quat(Quat),
    RotMat(RotMat),
    Tilt(TiltAngles),
    Fused(FusedAngles),
    Euler(EulerZyx),
    AxisAngle(AxisAngle),
}

impl Rotation {
    pub fn repr(&self) -> Repr {
        match self {
            Rotation::Quat(_) => Repr::Quat,
            Rotation::RotMat(_) => Repr::RotMat,
            Rotation::Tilt(_) => Repr::Tilt,
            Rotation::Fused(_) => Repr::Fused,
            Rotation::Euler(_) => Repr::Euler,
            Rotation::AxisAngle(_) => Repr::AxisAngle,
        }
    }

    /// Validates the held value and converts it to a unit quaternion.
    pub fn to_quat(&self) -> Result<Quat> {
        match self {
            Rotation::Quat(q) => Quat::try_unit(q.w, q.x, q.y, q.z),
            Rotation::RotMat(r) => {
                r.validate(SO3_TOL)?;
                Ok(rotmat_to_quat(r))
            }
            Rotation::Tilt(t) => {
                t.validate()?;
                Ok(tilt_to_quat(t))
            }
            Rotation::Fused(f) => fused_to_quat(f),
            Rotation::Euler(e) => {
                if !(e.yaw.is_finite() && e.pitch.is_finite() && e.roll.is_finite()) {
                    return Err(RotError::NonFinite {
                        what: "euler angles",
                    });
                }
                Ok(euler_zyx_to_quat(e))
            }
            Rotation::AxisAngle(aa) => Ok(AxisAngle::try_new(aa.axis, aa.angle)?.to_quat()),
        }
    }

    pub fn from_quat(q: Quat, repr: Repr) -> Rotation {
        match repr {
            Repr::Quat => Rotation::Quat(q),
            Repr::RotMat => Rotation::RotMat(quat_to_rotmat(q)),
            Repr::Tilt => Rotation::Tilt(quat_to_tilt(q)),
            Repr::Fused => Rotation::Fused(quat_to_fused(q)),
            Repr::Euler => Rotation::Euler(quat_to_euler_zyx(q)),
            Repr::AxisAngle => Rotation::AxisAngle(quat_to_axisangle(q)),
        }
    }

    /// Converts to `to`, using the direct closed-form conversion where one
    /// exists and the quaternion hub otherwise.
    pub fn convert(&self, to: Repr) -> Result<Rotation> {
        let out = match (self, to) {
            (Rotation::Quat(_), Repr::Quat) => Rotation::Quat(self.to_quat()?),
            (Rotation::Fused(f), Repr::Fused) => Rotation::Fused(f.validated()?),
            (r, to) if r.repr() == to => {
                r.to_quat()?;
                *r
            }
            (Rotation::Fused(f), Repr::Tilt) => Rotation::Tilt(fused_to_tilt(f)?),
            (Rotation::Fused(f), Repr::RotMat) => Rotation::RotMat(fused_to_rotmat(f)?),
            (Rotation::Tilt(t), Repr::Fused) => {
                t.validate()?;
                Rotation::Fused(tilt_to_fused(t))
            }
            (Rotation::Tilt(t), Repr::RotMat) => {
                t.validate()?;
                Rotation::RotMat(tilt_to_rotmat(t))
            }
            (Rotation::RotMat(r), Repr::Tilt) => {
                r.validate(SO3_TOL)?;
                Rotation::Tilt(rotmat_to_tilt(r))
            }
            (Rotation::RotMat(r), Repr::Fused) => {
                r.validate(SO3_TOL)?;
                Rotation::Fused(rotmat_to_fused(r))
            }
            _ => Rotation::from_quat(self.to_quat()?, to),
        };
        Ok(out)
    }

    /// Flat value list in radians, hemisphere as `+1`/`-1`.
    pub fn values(&self) -> Vec<f64> {
        match self {
            Rotation::Quat(q) => q.to_array().to_vec(),
            Rotation::RotMat(r) => r.to_flat().to_vec(),
            Rotation::Tilt(t) => vec![t.psi, t.gamma, t.alpha],
            Rotation::Fused(f) => vec![f.psi, f.theta, f.phi, f.hemi.sign()],
            Rotation::Euler(e) => vec![e.yaw, e.pitch, e.roll],
            Rotation::AxisAngle(aa) => vec![aa.axis.x, aa.axis.y, aa.axis.z, aa.angle],
        }
    }

    /// Builds a rotation from a flat value list in radians. Only the shape
    /// (arity, hemisphere token) is checked here; domain validation happens
    /// on conversion.
    pub fn from_values(repr: Repr, v: &[f64]) -> std::result::Result<Rotation, ShapeError> {
        if v.len() != repr.arity() {
            return Err(ShapeError::Arity {
                repr,
                expected: repr.arity(),
                got: v.len(),
            });
        }
        let r = match repr {
            Repr::Quat => Rotation::Quat(Quat::new(v[0], v[1], v[2], v[3])),
            Repr::RotMat => Rotation::RotMat(RotMat::from_flat([
                v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8],
            ])),
            Repr::Tilt => Rotation::Tilt(TiltAngles::new(v[0], v[1], v[2])),
            Repr::Fused => {
                let hemi = match v[3] {
                    1.0 => Hemisphere::Positive,
                    -1.0 => Hemisphere::Negative,
                    h => return Err(ShapeError::Hemisphere(h)),
                };
                Rotation::Fused(FusedAngles::new(v[0], v[1], v[2], hemi))
            }
            Repr::Euler => Rotation::Euler(EulerZyx::new(v[0], v[1], v[2])),
            Repr::AxisAngle => Rotation::AxisAngle(AxisAngle {
                axis: Vec3::new(v[0], v[1], v[2]),
                angle: v[3],
            }),
        };
        Ok(r)
    }
}

/// A flat value list that does not fit the shape of its representation.
#[derive(Debug, Clone, PartialEq)]
pub enum ShapeError {
    Arity {
        repr: Repr,
        expected: usize,
        got: usize,
    },
    Hemisphere(f64),
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::Arity {
                repr,
                expected,
                got,
            } => write!(f, "{repr} takes {expected} values, got {got}"),
            ShapeError::Hemisphere(h) => write!(f, "hemisphere must be 1 or -1, got {h}"),
        }
    }
}

impl std::error::Error for ShapeError {}
