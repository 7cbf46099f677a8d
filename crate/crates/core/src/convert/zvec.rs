use crate::error::{Result, RotError};
use crate::rotcore::{atan2_safe, clamp_unit, FusedAngles, Hemisphere, Vec3};

/// Accelerometer readings with a smaller norm (m/s^2) carry no usable
/// gravity direction.
pub const ACCEL_MIN_NORM: f64 = 1e-3;

const ZVEC_MIN_NORM: f64 = 1e-12;

/// Global z-axis in body coordinates for the tilt component `(theta, phi, h)`.
pub fn zvec_from_fused(theta: f64, phi: f64, hemi: Hemisphere) -> Result<Vec3> {
    let f = FusedAngles::new(0.0, theta, phi, hemi).validated()?;
    let c = ((f.theta + f.phi).cos() * (f.theta - f.phi).cos())
        .max(0.0)
        .sqrt();
    Ok(Vec3::new(-f.theta.sin(), f.phi.sin(), hemi.sign() * c))
}

/// `(gamma, alpha)` from the global z-axis expressed in body coordinates.
pub fn tilt_params_from_zvec(z: Vec3) -> Result<(f64, f64)> {
    let z = z.normalized(ZVEC_MIN_NORM)?;
    Ok((atan2_safe(-z.x, z.y), clamp_unit(z.z).acos()))
}

/// `(theta, phi, h)` from the global z-axis expressed in body coordinates.
pub fn fused_params_from_zvec(z: Vec3) -> Result<(f64, f64, Hemisphere)> {
    let z = z.normalized(ZVEC_MIN_NORM)?;
    let (theta, phi) =
        crate::rotcore::project_to_domain(clamp_unit(-z.x).asin(), clamp_unit(z.y).asin());
    Ok((theta, phi, Hemisphere::of(z.z)))
}

/// Tilt parameters identified from a quasi-static accelerometer reading.
/// Fused yaw is not observable from gravity alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GravityTilt {
    pub theta: f64,
    pub phi: f64,
    pub hemi: Hemisphere,
    pub gamma: f64,
    pub alpha: f64,
}

pub fn tilt_from_accel(accel: Vec3) -> Result<GravityTilt> {
    if !accel.is_finite() {
        return Err(RotError::NonFinite {
            what: "acceleration",
        });
    }
    let n = accel.norm();
    if n <= ACCEL_MIN_NORM {
        return Err(RotError::DegenerateVector { norm: n });
    }
    let z = accel * (1.0 / n);
    let (theta, phi, hemi) = fused_params_from_zvec(z)?;
    let (gamma, alpha) = tilt_params_from_zvec(z)?;
    Ok(GravityTilt {
        theta,
        phi,
        hemi,
        gamma,
        alpha,
    })
}
