//! First-principles geometric constructions of tilt and fused angles.
//!
//! These build the tilt rotation, the intermediate frame and the plane
//! projections explicitly from vectors, using only dot and cross products.
//! Nothing here calls into [`crate::convert`]; the point is to have a second,
//! independent route for cross-checking the closed-form conversions.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Result, RotError};
use crate::rotcore::{wrap, FusedAngles, Hemisphere, RotMat, TiltAngles, Vec3};

/// `|z_G x z_B|` below this leaves the tilt axis undefined.
pub const DEGENERATE_SIN: f64 = 1e-12;

/// Unsigned angle between two vectors.
fn angle_between(a: Vec3, b: Vec3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}

/// Angle from `a` to `b` about the unit axis `n` (both taken in the plane
/// normal to `n`).
fn signed_angle_about(a: Vec3, b: Vec3, n: Vec3) -> f64 {
    a.cross(b).dot(n).atan2(a.dot(b))
}

/// Rodrigues rotation of `v` by `angle` about the unit axis `k`.
fn rotate_about(v: Vec3, k: Vec3, angle: f64) -> Vec3 {
    let (s, c) = angle.sin_cos();
    v * c + k.cross(v) * s + k * (k.dot(v) * (1.0 - c))
}

/// The tilt rotation of `r` as `(axis, alpha)`: it maps `z_G` onto `z_B`
/// about an axis perpendicular to both.
pub fn tilt_rotation(r: &RotMat) -> Result<(Vec3, f64)> {
    let z_g = Vec3::Z;
    let z_b = r.col(2);
    let axis = z_g.cross(z_b);
    let s = axis.norm();
    if s < DEGENERATE_SIN {
        return Err(RotError::DegenerateVector { norm: s });
    }
    Ok((axis * (1.0 / s), angle_between(z_g, z_b)))
}

/// Tilt angles by explicit construction: tilt rotation, frame A obtained by
/// undoing the tilt on B, then `gamma` measured from `x_A` to the tilt axis
/// and `psi` from `x_G` to `x_A`.
///
/// Undefined at `alpha` in `{0, pi}`, where the tilt axis is not determined.
pub fn geometric_tilt(r: &RotMat) -> Result<TiltAngles> {
    let (axis, alpha) = tilt_rotation(r)?;
    let x_a = rotate_about(r.col(0), axis, -alpha);
    Ok(TiltAngles {
        psi: wrap(signed_angle_about(Vec3::X, x_a, Vec3::Z)),
        gamma: wrap(signed_angle_about(x_a, axis, Vec3::Z)),
        alpha,
    })
}

/// Fused angles by projecting `z_G` onto the body `y_B z_B` and `x_B z_B`
/// planes and measuring its angle to each projection.
///
/// Yaw comes from [`geometric_tilt`]; at the exact poles, where that is
/// undefined, it falls back to the heading of `x_B` (`alpha = 0`) or to 0
/// (`alpha = pi`).
pub fn geometric_fused(r: &RotMat) -> FusedAngles {
    // Global z-axis in body coordinates, as components along each body axis.
    let z_g = Vec3::new(r.col(0).z, r.col(1).z, r.col(2).z);
    let v_x = Vec3::new(0.0, z_g.y, z_g.z);
    let v_y = Vec3::new(z_g.x, 0.0, z_g.z);

    let sgn = |x: f64| {
        if x > 0.0 {
            1.0
        } else if x < 0.0 {
            -1.0
        } else {
            0.0
        }
    };
    let plane_angle = |v: Vec3| {
        if v.norm() == 0.0 {
            FRAC_PI_2
        } else {
            angle_between(z_g, v)
        }
    };
    let theta = -sgn(z_g.x) * plane_angle(v_x);
    let phi = sgn(z_g.y) * plane_angle(v_y);
    let hemi = Hemisphere::of(z_g.z);

    let psi = match geometric_tilt(r) {
        Ok(t) => t.psi,
        Err(_) if z_g.z > 0.0 => {
            let x_b = r.col(0);
            x_b.y.atan2(x_b.x)
        }
        Err(_) => 0.0,
    };
    FusedAngles {
        psi: wrap(psi),
        theta,
        phi,
        hemi,
    }
}

/// Fused yaw by the case-based definition: for `alpha != 0` the heading of
/// `z_B` less the tilt axis angle, for `alpha = 0` the heading of `x_B`.
///
/// Ill-conditioned near `alpha = 0`; kept for comparison only.
pub fn psi_case_formula(r: &RotMat) -> f64 {
    let m = &r.m;
    if m[2][0] == 0.0 && m[2][1] == 0.0 && m[2][2] > 0.0 {
        return wrap(m[1][0].atan2(m[0][0]));
    }
    let gamma = (-m[2][0]).atan2(m[2][1]);
    wrap(m[0][2].atan2(-m[1][2]) - gamma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ry(a: f64) -> RotMat {
        RotMat::rot_y(a)
    }

    #[test]
    fn geometric_tilt_examples() {
        let t = geometric_tilt(&ry(30f64.to_radians())).unwrap();
        assert!(t.psi.abs() < 1e-15);
        assert!((t.gamma - FRAC_PI_2).abs() < 1e-15);
        assert!((t.alpha - 30f64.to_radians()).abs() < 1e-15);

        let r = RotMat::rot_z(50f64.to_radians()) * ry(30f64.to_radians());
        let t = geometric_tilt(&r).unwrap();
        assert!((t.psi - 50f64.to_radians()).abs() < 1e-15);
        assert!((t.gamma - FRAC_PI_2).abs() < 1e-15);
        assert!((t.alpha - 30f64.to_radians()).abs() < 1e-15);

        assert!(geometric_tilt(&RotMat::rot_z(0.3)).is_err());
        assert!(geometric_tilt(&RotMat::diag(1.0, -1.0, -1.0)).is_err());
    }

    #[test]
    fn constructed_tilt_maps_z_onto_body_z() {
        let r = RotMat::rot_z(-2.0) * RotMat::rot_x(0.7) * ry(1.9);
        let (axis, alpha) = tilt_rotation(&r).unwrap();
        assert!(axis.z.abs() < 1e-15);
        assert!(rotate_about(Vec3::Z, axis, alpha).max_abs_diff(r.col(2)) < 1e-15);
    }

    #[test]
    fn geometric_fused_examples() {
        let f = geometric_fused(&RotMat::IDENTITY);
        assert_eq!(f, FusedAngles::IDENTITY);
        let f = geometric_fused(&ry(30f64.to_radians()));
        assert!(f.psi.abs() < 1e-15 && f.phi.abs() < 1e-15);
        assert!((f.theta - 30f64.to_radians()).abs() < 1e-15);
        assert_eq!(f.hemi, Hemisphere::Positive);

        // Pure yaw falls back to the x_B heading; a pure half-turn to zero yaw.
        let f = geometric_fused(&RotMat::rot_z(1.25));
        assert!((f.psi - 1.25).abs() < 1e-15);
        let f = geometric_fused(&RotMat::diag(-1.0, 1.0, -1.0));
        assert_eq!(
            (f.psi, f.theta, f.phi, f.hemi),
            (0.0, 0.0, 0.0, Hemisphere::Negative)
        );
    }

    #[test]
    fn fused_pitch_is_quarter_turn_when_projection_vanishes() {
        // z_G along body -x: v_x = 0, theta = +pi/2.
        let f = geometric_fused(&ry(FRAC_PI_2));
        assert!((f.theta - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn case_formula_pure_yaw() {
        for b in [-3.0, -0.5, 0.0, 1.0, 3.1] {
            assert!((psi_case_formula(&RotMat::rot_z(b)) - b).abs() < 1e-15);
        }
    }
}
