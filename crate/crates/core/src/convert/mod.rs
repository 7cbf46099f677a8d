//! Conversions among fused angles, tilt angles, rotation matrices and
//! quaternions, plus the z-vector and accelerometer identifications.
//!
//! Fused yaw is always evaluated from the quaternion form
//! `psi = wrap(2 atan2(z, w))` or the four-case matrix form, both of which are
//! well conditioned near `alpha = 0`.

mod any;
mod euler;
mod zvec;

pub use any::{Repr, Rotation, ShapeError, UnknownRepr};
pub use euler::{euler_zyx_to_quat, quat_to_euler_zyx, EulerZyx};
pub use zvec::{
    fused_params_from_zvec, tilt_from_accel, tilt_params_from_zvec, zvec_from_fused, GravityTilt,
    ACCEL_MIN_NORM,
};

use std::f64::consts::FRAC_PI_2;

use crate::error::Result;
use crate::rotcore::{
    atan2_safe, clamp_unit, project_to_domain, wrap, FusedAngles, Hemisphere, Quat, RotMat,
    TiltAngles,
};

/// Cosine and sine of the tilt angle of `(theta, phi, h)`, without forming `alpha`.
fn tilt_cos_sin(theta: f64, phi: f64, hemi: Hemisphere) -> (f64, f64) {
    let (st, sp) = (theta.sin(), phi.sin());
    let cos_alpha = hemi.sign() * ((theta + phi).cos() * (theta - phi).cos()).max(0.0).sqrt();
    let sin_alpha = (st * st + sp * sp).min(1.0).sqrt();
    (cos_alpha, sin_alpha)
}

/// Fused yaw of a quaternion, `wrap(2 atan2(z, w))`. Returns 0 at `w = z = 0`.
pub fn fused_yaw(q: Quat) -> f64 {
    wrap(2.0 * atan2_safe(q.z, q.w))
}

pub fn fused_to_tilt(f: &FusedAngles) -> Result<TiltAngles> {
    let f = f.validated()?;
    let (cos_alpha, _) = tilt_cos_sin(f.theta, f.phi, f.hemi);
    Ok(TiltAngles {
        psi: f.psi,
        gamma: atan2_safe(f.theta.sin(), f.phi.sin()),
        alpha: clamp_unit(cos_alpha).acos(),
    })
}

pub fn tilt_to_fused(t: &TiltAngles) -> FusedAngles {
    let (sg, cg) = t.gamma.sin_cos();
    let sa = t.alpha.sin();
    let (theta, phi) = project_to_domain(clamp_unit(sa * sg).asin(), clamp_unit(sa * cg).asin());
    FusedAngles {
        psi: t.psi,
        theta,
        phi,
        hemi: if t.alpha <= FRAC_PI_2 {
            Hemisphere::Positive
        } else {
            Hemisphere::Negative
        },
    }
}

/// Upper two rows of the tilt angles rotation matrix, with `beta = psi + gamma`.
fn tilt_upper_rows(t: &TiltAngles) -> [[f64; 3]; 2] {
    let (sg, cg) = t.gamma.sin_cos();
    let (sa, ca) = t.alpha.sin_cos();
    let (sb, cb) = (t.psi + t.gamma).sin_cos();
    [
        [cg * cb + ca * sg * sb, sg * cb - ca * cg * sb, sa * sb],
        [cg * sb - ca * sg * cb, sg * sb + ca * cg * cb, -sa * cb],
    ]
}

pub fn tilt_to_rotmat(t: &TiltAngles) -> RotMat {
    let [r1, r2] = tilt_upper_rows(t);
    let (sg, cg) = t.gamma.sin_cos();
    let (sa, ca) = t.alpha.sin_cos();
    RotMat::from_rows([r1, r2, [-sa * sg, sa * cg, ca]])
}

/// Fused yaw of a rotation matrix via the four-case half-angle formula.
pub fn rotmat_fused_yaw(r: &RotMat) -> f64 {
    let m = &r.m;
    let (r11, r22, r33) = (m[0][0], m[1][1], m[2][2]);
    let tr = r11 + r22 + r33;
    let half = if tr >= 0.0 {
        atan2_safe(m[1][0] - m[0][1], 1.0 + tr)
    } else {
        let rm = r11.max(r22).max(r33);
        if rm == r33 {
            let rz = 1.0 - r11 - r22 + r33;
            atan2_safe(rz, m[1][0] - m[0][1])
        } else if rm == r22 {
            atan2_safe(m[2][1] + m[1][2], m[0][2] - m[2][0])
        } else {
            atan2_safe(m[0][2] + m[2][0], m[2][1] - m[1][2])
        }
    };
    wrap(2.0 * half)
}

pub fn rotmat_to_tilt(r: &RotMat) -> TiltAngles {
    let m = &r.m;
    TiltAngles {
        psi: rotmat_fused_yaw(r),
        gamma: atan2_safe(-m[2][0], m[2][1]),
        alpha: clamp_unit(m[2][2]).acos(),
    }
}

/// Rotation matrix of fused angles; the bottom row is exactly
/// `(-sin theta, sin phi, cos alpha)`.
pub fn fused_to_rotmat(f: &FusedAngles) -> Result<RotMat> {
    let t = fused_to_tilt(f)?;
    let f = f.validated()?;
    let (cos_alpha, _) = tilt_cos_sin(f.theta, f.phi, f.hemi);
    let [r1, r2] = tilt_upper_rows(&t);
    Ok(RotMat::from_rows([
        r1,
        r2,
        [-f.theta.sin(), f.phi.sin(), cos_alpha],
    ]))
}

/// Fused pitch and roll from the global z-axis in body coordinates.
///
/// Same as `asin(-zx)` and `asin(zy)` for a unit vector, but accurate near
/// `|theta| = pi/2` or `|phi| = pi/2`, where `asin` is ill-conditioned.
fn pitch_roll_from_zvec(zx: f64, zy: f64, zz: f64) -> (f64, f64) {
    project_to_domain((-zx).atan2(zy.hypot(zz)), zy.atan2(zx.hypot(zz)))
}

pub fn rotmat_to_fused(r: &RotMat) -> FusedAngles {
    let m = &r.m;
    let (theta, phi) = pitch_roll_from_zvec(m[2][0], m[2][1], m[2][2]);
    FusedAngles {
        psi: rotmat_fused_yaw(r),
        theta,
        phi,
        hemi: Hemisphere::of(m[2][2]),
    }
}

pub fn tilt_to_quat(t: &TiltAngles) -> Quat {
    let (sa, ca) = (0.5 * t.alpha).sin_cos();
    let hpsi = 0.5 * t.psi;
    let (sp, cp) = hpsi.sin_cos();
    let (sb, cb) = (hpsi + t.gamma).sin_cos();
    Quat::new(ca * cp, sa * cb, sa * sb, ca * sp)
}

pub fn quat_to_tilt(q: Quat) -> TiltAngles {
    TiltAngles {
        psi: fused_yaw(q),
        gamma: atan2_safe(q.w * q.y - q.x * q.z, q.w * q.x + q.y * q.z),
        alpha: clamp_unit(2.0 * (q.w * q.w + q.z * q.z) - 1.0).acos(),
    }
}

pub fn fused_to_quat(f: &FusedAngles) -> Result<Quat> {
    let f = f.validated()?;
    let (cos_alpha, sin_alpha) = tilt_cos_sin(f.theta, f.phi, f.hemi);
    let hpsi = 0.5 * f.psi;
    let (sp, cp) = hpsi.sin_cos();
    let (st, sf) = (f.theta.sin(), f.phi.sin());
    let q = match f.hemi {
        Hemisphere::Positive => {
            let c = 1.0 + cos_alpha;
            Quat::new(cp * c, sf * cp - st * sp, sf * sp + st * cp, sp * c)
                .scale(1.0 / (2.0 * c).sqrt())
        }
        Hemisphere::Negative => {
            let c = 1.0 - cos_alpha;
            let gamma = atan2_safe(st, sf);
            let (sb, cb) = (hpsi + gamma).sin_cos();
            Quat::new(sin_alpha * cp, cb * c, sb * c, sin_alpha * sp).scale(1.0 / (2.0 * c).sqrt())
        }
    };
    Ok(q)
}

pub fn quat_to_fused(q: Quat) -> FusedAngles {
    let (theta, phi) = pitch_roll_from_zvec(
        2.0 * (q.x * q.z - q.w * q.y),
        2.0 * (q.w * q.x + q.y * q.z),
        q.w * q.w - q.x * q.x - q.y * q.y + q.z * q.z,
    );
    FusedAngles {
        psi: fused_yaw(q),
        theta,
        phi,
        hemi: Hemisphere::of(q.w * q.w + q.z * q.z - 0.5),
    }
}

pub fn quat_to_rotmat(q: Quat) -> RotMat {
    let Quat { w, x, y, z } = q;
    let (xx, yy, zz) = (x * x, y * y, z * z);
    let (xy, xz, yz) = (x * y, x * z, y * z);
    let (wx, wy, wz) = (w * x, w * y, w * z);
    RotMat::from_rows([
        [1.0 - 2.0 * (yy + zz), 2.0 * (xy - wz), 2.0 * (xz + wy)],
        [2.0 * (xy + wz), 1.0 - 2.0 * (xx + zz), 2.0 * (yz - wx)],
        [2.0 * (xz - wy), 2.0 * (yz + wx), 1.0 - 2.0 * (xx + yy)],
    ])
}

/// Matrix to quaternion, branching on the largest of the trace and the
/// diagonal entries. The result has a non-negative scalar part.
pub fn rotmat_to_quat(r: &RotMat) -> Quat {
    let m = &r.m;
    let (r11, r22, r33) = (m[0][0], m[1][1], m[2][2]);
    let tr = r11 + r22 + r33;
    let q = if tr >= r11 && tr >= r22 && tr >= r33 {
        let s = 2.0 * (1.0 + tr).sqrt();
        Quat::new(
            0.25 * s,
            (m[2][1] - m[1][2]) / s,
            (m[0][2] - m[2][0]) / s,
            (m[1][0] - m[0][1]) / s,
        )
    } else if r11 >= r22 && r11 >= r33 {
        let s = 2.0 * (1.0 + r11 - r22 - r33).sqrt();
        Quat::new(
            (m[2][1] - m[1][2]) / s,
            0.25 * s,
            (m[0][1] + m[1][0]) / s,
            (m[0][2] + m[2][0]) / s,
        )
    } else if r22 >= r33 {
        let s = 2.0 * (1.0 - r11 + r22 - r33).sqrt();
        Quat::new(
            (m[0][2] - m[2][0]) / s,
            (m[0][1] + m[1][0]) / s,
            0.25 * s,
            (m[1][2] + m[2][1]) / s,
        )
    } else {
        let s = 2.0 * (1.0 - r11 - r22 + r33).sqrt();
        Quat::new(
            (m[1][0] - m[0][1]) / s,
            (m[0][2] + m[2][0]) / s,
            (m[1][2] + m[2][1]) / s,
            0.25 * s,
        )
    };
    let q = q.normalized();
    if q.w < 0.0 {
        -q
    } else {
        q
    }
}
