//! Rotation-level operations expressed in fused and tilt parameters.
//!
//! Composition and slerp go through the quaternion hub; everything else is
//! evaluated directly on the parameters.

use crate::convert::{fused_to_tilt, fused_yaw, Rotation};
use crate::error::{Result, RotError};
use crate::rotcore::{clamp_unit, wrap, FusedAngles, Hemisphere, Quat, TiltAngles, SINE_SUM_TOL};
use std::f64::consts::{FRAC_PI_2, PI};

/// `w^2 + z^2` below this makes fused yaw undefined (`alpha = pi`).
pub const YAW_SINGULAR_NORM_SQ: f64 = 1e-24;

/// `sqrt(w^2 + z^2)` below this is reported as close to the yaw singularity,
/// where fused yaw is arbitrarily sensitive.
pub const YAW_WARNING_NORM: f64 = 1e-6;

/// Tolerance used by [`standard_form`] to detect the hemisphere boundary and
/// the `alpha = pi` set.
pub const STANDARD_FORM_TOL: f64 = 1e-12;

/// Below this `|q1 . q2|`, the two rotations are a half-turn apart and the
/// slerp path is not unique.
pub const ANTIPODAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FusedYaw {
    pub value: f64,
    pub singular: bool,
}

/// Fused yaw `wrap(2 atan2(z, w))`, flagged singular when `w = z = 0`
/// (to within `w^2 + z^2 < 1e-24`); the value is then 0.
pub fn quat_fused_yaw(q: Quat) -> FusedYaw {
    let singular = q.w * q.w + q.z * q.z < YAW_SINGULAR_NORM_SQ;
    FusedYaw {
        value: if singular { 0.0 } else { fused_yaw(q) },
        singular,
    }
}

fn yaw_norm(q: Quat) -> Result<f64> {
    let n2 = q.w * q.w + q.z * q.z;
    if n2 < YAW_SINGULAR_NORM_SQ {
        return Err(RotError::FusedYawSingular);
    }
    Ok(n2.sqrt())
}

/// Pure z-rotation carrying the fused yaw of `q`.
pub fn yaw_quat(q: Quat) -> Result<Quat> {
    let n = yaw_norm(q)?;
    Ok(Quat::new(q.w / n, 0.0, 0.0, q.z / n))
}

/// Tilt component of `q`, i.e. `conj(yaw_quat(q)) * q`. The result has zero
/// z-component and the same fused pitch, roll and hemisphere as `q`.
pub fn remove_yaw(q: Quat) -> Result<Quat> {
    let n = yaw_norm(q)?;
    let Quat { w, x, y, z } = q;
    Ok(Quat::new(
        (w * w + z * z) / n,
        (w * x + z * y) / n,
        (w * y - z * x) / n,
        0.0,
    ))
}

pub fn tilt_inverse(t: &TiltAngles) -> TiltAngles {
    TiltAngles {
        psi: wrap(-t.psi),
        gamma: wrap(t.psi + t.gamma - PI),
        alpha: t.alpha,
    }
}

pub fn fused_inverse(f: &FusedAngles) -> Result<FusedAngles> {
    let t = fused_to_tilt(f)?;
    let sa = t.alpha.sin();
    let (sb, cb) = (t.psi + t.gamma).sin_cos();
    let (theta, phi) =
        crate::rotcore::project_to_domain(clamp_unit(-sa * sb).asin(), clamp_unit(-sa * cb).asin());
    Ok(FusedAngles {
        psi: wrap(-f.psi),
        theta,
        phi,
        hemi: f.hemi,
    })
}

fn standard_form_tol(f: &FusedAngles, tol: f64) -> FusedAngles {
    let mut out = FusedAngles {
        psi: wrap(f.psi),
        ..*f
    };
    if (out.theta.abs() + out.phi.abs() - FRAC_PI_2).abs() <= tol {
        out.hemi = Hemisphere::Positive;
    }
    if out.hemi == Hemisphere::Negative && out.theta.abs() <= tol && out.phi.abs() <= tol {
        out.psi = 0.0;
    }
    out
}

/// Canonical representative: `h = 1` on the `|theta| + |phi| = pi/2`
/// boundary, and `psi = 0` for `alpha = pi` rotations.
pub fn standard_form(f: &FusedAngles) -> FusedAngles {
    standard_form_tol(f, STANDARD_FORM_TOL)
}

/// Equality as rotations: standard forms agree componentwise within `tol`,
/// with yaw compared modulo `2 pi`.
pub fn fused_equal(a: &FusedAngles, b: &FusedAngles, tol: f64) -> bool {
    let t = tol.max(STANDARD_FORM_TOL);
    let (a, b) = (standard_form_tol(a, t), standard_form_tol(b, t));
    a.hemi == b.hemi
        && wrap(a.psi - b.psi).abs() <= tol
        && (a.theta - b.theta).abs() <= tol
        && (a.phi - b.phi).abs() <= tol
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityKind {
    None,
    /// `alpha = pi`: fused yaw undefined. The tilt axis angle is undefined too.
    FusedYawSingular,
    /// `alpha = 0`: tilt axis angle undefined, fused yaw well defined.
    TiltAxisSingular,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularityClass {
    pub kind: SingularityKind,
    pub alpha: f64,
    /// `sqrt(w^2 + z^2) < 1e-6`: close enough to `alpha = pi` that fused yaw
    /// is numerically unreliable, even if not classified singular.
    pub near_yaw_singularity: bool,
}

impl SingularityClass {
    pub fn is_fused_yaw_singular(&self) -> bool {
        self.kind == SingularityKind::FusedYawSingular
    }

    pub fn is_tilt_axis_singular(&self) -> bool {
        self.kind != SingularityKind::None
    }
}

pub fn classify_singularity(q: Quat, tol: f64) -> SingularityClass {
    let a = q.w * q.w + q.z * q.z;
    let b = q.x * q.x + q.y * q.y;
    let sin_alpha = 2.0 * (a * b).sqrt();
    let kind = if a < tol * tol {
        SingularityKind::FusedYawSingular
    } else if sin_alpha < tol {
        SingularityKind::TiltAxisSingular
    } else {
        SingularityKind::None
    };
    SingularityClass {
        kind,
        alpha: 2.0 * b.sqrt().atan2(a.sqrt()),
        near_yaw_singularity: a.sqrt() < YAW_WARNING_NORM,
    }
}

/// Dot product of the quaternions of two tilt angles rotations, evaluated
/// from the parameters.
pub fn quat_dot_tilt(t1: &TiltAngles, t2: &TiltAngles) -> f64 {
    let dpsi = 0.5 * (t1.psi - t2.psi);
    let dgamma = t1.gamma - t2.gamma;
    let (s1, c1) = (0.5 * t1.alpha).sin_cos();
    let (s2, c2) = (0.5 * t2.alpha).sin_cos();
    c1 * c2 * dpsi.cos() + s1 * s2 * (dpsi + dgamma).cos()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    /// Geodesic angle `2 acos |q1 . q2|`, in radians.
    Riemannian,
    /// `1 - |q1 . q2|`, dimensionless in `[0, 1]`.
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricValue {
    pub kind: MetricKind,
    pub value: f64,
}

/// `2 acos |dot|` for a precomputed quaternion dot product.
pub fn dr_from_dot(dot: f64) -> f64 {
    2.0 * clamp_unit(dot.abs()).acos()
}

/// Riemannian distance: the angle of the relative rotation `conj(a) * b`.
///
/// Equal to `2 acos |a . b|`, but evaluated as `2 atan2(|v|, |w|)` of the
/// relative quaternion so that nearby rotations keep full precision.
pub fn metric_dr(a: Quat, b: Quat) -> f64 {
    let r = a.conj().hamilton(b);
    2.0 * r.vec().norm().atan2(r.w.abs())
}

pub fn metric_dl(a: Quat, b: Quat) -> f64 {
    (1.0 - a.dot(b).abs()).clamp(0.0, 1.0)
}

pub fn metric(kind: MetricKind, a: Quat, b: Quat) -> MetricValue {
    let value = match kind {
        MetricKind::Riemannian => metric_dr(a, b),
        MetricKind::Linear => metric_dl(a, b),
    };
    MetricValue { kind, value }
}

/// Metric between rotations in any representation.
pub fn metric_any(kind: MetricKind, a: &Rotation, b: &Rotation) -> Result<MetricValue> {
    Ok(metric(kind, a.to_quat()?, b.to_quat()?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slerp {
    pub quat: Quat,
    /// The endpoints are a half-turn apart, so the geodesic is not unique.
    /// The relative rotation axis was oriented with its leading significant
    /// component positive.
    pub antipodal: bool,
}

/// Constant-speed geodesic interpolation from `a` (`t = 0`) to `b` (`t = 1`)
/// along the shorter path. `t` outside `[0, 1]` extrapolates.
pub fn slerp(a: Quat, b: Quat, t: f64) -> Quat {
    slerp_flagged(a, b, t).quat
}

pub fn slerp_flagged(a: Quat, b: Quat, t: f64) -> Slerp {
    let mut r = a.conj().hamilton(b);
    let antipodal = r.w.abs() < ANTIPODAL_TOL;
    if antipodal {
        let lead = [r.x, r.y, r.z]
            .into_iter()
            .find(|c| c.abs() > ANTIPODAL_TOL)
            .unwrap_or(0.0);
        if lead < 0.0 {
            r = -r;
        }
    } else if r.w < 0.0 {
        r = -r;
    }
    let v = r.vec();
    let s = v.norm();
    if s == 0.0 {
        return Slerp { quat: a, antipodal };
    }
    let half = s.atan2(r.w);
    let axis = v * (1.0 / s);
    let (sh, ch) = (t * half).sin_cos();
    let step = Quat::new(ch, axis.x * sh, axis.y * sh, axis.z * sh);
    Slerp {
        quat: a * step,
        antipodal,
    }
}

/// `a` after `b`: the rotation whose matrix is `R_a R_b`.
pub fn compose(a: Quat, b: Quat) -> Quat {
    a * b
}

pub fn compose_any(a: &Rotation, b: &Rotation) -> Result<Quat> {
    Ok(compose(a.to_quat()?, b.to_quat()?))
}

/// Componentwise interpolation of fused angles, yaw along the shorter arc.
/// Only offered for two rotations in the positive hemisphere.
pub fn lerp_fused_positive(a: &FusedAngles, b: &FusedAngles, t: f64) -> Result<FusedAngles> {
    let (a, b) = (a.validated()?, b.validated()?);
    if a.hemi != Hemisphere::Positive || b.hemi != Hemisphere::Positive {
        return Err(RotError::NegativeHemisphere);
    }
    let out = FusedAngles {
        psi: wrap(a.psi + t * wrap(b.psi - a.psi)),
        theta: a.theta + t * (b.theta - a.theta),
        phi: a.phi + t * (b.phi - a.phi),
        hemi: Hemisphere::Positive,
    };
    // Convexity of the domain keeps t in [0, 1] inside; extrapolation may not.
    if out.sine_sum() > 1.0 + SINE_SUM_TOL {
        return Err(RotError::SineSum {
            sine_sum: out.sine_sum(),
        });
    }
    out.validated()
}
