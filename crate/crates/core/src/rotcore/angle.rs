use std::f64::consts::{PI, TAU};

use crate::error::{Result, RotError};

/// Wraps an angle to the half-open interval `(-pi, pi]`.
///
/// Inputs already in range are returned bit-for-bit, so `wrap` is exactly
/// idempotent. Non-finite input propagates as NaN; use [`try_wrap`] to reject it.
pub fn wrap(angle: f64) -> f64 {
    if angle > -PI && angle <= PI {
        return angle;
    }
    if !angle.is_finite() {
        return f64::NAN;
    }
    let mut r = angle.rem_euclid(TAU);
    if r > PI {
        r -= TAU;
    }
    if r <= -PI {
        r += TAU;
    }
    r
}

pub fn try_wrap(angle: f64) -> Result<f64> {
    if !angle.is_finite() {
        return Err(RotError::NonFinite { what: "angle" });
    }
    Ok(wrap(angle))
}

/// Modified sign: `+1` for `x >= 0` (including zero), `-1` otherwise.
pub fn msign(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// `atan2` with `atan2(0, 0) = 0` and the result mapped to `(-pi, pi]`.
pub fn atan2_safe(y: f64, x: f64) -> f64 {
    if y == 0.0 && x == 0.0 {
        return 0.0;
    }
    let a = y.atan2(x);
    if a <= -PI {
        PI
    } else {
        a
    }
}

/// Clamp to `[-1, 1]` ahead of `asin`/`acos`.
#[inline]
pub fn clamp_unit(x: f64) -> f64 {
    x.clamp(-1.0, 1.0)
}
