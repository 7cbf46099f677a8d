use std::f64::consts::{FRAC_PI_2, PI};

use super::angle::msign;
use crate::error::{Result, RotError};

/// Tolerance on `sin^2(theta) + sin^2(phi) - 1` (and on parameter ranges)
/// within which fused angles are accepted and projected back onto the domain.
pub const SINE_SUM_TOL: f64 = 1e-9;

/// Whether the body z-axis lies in the same z-hemisphere as the global z-axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hemisphere {
    Positive,
    Negative,
}

impl Hemisphere {
    /// Hemisphere of a z-component, using the modified sign (zero is positive).
    pub fn of(z: f64) -> Self {
        if msign(z) > 0.0 {
            Hemisphere::Positive
        } else {
            Hemisphere::Negative
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Hemisphere::Positive => 1.0,
            Hemisphere::Negative => -1.0,
        }
    }

    pub fn from_token(h: i32) -> Option<Self> {
        match h {
            1 => Some(Hemisphere::Positive),
            -1 => Some(Hemisphere::Negative),
            _ => None,
        }
    }

    pub fn token(self) -> i32 {
        match self {
            Hemisphere::Positive => 1,
            Hemisphere::Negative => -1,
        }
    }
}

/// Tilt angles `(psi, gamma, alpha)`: fused yaw, tilt axis angle, tilt angle.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TiltAngles {
    pub psi: f64,
    pub gamma: f64,
    pub alpha: f64,
}

impl TiltAngles {
    pub const IDENTITY: TiltAngles = TiltAngles::new(0.0, 0.0, 0.0);

    pub const fn new(psi: f64, gamma: f64, alpha: f64) -> Self {
        Self { psi, gamma, alpha }
    }

    /// Checks finiteness and `alpha` in `[0, pi]`; angles are not required to be wrapped.
    pub fn validate(&self) -> Result<()> {
        if !(self.psi.is_finite() && self.gamma.is_finite() && self.alpha.is_finite()) {
            return Err(RotError::NonFinite {
                what: "tilt angles",
            });
        }
        if self.alpha < -SINE_SUM_TOL || self.alpha > PI + SINE_SUM_TOL {
            return Err(RotError::OutOfRange {
                what: "tilt angle alpha",
                value: self.alpha,
                min: 0.0,
                max: PI,
            });
        }
        Ok(())
    }
}

/// Fused angles `(psi, theta, phi, h)`: fused yaw, fused pitch, fused roll, hemisphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FusedAngles {
    pub psi: f64,
    pub theta: f64,
    pub phi: f64,
    pub hemi: Hemisphere,
}

impl Default for FusedAngles {
    fn default() -> Self {
        FusedAngles::IDENTITY
    }
}

impl FusedAngles {
    pub const IDENTITY: FusedAngles = FusedAngles::new(0.0, 0.0, 0.0, Hemisphere::Positive);

    pub const fn new(psi: f64, theta: f64, phi: f64, hemi: Hemisphere) -> Self {
        Self {
            psi,
            theta,
            phi,
            hemi,
        }
    }

    pub fn sine_sum(&self) -> f64 {
        let (st, sp) = (self.theta.sin(), self.phi.sin());
        st * st + sp * sp
    }

    /// Checks the fused angles domain and returns the parameters projected onto it.
    ///
    /// Pitch and roll must lie in `[-pi/2, pi/2]` and satisfy the sine sum
    /// criterion, each up to [`SINE_SUM_TOL`]. Accepted inputs slightly outside
    /// are moved onto the `|theta| + |phi| = pi/2` boundary.
    pub fn validated(&self) -> Result<FusedAngles> {
        if !(self.psi.is_finite() && self.theta.is_finite() && self.phi.is_finite()) {
            return Err(RotError::NonFinite {
                what: "fused angles",
            });
        }
        for (what, v) in [
            ("fused pitch theta", self.theta),
            ("fused roll phi", self.phi),
        ] {
            if v.abs() > FRAC_PI_2 + SINE_SUM_TOL {
                return Err(RotError::OutOfRange {
                    what,
                    value: v,
                    min: -FRAC_PI_2,
                    max: FRAC_PI_2,
                });
            }
        }
        let sine_sum = self.sine_sum();
        if sine_sum > 1.0 + SINE_SUM_TOL {
            return Err(RotError::SineSum { sine_sum });
        }
        let (theta, phi) = project_to_domain(self.theta, self.phi);
        Ok(FusedAngles {
            theta,
            phi,
            ..*self
        })
    }
}

/// Clamps `(theta, phi)` into the diamond `|theta| + |phi| <= pi/2`, moving
/// points outside it perpendicularly onto the nearest edge.
pub(crate) fn project_to_domain(theta: f64, phi: f64) -> (f64, f64) {
    let theta = theta.clamp(-FRAC_PI_2, FRAC_PI_2);
    let phi = phi.clamp(-FRAC_PI_2, FRAC_PI_2);
    let excess = theta.abs() + phi.abs() - FRAC_PI_2;
    if excess <= 0.0 {
        return (theta, phi);
    }
    let half = 0.5 * excess;
    let (mut at, mut ap) = (theta.abs() - half, phi.abs() - half);
    if at < 0.0 {
        ap += at;
        at = 0.0;
    }
    if ap < 0.0 {
        at += ap;
        ap = 0.0;
    }
    (at.copysign(theta), ap.copysign(phi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hemisphere_tokens() {
        assert_eq!(Hemisphere::of(0.0), Hemisphere::Positive);
        assert_eq!(Hemisphere::of(-1e-300), Hemisphere::Negative);
        assert_eq!(Hemisphere::from_token(-1), Some(Hemisphere::Negative));
        assert_eq!(Hemisphere::from_token(0), None);
        assert_eq!(Hemisphere::Negative.sign(), -1.0);
    }

    #[test]
    fn sine_sum_violation_rejected() {
        let f = FusedAngles::new(
            0.0,
            60f64.to_radians(),
            60f64.to_radians(),
            Hemisphere::Positive,
        );
        assert!(matches!(f.validated(), Err(RotError::SineSum { .. })));
    }

    #[test]
    fn boundary_projection() {
        let q = std::f64::consts::FRAC_PI_4;
        let f = FusedAngles::new(0.0, q + 1e-11, -(q + 1e-11), Hemisphere::Negative);
        let g = f.validated().unwrap();
        assert!(g.theta.abs() + g.phi.abs() <= FRAC_PI_2);
        assert!(g.theta > 0.0 && g.phi < 0.0);
        let inside = FusedAngles::new(1.0, 0.2, -0.3, Hemisphere::Positive);
        assert_eq!(inside.validated().unwrap(), inside);
    }

    #[test]
    fn range_checks() {
        let f = FusedAngles::new(0.0, 1.6, 0.0, Hemisphere::Positive);
        assert!(matches!(f.validated(), Err(RotError::OutOfRange { .. })));
        assert!(TiltAngles::new(0.0, 0.0, -0.1).validate().is_err());
        assert!(TiltAngles::new(4.0, -7.0, PI).validate().is_ok());
    }
}
