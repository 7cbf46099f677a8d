use thiserror::Error;

/// Errors raised when a value falls outside the domain of a rotation
/// representation or an operation is evaluated at one of its singularities.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RotError {
    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },

    #[error("quaternion not unit norm (norm = {norm})")]
    NotUnitQuat { norm: f64 },

    #[error(
        "matrix not in SO(3) (orthonormality residual = {orthonormality:e}, det deviation = {det_deviation:e})"
    )]
    NotRotation {
        orthonormality: f64,
        det_deviation: f64,
    },

    #[error("sine sum criterion violated (sin^2 theta + sin^2 phi = {sine_sum})")]
    SineSum { sine_sum: f64 },

    #[error("{what} = {value} outside [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("fused yaw singular (alpha = pi)")]
    FusedYawSingular,

    #[error("degenerate vector (norm = {norm:e})")]
    DegenerateVector { norm: f64 },

    #[error("axis not unit norm (norm = {norm})")]
    NotUnitAxis { norm: f64 },

    #[error("hemisphere fused interpolation requires both rotations in the positive hemisphere")]
    NegativeHemisphere,
}

pub type Result<T, E = RotError> = std::result::Result<T, E>;
