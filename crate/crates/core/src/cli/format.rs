use serde::{Deserialize, Serialize};

use crate::convert::{Repr, Rotation};

/// Formats `x` like C's `%.17g`: 17 significant digits, trailing zeros
/// dropped, exponent notation outside `1e-4 <= |x| < 1e17`.
pub fn fmt_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let prec = (16 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.prec$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    Rad,
    Deg,
}

/// One rotation as exchanged on the command line and in JSON mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RotationRecord {
    pub repr: String,
    pub units: Units,
    pub values: Vec<f64>,
}

impl RotationRecord {
    pub fn from_rotation(r: &Rotation, units: Units) -> Self {
        let repr = r.repr();
        let mut values = r.values();
        if units == Units::Deg {
            for &i in repr.angle_slots() {
                values[i] = values[i].to_degrees();
            }
        }
        RotationRecord {
            repr: repr.token().to_string(),
            units,
            values,
        }
    }

    /// Values converted to radians, in the layout of `repr`.
    pub fn radians(&self, repr: Repr) -> Vec<f64> {
        let mut v = self.values.clone();
        if self.units == Units::Deg {
            for &i in repr.angle_slots() {
                if let Some(x) = v.get_mut(i) {
                    *x = x.to_radians();
                }
            }
        }
        v
    }

    pub fn plain(&self) -> String {
        self.values
            .iter()
            .map(|v| fmt_g17(*v))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("record serialises")
    }
}
