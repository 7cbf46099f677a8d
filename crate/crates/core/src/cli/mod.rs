//! The `fusedrot` command-line tool.
//!
//! Exit codes: 0 on success, 2 when input cannot be parsed, 3 when parsed
//! input violates a rotation domain (sine sum criterion, non-unit
//! quaternion, non-SO(3) matrix, fused yaw singularity, ...).

mod args;
mod format;

pub use args::Cli;
pub use format::{fmt_g17, RotationRecord, Units};

use std::f64::consts::{FRAC_PI_2, TAU};
use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::error::ErrorKind;
use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::convert::{quat_to_euler_zyx, tilt_to_quat, Repr, Rotation};
use crate::error::RotError;
use crate::fusedops::{
    compose, fused_inverse, metric, quat_fused_yaw, remove_yaw, slerp_flagged, tilt_inverse,
    MetricKind,
};
use crate::rotcore::{random_rotation, wrap, Hemisphere, Quat, TiltAngles, Vec3};
use args::{
    BinaryArgs, Command, ConvertArgs, DemoArgs, LociArgs, MetricArgs, MetricName, Output,
    RandomArgs, SlerpArgs, UnaryArgs,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug)]
enum CliError {
    Parse(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<RotError> for CliError {
    fn from(e: RotError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Domain(format!("i/o error: {e}"))
    }
}

type CliResult<T = ()> = std::result::Result<T, CliError>;

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_PARSE
                }
            };
        }
    };
    let mut ctx = Ctx {
        stdin,
        out: stdout,
        err: stderr,
        worst: EXIT_OK,
    };
    let result = match cli.command {
        Command::Convert(a) => ctx.convert(a),
        Command::Inverse(a) => ctx.inverse(a),
        Command::RemoveYaw(a) => ctx.remove_yaw(a),
        Command::Compose(a) => ctx.compose(a),
        Command::Metric(a) => ctx.metric(a),
        Command::Slerp(a) => ctx.slerp(a),
        Command::Loci(a) => ctx.loci(a),
        Command::DemoYawCompare(a) => ctx.demo(a),
        Command::Random(a) => ctx.random(a),
    };
    if let Err(e) = result {
        ctx.report(None, &e);
    }
    let _ = ctx.out.flush();
    ctx.worst
}

struct Ctx<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    worst: i32,
}

fn units(out: &Output) -> Units {
    if out.deg {
        Units::Deg
    } else {
        Units::Rad
    }
}

fn parse_scalars(text: &str) -> CliResult<Vec<f64>> {
    let fields: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if fields.is_empty() {
        return Err(CliError::Parse("empty value list".into()));
    }
    fields
        .into_iter()
        .map(|f| match f.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(CliError::Parse(format!("invalid number '{f}'"))),
        })
        .collect()
}

/// Parses one record (a value list, or a JSON record object) and checks
/// that it is a valid rotation.
fn parse_rotation(text: &str, repr: Repr, units: Units) -> CliResult<Rotation> {
    let text = text.trim();
    let record = if text.starts_with('{') {
        serde_json::from_str::<RotationRecord>(text)
            .map_err(|e| CliError::Parse(format!("invalid JSON record: {e}")))?
    } else {
        RotationRecord {
            repr: repr.token().to_string(),
            units,
            values: parse_scalars(text)?,
        }
    };
    if record.values.iter().any(|v| !v.is_finite()) {
        return Err(CliError::Parse("non-finite value".into()));
    }
    let repr: Repr = record
        .repr
        .parse()
        .map_err(|e: crate::convert::UnknownRepr| CliError::Parse(e.to_string()))?;
    let mut values = record.radians(repr);
    if repr == Repr::AxisAngle && values.len() == 4 {
        // Accept typed-in axes that are unit to the same tolerance as quaternions.
        let n = Vec3::new(values[0], values[1], values[2]).norm();
        if (n - 1.0).abs() <= crate::rotcore::UNIT_TOL {
            values[..3].iter_mut().for_each(|v| *v /= n);
        }
    }
    let rot = Rotation::from_values(repr, &values).map_err(|e| CliError::Parse(e.to_string()))?;
    rot.to_quat()?;
    Ok(rot)
}

impl Ctx<'_> {
    fn report(&mut self, line: Option<usize>, e: &CliError) {
        match line {
            Some(n) => {
                let _ = writeln!(self.err, "fusedrot: line {n}: {}", e.message());
            }
            None => {
                let _ = writeln!(self.err, "fusedrot: {}", e.message());
            }
        }
        self.worst = self.worst.max(e.code());
    }

    fn emit(&mut self, rot: &Rotation, out: &Output) -> CliResult {
        let rec = RotationRecord::from_rotation(rot, units(out));
        if out.json {
            writeln!(self.out, "{}", rec.json())?;
        } else {
            writeln!(self.out, "{}", rec.plain())?;
        }
        Ok(())
    }

    fn emit_scalar(&mut self, name: &str, value: f64, unit: &str, out: &Output) -> CliResult {
        if out.json {
            let obj = serde_json::json!({ "metric": name, "units": unit, "value": value });
            writeln!(self.out, "{obj}")?;
        } else {
            writeln!(self.out, "{}", fmt_g17(value))?;
        }
        Ok(())
    }

    /// Input records: the `--value` argument(s), or non-empty stdin lines.
    fn inputs(&mut self, value: Option<&str>) -> CliResult<Vec<(Option<usize>, String)>> {
        if let Some(v) = value {
            return Ok(vec![(None, v.to_string())]);
        }
        let mut lines = Vec::new();
        for (i, line) in self.stdin.lines().enumerate() {
            let line = line?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            lines.push((Some(i + 1), t.to_string()));
        }
        Ok(lines)
    }

    /// Applies `f` to each input record, reporting per-record failures and
    /// continuing with the rest.
    fn for_each_record<F>(&mut self, value: Option<&str>, mut f: F) -> CliResult
    where
        F: FnMut(&mut Self, &str) -> CliResult,
    {
        for (line, text) in self.inputs(value)? {
            if let Err(e) = f(self, &text) {
                self.report(line, &e);
            }
        }
        Ok(())
    }

    fn convert(&mut self, a: ConvertArgs) -> CliResult {
        let u = units(&a.out);
        self.for_each_record(a.value.as_deref(), |ctx, text| {
            let rot = parse_rotation(text, a.from, u)?;
            let out = rot.convert(a.to)?;
            ctx.emit(&out, &a.out)
        })
    }

    fn inverse(&mut self, a: UnaryArgs) -> CliResult {
        let u = units(&a.out);
        let to = a.to.unwrap_or(a.repr);
        self.for_each_record(a.value.as_deref(), |ctx, text| {
            let rot = parse_rotation(text, a.repr, u)?;
            let inv = match (rot, to) {
                (Rotation::Fused(f), Repr::Fused) => Rotation::Fused(fused_inverse(&f)?),
                (Rotation::Tilt(t), Repr::Tilt) => Rotation::Tilt(tilt_inverse(&t)),
                _ => Rotation::from_quat(rot.to_quat()?.conj(), to),
            };
            ctx.emit(&inv, &a.out)
        })
    }

    fn remove_yaw(&mut self, a: UnaryArgs) -> CliResult {
        let u = units(&a.out);
        let to = a.to.unwrap_or(a.repr);
        self.for_each_record(a.value.as_deref(), |ctx, text| {
            let q = parse_rotation(text, a.repr, u)?.to_quat()?;
            let tilt = remove_yaw(q)?;
            ctx.emit(&Rotation::from_quat(tilt, to), &a.out)
        })
    }

    /// Operand pairs: two `--value`s, or stdin lines of the form `A;B`.
    fn pairs(&mut self, b: &BinaryArgs) -> CliResult<Vec<(Option<usize>, String, String)>> {
        match b.value.len() {
            2 => Ok(vec![(None, b.value[0].clone(), b.value[1].clone())]),
            0 => {
                let mut out = Vec::new();
                for (line, text) in self.inputs(None)? {
                    match text.split_once(';') {
                        Some((x, y)) => out.push((line, x.to_string(), y.to_string())),
                        None => self.report(
                            line,
                            &CliError::Parse("expected two records separated by ';'".into()),
                        ),
                    }
                }
                Ok(out)
            }
            n => Err(CliError::Parse(format!(
                "expected two --value operands, got {n}"
            ))),
        }
    }

    fn for_each_pair<F>(&mut self, b: &BinaryArgs, mut f: F) -> CliResult
    where
        F: FnMut(&mut Self, Quat, Quat) -> CliResult,
    {
        let u = units(&b.out);
        for (line, x, y) in self.pairs(b)? {
            let r = (|| {
                let qa = parse_rotation(&x, b.repr, u)?.to_quat()?;
                let qb = parse_rotation(&y, b.repr, u)?.to_quat()?;
                f(self, qa, qb)
            })();
            if let Err(e) = r {
                self.report(line, &e);
            }
        }
        Ok(())
    }

    fn compose(&mut self, b: BinaryArgs) -> CliResult {
        let to = b.to.unwrap_or(b.repr);
        let out = b.out;
        self.for_each_pair(&b, |ctx, qa, qb| {
            ctx.emit(&Rotation::from_quat(compose(qa, qb), to), &out)
        })
    }

    fn metric(&mut self, m: MetricArgs) -> CliResult {
        let out = m.ops.out;
        let kind = m.kind;
        self.for_each_pair(&m.ops, |ctx, qa, qb| match kind {
            MetricName::DR => {
                let v = metric(MetricKind::Riemannian, qa, qb).value;
                if out.deg {
                    ctx.emit_scalar("dR", v.to_degrees(), "deg", &out)
                } else {
                    ctx.emit_scalar("dR", v, "rad", &out)
                }
            }
            MetricName::DL => {
                let v = metric(MetricKind::Linear, qa, qb).value;
                ctx.emit_scalar("dL", v, "1", &out)
            }
        })
    }

    fn slerp(&mut self, s: SlerpArgs) -> CliResult {
        if !(0.0..=1.0).contains(&s.t) {
            return Err(CliError::Domain(format!(
                "slerp parameter t = {} outside [0, 1]",
                s.t
            )));
        }
        let to = s.ops.to.unwrap_or(s.ops.repr);
        let out = s.ops.out;
        let t = s.t;
        self.for_each_pair(&s.ops, |ctx, qa, qb| {
            let r = slerp_flagged(qa, qb, t);
            if r.antipodal {
                writeln!(
                    ctx.err,
                    "fusedrot: warning: endpoints are a half-turn apart; geodesic not unique, axis convention applied"
                )?;
            }
            ctx.emit(&Rotation::from_quat(r.quat, to), &out)
        })
    }

    fn loci(&mut self, a: LociArgs) -> CliResult {
        if a.samples < 3 {
            return Err(CliError::Domain(format!(
                "--samples must be at least 3, got {}",
                a.samples
            )));
        }
        let n = a.samples;
        let to_rad = |v: f64| if a.deg { v.to_radians() } else { v };
        let check = |what: &'static str, v: f64| -> CliResult<f64> {
            if !v.is_finite() {
                return Err(CliError::Parse(format!("invalid {what}")));
            }
            if v.abs() > FRAC_PI_2 {
                return Err(RotError::OutOfRange {
                    what,
                    value: v,
                    min: -FRAC_PI_2,
                    max: FRAC_PI_2,
                }
                .into());
            }
            Ok(v)
        };
        let ring = |k: usize, count: usize| (TAU * k as f64 / count as f64).sin_cos();
        let rows: Vec<Vec3> = if let Some(p) = a.pitch {
            let theta = check("fused pitch", to_rad(p))?;
            let (st, ct) = theta.sin_cos();
            (0..n)
                .map(|k| {
                    let (s, c) = ring(k, n);
                    Vec3::new(-st, ct * c, ct * s)
                })
                .collect()
        } else if let Some(r) = a.roll {
            let phi = check("fused roll", to_rad(r))?;
            let (sp, cp) = phi.sin_cos();
            (0..n)
                .map(|k| {
                    let (s, c) = ring(k, n);
                    Vec3::new(cp * c, sp, cp * s)
                })
                .collect()
        } else {
            let h = a.hemi.expect("clap enforces one locus argument");
            let hemi = Hemisphere::from_token(h)
                .ok_or_else(|| CliError::Parse(format!("hemisphere must be 1 or -1, got {h}")))?;
            // Boundary circle of the hemisphere, then its pole.
            let mut rows: Vec<Vec3> = (0..n - 1)
                .map(|k| {
                    let (s, c) = ring(k, n - 1);
                    Vec3::new(c, s, 0.0)
                })
                .collect();
            rows.push(Vec3::new(0.0, 0.0, hemi.sign()));
            rows
        };
        writeln!(self.out, "x,y,z")?;
        for v in rows {
            writeln!(
                self.out,
                "{},{},{}",
                fmt_g17(v.x),
                fmt_g17(v.y),
                fmt_g17(v.z)
            )?;
        }
        Ok(())
    }

    fn demo(&mut self, a: DemoArgs) -> CliResult {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        let betas: Vec<f64> = (0..a.betas.max(1))
            .map(|k| TAU * k as f64 / a.betas.max(1) as f64)
            .collect();

        let reference = tilt_to_quat(&TiltAngles::new(0.0, 45f64.to_radians(), FRAC_PI_2));
        writeln!(
            self.out,
            "# reference tilt (psi, gamma, alpha) = (0, 45deg, 90deg): fused yaw = {}, ZYX Euler yaw = {}",
            fmt_g17(quat_fused_yaw(reference).value),
            fmt_g17(quat_to_euler_zyx(reference).yaw)
        )?;
        writeln!(
            self.out,
            "# seed = {}, rotations = {}, axis re-choice angles = {}",
            a.seed,
            a.count,
            betas.len()
        )?;
        writeln!(
            self.out,
            "sample fused_yaw euler_yaw max_dev_fused max_dev_euler"
        )?;
        let (mut worst_f, mut worst_e) = (0.0_f64, 0.0_f64);
        for i in 0..a.count {
            let q = random_rotation(&mut rng);
            let (dev_f, dev_e) = yaw_conjugation_deviation(q, &betas);
            worst_f = worst_f.max(dev_f);
            worst_e = worst_e.max(dev_e);
            writeln!(
                self.out,
                "{i} {} {} {} {}",
                fmt_g17(quat_fused_yaw(q).value),
                fmt_g17(quat_to_euler_zyx(q).yaw),
                fmt_g17(dev_f),
                fmt_g17(dev_e)
            )?;
        }
        writeln!(
            self.out,
            "max - - {} {}",
            fmt_g17(worst_f),
            fmt_g17(worst_e)
        )?;
        Ok(())
    }

    fn random(&mut self, a: RandomArgs) -> CliResult {
        if a.count == 0 {
            return Err(CliError::Domain("-n must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        for _ in 0..a.count {
            let q = random_rotation(&mut rng);
            self.emit(&Rotation::from_quat(q, a.repr), &a.out)?;
        }
        Ok(())
    }
}

/// Largest change of fused yaw and of ZYX Euler yaw when the global x/y axes
/// are re-chosen by each angle in `betas`, i.e. under `Rz(b) q Rz(-b)`.
pub fn yaw_conjugation_deviation(q: Quat, betas: &[f64]) -> (f64, f64) {
    let psi = quat_fused_yaw(q).value;
    let yaw = quat_to_euler_zyx(q).yaw;
    betas.iter().fold((0.0_f64, 0.0_f64), |(df, de), &b| {
        let rz = Quat::rot_z(b);
        let qc = rz * q * rz.conj();
        (
            df.max(wrap(quat_fused_yaw(qc).value - psi).abs()),
            de.max(wrap(quat_to_euler_zyx(qc).yaw - yaw).abs()),
        )
    })
}
