use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::convert::Repr;

#[derive(Debug, Parser)]
#[command(
    name = "fusedrot",
    version,
    about = "Convert and operate on 3D rotations in fused angles, tilt angles and other representations",
    allow_negative_numbers = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert a rotation between representations.
    Convert(ConvertArgs),
    /// Inverse rotation.
    Inverse(UnaryArgs),
    /// Composition `a * b` (apply b, then a).
    Compose(BinaryArgs),
    /// Remove the fused yaw component, leaving the pure tilt rotation.
    RemoveYaw(UnaryArgs),
    /// Distance between two rotations.
    Metric(MetricArgs),
    /// Spherical linear interpolation between two rotations.
    Slerp(SlerpArgs),
    /// Emit CSV samples of the locus of the global z-axis in body coordinates
    /// for a constant fused pitch, fused roll or hemisphere.
    Loci(LociArgs),
    /// Compare fused yaw and ZYX Euler yaw under a re-choice of the global
    /// x/y axes (conjugation by a z-rotation).
    DemoYawCompare(DemoArgs),
    /// Uniformly distributed random rotations.
    Random(RandomArgs),
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Output {
    /// Angles in degrees, for both input and output.
    #[arg(long)]
    pub deg: bool,
    /// Emit one JSON object per record.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(long)]
    pub from: Repr,
    #[arg(long)]
    pub to: Repr,
    /// Comma-separated values; records are read from stdin, one per line, if omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub value: Option<String>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct UnaryArgs {
    #[arg(long, default_value = "quat")]
    pub repr: Repr,
    /// Output representation (defaults to the input one).
    #[arg(long)]
    pub to: Option<Repr>,
    #[arg(long, allow_hyphen_values = true)]
    pub value: Option<String>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct BinaryArgs {
    #[arg(long, default_value = "quat")]
    pub repr: Repr,
    #[arg(long)]
    pub to: Option<Repr>,
    /// Two operands, as `--value A --value B`. Without them, stdin lines hold `A;B`.
    #[arg(long, allow_hyphen_values = true, num_args = 1)]
    pub value: Vec<String>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricName {
    #[value(name = "dR")]
    DR,
    #[value(name = "dL")]
    DL,
}

#[derive(Debug, Args)]
pub struct MetricArgs {
    #[arg(long, value_enum, default_value = "dR")]
    pub kind: MetricName,
    #[command(flatten)]
    pub ops: BinaryArgs,
}

#[derive(Debug, Args)]
pub struct SlerpArgs {
    /// Interpolation parameter in [0, 1].
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    #[command(flatten)]
    pub ops: BinaryArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("locus").required(true).args(["pitch", "roll", "hemi"])))]
pub struct LociArgs {
    /// Constant fused pitch.
    #[arg(long, allow_negative_numbers = true)]
    pub pitch: Option<f64>,
    /// Constant fused roll.
    #[arg(long, allow_negative_numbers = true)]
    pub roll: Option<f64>,
    /// Constant hemisphere, 1 or -1.
    #[arg(long, allow_negative_numbers = true)]
    pub hemi: Option<i32>,
    #[arg(long, default_value_t = 36)]
    pub samples: usize,
    #[arg(long)]
    pub deg: bool,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random rotations.
    #[arg(short = 'n', long = "count", default_value_t = 20)]
    pub count: usize,
    /// Number of axis re-choice angles, evenly spaced over a full turn.
    #[arg(long, default_value_t = 36)]
    pub betas: usize,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(short = 'n', long = "count", default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "quat")]
    pub repr: Repr,
    #[command(flatten)]
    pub out: Output,
}
