use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "unsharp", version, about = "Qubit channels, unsharp measurements and their energy cost")]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect a catalog channel
    #[command(subcommand)]
    Channel(ChannelCmd),
    /// Evolve a projective measurement into a POVM
    #[command(subcommand)]
    Povm(PovmCmd),
    /// Scan sharpness in time and look for revivals
    #[command(subcommand)]
    Markov(MarkovCmd),
    /// Energy cost of a biased, unsharp measurement
    #[command(subcommand)]
    Energy(EnergyCmd),
    /// Run the seeded property checks
    Selftest(SelftestArgs),
}

#[derive(Subcommand, Debug)]
pub enum ChannelCmd {
    /// Kraus operators, Mueller matrix and CPTP diagnosis
    Show(ChannelArgs),
}

#[derive(Subcommand, Debug)]
pub enum PovmCmd {
    /// Bias and sharpness of the evolved effect E+
    Evolve(PovmArgs),
}

#[derive(Subcommand, Debug)]
pub enum MarkovCmd {
    /// Sharpness, bias and trace distance on a uniform time grid
    Scan(MarkovArgs),
}

#[derive(Subcommand, Debug)]
pub enum EnergyCmd {
    /// A single measurement model
    Point(EnergyPointArgs),
    /// The triangle x + lambda <= 1
    Sweep(EnergySweepArgs),
    /// Amplitude damping with memory at theta = 0
    AdTrajectory(AdTrajectoryArgs),
}

#[derive(Args, Debug)]
pub struct SpecArgs {
    /// Channel spec: a JSON file, or inline JSON starting with '{'
    #[arg(long)]
    pub spec: String,

    /// Use the Kraus operators exactly as tabulated, even when incomplete
    #[arg(long)]
    pub raw_kraus: bool,
}

#[derive(Args, Debug)]
pub struct ChannelArgs {
    #[command(flatten)]
    pub spec: SpecArgs,

    /// Dimensionless time (nu for rtn, tau for ad_memory)
    #[arg(long, default_value_t = 0.0)]
    pub time: f64,
}

#[derive(Args, Debug)]
pub struct Angles {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub theta: f64,

    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
}

#[derive(Args, Debug)]
pub struct PovmArgs {
    #[command(flatten)]
    pub spec: SpecArgs,

    #[command(flatten)]
    pub angles: Angles,

    #[arg(long, default_value_t = 0.0)]
    pub time: f64,

    /// Also report the tabulated closed form and its deviation
    #[arg(long)]
    pub table_check: bool,
}

#[derive(Args, Debug)]
pub struct MarkovArgs {
    #[command(flatten)]
    pub spec: SpecArgs,

    #[arg(long, default_value_t = FRAC_PI_2, allow_negative_numbers = true)]
    pub theta: f64,

    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,

    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,

    /// Number of grid points on [0, t-max]
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,

    /// Minimum cumulative rise counted as a revival
    #[arg(long, default_value_t = unsharp::markovianity::DEFAULT_REVIVAL_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct Thermal {
    /// System energy scale omega_S
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,

    /// Inverse temperature
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,

    /// Report the memory entropy in nats instead of bits
    #[arg(long)]
    pub nats: bool,
}

#[derive(Args, Debug)]
pub struct EnergyPointArgs {
    /// Bias
    #[arg(long)]
    pub x: f64,

    /// Sharpness
    #[arg(long)]
    pub lambda: f64,

    #[command(flatten)]
    pub angles: Angles,

    #[command(flatten)]
    pub thermal: Thermal,
}

#[derive(Args, Debug)]
pub struct EnergySweepArgs {
    /// Points per axis
    #[arg(long, default_value_t = 101)]
    pub grid: usize,

    #[command(flatten)]
    pub angles: Angles,

    #[command(flatten)]
    pub thermal: Thermal,
}

#[derive(Args, Debug)]
pub struct AdTrajectoryArgs {
    /// Memory coupling R
    #[arg(long, default_value_t = 5.0)]
    pub coupling: f64,

    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,

    /// Number of grid points on [0, t-max]
    #[arg(long, default_value_t = 201)]
    pub steps: usize,

    #[command(flatten)]
    pub thermal: Thermal,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,

    /// Draws per check
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
}
