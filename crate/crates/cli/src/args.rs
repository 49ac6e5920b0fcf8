use clap::{Args, Parser, Subcommand, ValueEnum};

use markov_laguerre::DEFAULT_TOL;

#[derive(Parser, Debug)]
#[command(name = "markov-laguerre", version, about = "Markov constants for the Laguerre weight t^alpha e^-t")]
pub struct Cli {
    /// Worker threads for sweeps (0 = number of processors).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    /// Aligned text, for reading in a terminal.
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Floating,
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Coeffs,
    Sandwich,
    Asymptotic,
    Bessel,
    Identities,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// c_n(alpha) and c_n(alpha)^2 with a certified bracket.
    Constant(PointArgs),
    /// Every finite-n bound at one (alpha, n).
    Bounds(PointArgs),
    /// Bounds over an alpha grid times a list of n.
    Sweep(SweepArgs),
    /// Run a verification suite; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// First positive zero of J_nu.
    BesselZero(BesselArgs),
    /// The ratio r(alpha) of the asymptotic upper and lower bounds.
    Figure1(FigureArgs),
}

#[derive(Args, Debug)]
pub struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Single alpha; overrides the range flags.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Comma-separated alphas, e.g. `-0.9,-0.5,0,1`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "alpha")]
    pub alpha_list: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub alpha_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha_step: f64,
    /// Comma-separated degrees; `a..b` expands to the inclusive range.
    #[arg(long)]
    pub n_list: String,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Arithmetic for the coefficient and residual checks.
    #[arg(long, value_enum, default_value_t = Mode::Rational)]
    pub mode: Mode,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct BesselArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "alpha")]
    pub nu: Option<f64>,
    /// Use nu = (alpha - 1)/2.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "nu")]
    pub alpha: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = -0.99)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 500.0)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 0.5)]
    pub alpha_step: f64,
}
