use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exg_core::{Method, SearchMethod};

#[derive(Debug, Parser)]
#[command(
    name = "exg",
    version,
    about = "Fit, sample and test ex-Gaussian distributions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit one or more estimators to a data file.
    Fit(FitArgs),
    /// Point with right-tail area alpha.
    Quantile(QuantileArgs),
    /// Draw ex-Gaussian variates, one per line.
    Sample(SampleArgs),
    /// Parametric-bootstrap Kolmogorov-Smirnov p-value.
    Gof(GofArgs),
    /// Remove observations beyond model-based tail cuts.
    Trim(TrimArgs),
    /// Histogram densities with fitted curves at the bin centers.
    Plotdata(PlotdataArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Stat,
    Minsqr,
    Maxlkhd,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Stat => Method::Stat,
            MethodArg::Minsqr => Method::MinSqr,
            MethodArg::Maxlkhd => Method::MaxLkhd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchArg {
    Bfgs,
    Steepest,
}

impl From<SearchArg> for SearchMethod {
    fn from(s: SearchArg) -> Self {
        match s {
            SearchArg::Bfgs => SearchMethod::Bfgs,
            SearchArg::Steepest => SearchMethod::Steepest,
        }
    }
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct SearchOpts {
    /// Stopping tolerance on the scale-free gradient norm.
    #[arg(long, default_value_t = 1e-8)]
    pub grad_tol: f64,
    /// Search direction rule.
    #[arg(long, value_enum, default_value_t = SearchArg::Bfgs)]
    pub search: SearchArg,
    #[arg(long, default_value_t = 100_000)]
    pub max_iter: usize,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Data file, one value per line ("-" reads standard input).
    pub file: PathBuf,
    /// Estimators to run; repeat or separate with commas.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [MethodArg::Stat, MethodArg::Minsqr, MethodArg::Maxlkhd])]
    pub method: Vec<MethodArg>,
    /// Histogram bins for minsqr (default: 2 sqrt(N), rounded).
    #[arg(long)]
    pub bins: Option<usize>,
    #[command(flatten)]
    pub search: SearchOpts,
    #[command(flatten)]
    pub output: Output,
    /// Leave the timing field empty so reports are reproducible byte for byte.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long)]
    pub sigma: f64,
    #[arg(long)]
    pub tau: f64,
}

#[derive(Debug, Args)]
pub struct QuantileArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Right-tail area, in (0, 1).
    #[arg(long)]
    pub alpha: f64,
    #[command(flatten)]
    pub output: Output,
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// Number of variates.
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GofArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Maxlkhd)]
    pub method: MethodArg,
    #[arg(long, default_value_t = 1000)]
    pub replicates: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub bins: Option<usize>,
    #[command(flatten)]
    pub search: SearchOpts,
    #[command(flatten)]
    pub output: Output,
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct TrimArgs {
    pub file: PathBuf,
    /// Tail area removed on each side, in (0, 0.5).
    #[arg(long, default_value_t = 0.001)]
    pub tail: f64,
    /// Keep the left tail; cut only on the right.
    #[arg(long)]
    pub no_left: bool,
    /// Write the retained values here, one per line.
    #[arg(long)]
    pub trimmed: Option<PathBuf>,
    #[command(flatten)]
    pub search: SearchOpts,
    #[command(flatten)]
    pub output: Output,
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct PlotdataArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [MethodArg::Maxlkhd])]
    pub method: Vec<MethodArg>,
    #[arg(long)]
    pub bins: Option<usize>,
    #[command(flatten)]
    pub search: SearchOpts,
    #[command(flatten)]
    pub output: Output,
}
