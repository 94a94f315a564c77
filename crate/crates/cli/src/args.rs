use std::path::PathBuf;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use phmetric::builtin::{ExampleName, ExampleSpec};
use phmetric::intertwiner::DEFAULT_TRIALS;
use phmetric::synthesis::DEFAULT_GRID;
use phmetric::{AnalysisOptions, Tolerances};

#[derive(Debug, Parser)]
#[command(name = "phmetric", version, about = "Pseudo-Hermiticity analysis of finite complex matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a matrix and report metrics, angles and symmetries.
    Analyze {
        /// MatrixFile JSON holding H.
        #[arg(required_unless_present = "example", conflicts_with = "example")]
        input: Option<PathBuf>,
        #[command(flatten)]
        example: ExampleArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Build the Hermitian metric from a given intertwiner of H.
    Hermitize {
        /// MatrixFile JSON holding H.
        input: PathBuf,
        /// MatrixFile JSON holding the intertwiner η_w.
        #[arg(long)]
        eta_w: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Spectrum, radius and inversion symmetry of a matrix used as A.
    Spectrum {
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit a built-in (H, η_w) pair.
    Example {
        name: ExampleKind,
        #[command(flatten)]
        params: ExampleParams,
        /// Also write H as a MatrixFile here.
        #[arg(long)]
        h_out: Option<PathBuf>,
        /// Also write η_w as a MatrixFile here.
        #[arg(long)]
        eta_out: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExampleKind {
    TwoDim,
    Znojil,
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    /// Analyze a built-in example instead of a file.
    #[arg(long, value_enum)]
    pub example: Option<ExampleKind>,
    #[command(flatten)]
    pub params: ExampleParams,
}

#[derive(Debug, Args)]
pub struct ExampleParams {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Size of the parity involution in the znojil example.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub parity_dim: u64,
}

impl ExampleParams {
    pub fn spec(&self, kind: ExampleKind) -> ExampleSpec {
        let name = match kind {
            ExampleKind::TwoDim => ExampleName::TwoDim,
            ExampleKind::Znojil => ExampleName::Znojil,
        };
        ExampleSpec {
            a: self.a,
            b: self.b,
            parity_dim: self.parity_dim as usize,
            ..ExampleSpec::new(name)
        }
    }
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, default_value_t = Tolerances::default().rank_rel)]
    pub tol_rank: f64,
    #[arg(long, default_value_t = Tolerances::default().herm_rel)]
    pub tol_herm: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of angles sampled in [0, π).
    #[arg(long, default_value_t = DEFAULT_GRID, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub grid: usize,
    /// Random draws when searching for an invertible intertwiner.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    /// Restarts of the positive-definite metric search.
    #[arg(long, default_value_t = phmetric::classify::DEFAULT_RESTARTS)]
    pub restarts: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl CommonArgs {
    pub fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            tol: Tolerances {
                rank_rel: self.tol_rank,
                herm_rel: self.tol_herm,
                ..Tolerances::default()
            },
            seed: self.seed,
            trials: self.trials,
            restarts: self.restarts,
            grid: self.grid,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// JSON output (default).
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Plain-text output.
    #[arg(long)]
    pub text: bool,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
