use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use lcps_core::bench::{Algo, SolverCaps};
use lcps_core::{GeomCaps, DEFAULT_MAX_DP_CELLS, DEFAULT_MAX_MATCHES, DEFAULT_MAX_RECTS};

/// Longest common palindromic subsequence of two sequences.
///
/// All positions printed are 1-based.
#[derive(Debug, Parser)]
#[command(name = "lcps", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an LCPS with one algorithm.
    Solve(SolveArgs),
    /// Run every applicable algorithm and check that they agree.
    Compare(SolveArgs),
    /// Print the match count R and per-symbol counts as JSON.
    Matches(InputArgs),
    /// Time algorithms on generated inputs; prints JSON lines.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoChoice {
    Dp,
    Geom,
    Oracle,
    Auto,
}

impl AlgoChoice {
    pub fn fixed(self) -> Option<Algo> {
        match self {
            AlgoChoice::Dp => Some(Algo::Dp),
            AlgoChoice::Geom => Some(Algo::Geom),
            AlgoChoice::Oracle => Some(Algo::Oracle),
            AlgoChoice::Auto => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Where one sequence comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Literal(String),
    File(PathBuf),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("x_source").required(true)))]
#[command(group(ArgGroup::new("y_source").required(true)))]
pub struct InputArgs {
    /// First sequence, given literally.
    #[arg(short = 'x', group = "x_source", allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Read the first sequence from a file.
    #[arg(long = "x-file", group = "x_source")]
    pub x_file: Option<PathBuf>,
    /// Second sequence, given literally.
    #[arg(short = 'y', group = "y_source", allow_hyphen_values = true)]
    pub y: Option<String>,
    /// Read the second sequence from a file.
    #[arg(long = "y-file", group = "y_source")]
    pub y_file: Option<PathBuf>,
    /// Parse inputs as FASTA and use the first record.
    #[arg(long)]
    pub fasta: bool,
}

impl InputArgs {
    fn source(literal: &Option<String>, file: &Option<PathBuf>) -> Source {
        match (literal, file) {
            (Some(s), _) => Source::Literal(s.clone()),
            (None, Some(p)) => Source::File(p.clone()),
            (None, None) => unreachable!("clap enforces one source"),
        }
    }

    pub fn x_source(&self) -> Source {
        Self::source(&self.x, &self.x_file)
    }

    pub fn y_source(&self) -> Source {
        Self::source(&self.y, &self.y_file)
    }
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest DP table, in cells (n*n*m*m).
    #[arg(long, default_value_t = DEFAULT_MAX_DP_CELLS, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_dp_cells: u64,
    /// Largest rectangle estimate (sum of squared per-symbol match counts).
    #[arg(long, default_value_t = DEFAULT_MAX_RECTS, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_rects: u64,
    /// Largest match count R.
    #[arg(long, default_value_t = DEFAULT_MAX_MATCHES, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_matches: u64,
}

impl CapArgs {
    pub fn caps(&self) -> SolverCaps {
        SolverCaps {
            max_dp_cells: self.max_dp_cells,
            geom: GeomCaps {
                max_matches: self.max_matches,
                max_rects: self.max_rects,
            },
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = AlgoChoice::Auto)]
    pub algo: AlgoChoice,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Sequence lengths to generate (both inputs get the same length).
    #[arg(long, value_delimiter = ',', default_values_t = [8usize, 10])]
    pub n_list: Vec<usize>,
    /// Alphabet sizes to generate over.
    #[arg(long, value_delimiter = ',', default_values_t = [2u16],
          value_parser = clap::value_parser!(u16).range(1..=256))]
    pub s_list: Vec<u16>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Timed repetitions per row; the median is reported.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub reps: u64,
    /// Algorithm to time; `auto` times all three.
    #[arg(long, value_enum, default_value_t = AlgoChoice::Auto)]
    pub algo: AlgoChoice,
    #[command(flatten)]
    pub caps: CapArgs,
}
