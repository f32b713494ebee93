//! Command-line grammar.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::report::{run, Command, Format, RunConfig};
use crate::sampling::{Bounds, DEFAULT_SEED};
use crate::theorems::TheoremId;

/// Default `--n-max` for sweeps over random parameters.
const RANDOM_SWEEP_N_MAX: u64 = 30;
const DEFAULT_N_MAX: u64 = 100;

#[derive(Debug, Parser)]
#[command(name = "harmonic-cv", version, about = "Exact verification of harmonic-number summation formulas")]
pub struct Cli {
    #[command(subcommand)]
    command: Sub,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Write records here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    parallel: u64,

    /// Record measured per-check microseconds (output is then not reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Closed forms against brute-force family sums.
    VerifyTheorems {
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long, default_value = "all")]
        ids: String,
    },
    /// Kernel identities at random rational parameters.
    VerifyKernels {
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
        num_bound: i64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..))]
        den_bound: i64,
    },
    /// Bridge relations over 0 <= k <= n <= n-max.
    VerifyRelations {
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Dual-number proof replays.
    VerifyDerivations {
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long, default_value = "all")]
        ids: String,
    },
    /// Chu-Vandermonde convolution at random rational arguments.
    VerifyCv {
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Both sides of one theorem at one n.
    Eval {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: u64,
    },
    /// Timing of brute-force sums against closed forms.
    Bench {
        #[arg(long)]
        n_max: Option<u64>,
    },
}

fn parse_ids(list: &str) -> Result<Vec<TheoremId>, String> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::all().collect());
    }
    let mut ids = list
        .split(',')
        .map(|s| s.trim().parse::<TheoremId>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, String> {
        let (command, n_max, ids, samples, seed, bounds) = match self.command {
            Sub::VerifyTheorems { n_max, ids } => (
                Command::VerifyTheorems,
                n_max.unwrap_or(DEFAULT_N_MAX),
                parse_ids(&ids)?,
                None,
                None,
                None,
            ),
            Sub::VerifyKernels {
                samples,
                seed,
                n_max,
                num_bound,
                den_bound,
            } => (
                Command::VerifyKernels,
                n_max.unwrap_or(RANDOM_SWEEP_N_MAX),
                Vec::new(),
                Some(samples),
                Some(seed),
                Some(Bounds {
                    numerator: num_bound,
                    denominator: den_bound,
                }),
            ),
            Sub::VerifyRelations { n_max } => (
                Command::VerifyRelations,
                n_max.unwrap_or(DEFAULT_N_MAX),
                Vec::new(),
                None,
                None,
                None,
            ),
            Sub::VerifyDerivations { n_max, ids } => (
                Command::VerifyDerivations,
                n_max.unwrap_or(DEFAULT_N_MAX),
                parse_ids(&ids)?,
                None,
                None,
                None,
            ),
            Sub::VerifyCv { samples, seed, n_max } => (
                Command::VerifyCv,
                n_max.unwrap_or(RANDOM_SWEEP_N_MAX),
                Vec::new(),
                Some(samples),
                Some(seed),
                None,
            ),
            Sub::Eval { theorem, n } => {
                let theorem = theorem.parse::<TheoremId>().map_err(|e| e.to_string())?;
                (Command::Eval { theorem, n }, n, Vec::new(), None, None, None)
            }
            Sub::Bench { n_max } => (
                Command::Bench,
                n_max.unwrap_or(DEFAULT_N_MAX),
                TheoremId::all().collect(),
                None,
                None,
                None,
            ),
        };
        let mut config = RunConfig::new(command);
        config.n_max = n_max;
        if !ids.is_empty() {
            config.ids = ids;
        }
        if let Some(s) = samples {
            config.samples = s;
        }
        if let Some(s) = seed {
            config.seed = s;
        }
        if let Some(b) = bounds {
            config.bounds = b;
        }
        config.format = match self.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        };
        config.out = self.out;
        config.parallel = usize::try_from(self.parallel).map_err(|e| e.to_string())?;
        config.timings = self.timings;
        Ok(config)
    }
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match cli.into_config() {
        Ok(config) => run(&config),
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}
