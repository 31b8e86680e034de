//! `homcount`: counting, enumeration, series tables, asymptotics and
//! cross-verification for homogeneous colored linear orderings.
//!
//! Exit status: 0 on success, 1 when a verification check (or I/O) fails,
//! 2 on usage errors.

mod commands;
mod format;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homcount::correspondence::Bound;
use homcount::SequenceId;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "homcount", version, about = "Exact counts of homogeneous colored linear orderings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Recurrence,
    ClosedForm,
    Egf,
    BruteForce,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ExportFormat {
    #[value(name = "b-file")]
    BFile,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SeriesName {
    /// e^x / (2 - x - e^x)
    H,
    /// 1 / (2 - x - e^x)
    F,
    /// 1 / (2 - e^x)
    Fubini,
    Exp,
    Geometric,
}

#[derive(Debug, Clone, Args)]
pub struct CapArg {
    /// Brute-force cap on k (default 7, or HOMCOUNT_CAP)
    #[arg(long)]
    cap: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one exact term of a sequence
    Count {
        /// I, L, J, K1, K2, Fubini or I_closed_nonempty
        #[arg(long)]
        sequence: SequenceId,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: Method,
        #[command(flatten)]
        cap: CapArg,
    },
    /// List models as JSON lines, or count them
    Enumerate {
        #[arg(long)]
        k: u32,
        /// Allow adjacent R-points
        #[arg(long)]
        unconstrained: bool,
        /// Only models using all k colors
        #[arg(long, conflicts_with = "partitions")]
        surjective: bool,
        /// Ordered set partitions (all S-points, all colors used)
        #[arg(long)]
        partitions: bool,
        /// Print only the number of models
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Run every cross-check and report pass/fail
    Verify {
        #[arg(long, default_value_t = 7)]
        k_max: usize,
        /// Truncation order for the generating-function checks
        #[arg(long, default_value_t = 25)]
        terms: usize,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Write a sequence as a b-file, CSV or JSON
    Export {
        #[arg(long)]
        sequence: SequenceId,
        #[arg(long)]
        k_max: usize,
        #[arg(long, value_enum, default_value = "b-file")]
        format: ExportFormat,
        /// Destination file (stdout when omitted)
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Print generating-function coefficients
    Series {
        #[arg(long, value_enum, default_value = "h")]
        name: SeriesName,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Asymptotic constants and convergence tables
    Asymptotic {
        #[command(subcommand)]
        what: AsymptoticCommand,
    },
    /// Expand a model (JSON) into its ordering description
    Expand {
        /// Input file (stdin when omitted)
        #[arg(long)]
        input: Option<std::path::PathBuf>,
    },
    /// Contract an ordering description (JSON) back into a model
    Contract {
        #[arg(long)]
        k: u32,
        /// Input is a colored description; output an unconstrained model
        #[arg(long)]
        colored: bool,
        #[arg(long)]
        input: Option<std::path::PathBuf>,
    },
    /// Decide C_{n,m}-homogeneity of a described ordering
    Classify {
        /// Natural number or "inf"
        #[arg(long)]
        n: Bound,
        /// Natural number or "inf"
        #[arg(long)]
        m: Bound,
        #[arg(long)]
        input: Option<std::path::PathBuf>,
    },
    /// Brute-force homogeneity of an explicit finite colored ordering
    Homogeneous {
        /// Comma-separated colors in order, e.g. 1,2,1
        #[arg(long, value_delimiter = ',')]
        colors: Vec<u32>,
        #[arg(long, default_value_t = homcount::correspondence::DEFAULT_HOMOGENEITY_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Subcommand)]
enum AsymptoticCommand {
    /// Z, R, S, limit ratio, p*, M
    Constants,
    /// L(k)/A(k) and J(k)/L(k) for k = 0..=k_max
    Ratios {
        #[arg(long, default_value_t = 12)]
        k_max: usize,
    },
    /// I(k) / (k! 2.123^k) for k = 1..=k_max
    Bound {
        #[arg(long, default_value_t = 13)]
        k_max: usize,
    },
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Count {
            sequence,
            k,
            method,
            cap,
        } => commands::count(&mut out, sequence, k, method, commands::resolve_cap(&cap)?),
        Command::Enumerate {
            k,
            unconstrained,
            surjective,
            partitions,
            count,
            cap,
        } => commands::enumerate(
            &mut out,
            commands::EnumerateRequest {
                k,
                constrained: !unconstrained,
                surjective,
                partitions,
                count_only: count,
                cap: commands::resolve_cap(&cap)?,
            },
        ),
        Command::Verify {
            k_max,
            terms,
            json,
            cap,
        } => commands::verify(&mut out, k_max, terms, json, commands::resolve_cap(&cap)?),
        Command::Export {
            sequence,
            k_max,
            format,
            output,
        } => commands::export(&mut out, sequence, k_max, format, output.as_deref()),
        Command::Series { name, terms } => commands::series(&mut out, name, terms),
        Command::Asymptotic { what } => match what {
            AsymptoticCommand::Constants => commands::asymptotic_constants(&mut out),
            AsymptoticCommand::Ratios { k_max } => commands::asymptotic_ratios(&mut out, k_max),
            AsymptoticCommand::Bound { k_max } => commands::asymptotic_bound(&mut out, k_max),
        },
        Command::Expand { input } => commands::expand(&mut out, input.as_deref()),
        Command::Contract { k, colored, input } => {
            commands::contract(&mut out, k, colored, input.as_deref())
        }
        Command::Classify { n, m, input } => commands::classify(&mut out, n, m, input.as_deref()),
        Command::Homogeneous { colors, cap } => commands::homogeneous(&mut out, colors, cap),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
