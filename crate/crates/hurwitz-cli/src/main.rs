//! Command-line front end for exact Bell polynomial, flow and
//! majorant-bound computations.
//!
//! Exit codes, stable across subcommands:
//!
//! - 0: success (for `bound`: every order certified)
//! - 2: usage or parse error
//! - 3: majorant hypothesis violated by the input jet
//! - 4: internal invariant breach (a comparison that cannot fail did)

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

/// Failures carrying their process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable files, malformed values: exit 2.
    Usage(String),
    /// The jet norms exceed the majorant, so no certificate exists for
    /// this input: exit 3.
    Hypothesis(String),
    /// An identity the library guarantees failed to hold: exit 4.
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Hypothesis(_) => 3,
            CliError::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Hypothesis(m) | CliError::Internal(m) => m,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    /// Exact values as strings inside a JSON envelope.
    Json,
    /// Inexact 64-bit float rows for plotting; `flow` only.
    Csv,
}

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact Bell polynomials, autonomous flows and majorant bounds over coefficient rings",
    after_help = "The environment variable HURWITZ_MAX_ORDER (default 64) caps n and --order."
)]
struct Cli {
    /// Output format (csv is supported by `flow` only).
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of n as multiplicity vectors (j_1, ..., j_n).
    Partitions {
        /// The integer to partition; must be at least 1.
        #[arg(long)]
        n: usize,
        /// Keep only partitions with exactly this many parts.
        #[arg(long)]
        parts: Option<usize>,
    },
    /// Evaluate the partial Bell polynomial B_{n,k} on rational values.
    Bell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// JSON list of rationals, e.g. '["1","2","6"]'; b_1 first.
        #[arg(long)]
        b: String,
    },
    /// Evaluate the complete Bell polynomial Y_n on rational values.
    #[command(name = "bell-complete")]
    BellComplete {
        #[arg(long)]
        n: usize,
        /// JSON list of rationals for b_1, ..., b_n.
        #[arg(long)]
        b: String,
        /// JSON list of rationals for a_1, ..., a_n.
        #[arg(long)]
        a: String,
    },
    /// Flow coefficients A_1..A_N from a jet file, optionally evaluated.
    Flow {
        /// Jet file: {"ring":"rational"|"gaussian","values":[...]}.
        #[arg(long)]
        jet: PathBuf,
        /// Number of coefficients to produce (uses the first N jet values).
        #[arg(long)]
        order: usize,
        /// Initial condition; defaults to 0. Rational "p/q", or
        /// ["re","im"] for the gaussian ring.
        #[arg(long)]
        base: Option<String>,
        /// Comma-separated rational times to evaluate at, e.g. "0,1/4".
        #[arg(long)]
        eval: Option<String>,
    },
    /// Closed-form flow coefficients of a named family, optionally
    /// checked against the recursion.
    Oracle {
        /// exp:a, geom, or binom:a (a rational, a != 1 for binom).
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
        /// Also run the recursion on the family jet and report a verdict.
        #[arg(long = "compare-recursion")]
        compare_recursion: bool,
    },
    /// Certify a jet against a majorant; exit 0 iff every order holds.
    Bound {
        /// Jet file over a normed ring.
        #[arg(long)]
        jet: PathBuf,
        /// exp:a, fact, binom:a, or explicit:<file with a JSON list>.
        #[arg(long)]
        majorant: String,
        /// Number of jet values to certify.
        #[arg(long)]
        order: usize,
        /// Also evaluate the truncated bound flow at this rational time.
        #[arg(long = "eval-t")]
        eval_t: Option<String>,
    },
}

fn run(cli: Cli) -> Result<output::CommandOutput, CliError> {
    match &cli.command {
        Command::Partitions { n, parts } => commands::cmd_partitions(*n, *parts, cli.format),
        Command::Bell { n, k, b } => commands::cmd_bell(*n, *k, b, cli.format),
        Command::BellComplete { n, b, a } => commands::cmd_bell_complete(*n, b, a, cli.format),
        Command::Flow {
            jet,
            order,
            base,
            eval,
        } => commands::cmd_flow(jet, *order, base.as_deref(), eval.as_deref(), cli.format),
        Command::Oracle {
            family,
            order,
            compare_recursion,
        } => commands::cmd_oracle(family, *order, *compare_recursion, cli.format),
        Command::Bound {
            jet,
            majorant,
            order,
            eval_t,
        } => commands::cmd_bound(jet, majorant, *order, eval_t.as_deref(), cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
