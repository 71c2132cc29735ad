use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use heckeuler::Error;

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "heckeuler",
    version,
    about = "Coxeter groups, Hecke algebras and their Euler characteristic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, labels, components and parabolic subgroups.
    Info { system: Option<String> },
    /// The Poincaré series, optionally checked against length counts.
    Poincare { system: Option<String> },
    /// Multiply two elements, e.g. `hecke A2 'T[s1]' 'T[s1]'`.
    ///
    /// The system may instead come from --type or --input, leaving `A B`.
    Hecke {
        first: String,
        second: String,
        third: Option<String>,
    },
    /// Homology of the Deodhar complex (finite W) or an acyclicity
    /// certificate (infinite W).
    Deodhar { system: Option<String> },
    /// Euler characteristic, the identity chi * p = 1 and specializations.
    Euler { system: Option<String> },
    /// Run every invariant suite.
    Verify { system: Option<String> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// JSON file, inline JSON object, or catalog name.
    #[arg(short, long, global = true)]
    input: Option<String>,
    /// Catalog name such as A2, B3, H3, I2(7), Atilde1, Hyp334.
    #[arg(long = "type", global = true)]
    kind: Option<String>,
    /// Rename the generators (comma-separated).
    #[arg(long, global = true)]
    names: Option<String>,
    /// Length bound L for truncated computations.
    #[arg(long, visible_alias = "radius", global = true)]
    max_length: Option<usize>,
    /// Witness radius L' for acyclicity certificates.
    #[arg(long, global = true)]
    coradius: Option<usize>,
    /// Largest L' tried when a certificate fails.
    #[arg(long, global = true)]
    max_coradius: Option<usize>,
    /// Specialization point, e.g. 1, -1, 1/2 (repeatable).
    #[arg(long = "at", global = true, allow_hyphen_values = true, value_parser = parse_point)]
    at: Vec<BigRational>,
    /// Generator order for the sign map (comma-separated names).
    #[arg(long, global = true)]
    order: Option<String>,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(long, default_value_t = 200, global = true)]
    samples: usize,
    /// Maximum number of enumerated group elements.
    #[arg(long, default_value_t = heckeuler::coxeter::DEFAULT_MEMORY_CAP, global = true)]
    mem_cap: usize,
}

fn parse_point(s: &str) -> Result<BigRational, String> {
    heckeuler::exactmath::parse_rational(s).ok_or_else(|| format!("not a rational number: {s}"))
}

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const RESOURCE: u8 = 3;
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::RadiusInsufficient { .. } | Error::MemoryGuard { .. } => exit::RESOURCE,
        Error::Parse { .. }
        | Error::UnknownGenerator(_)
        | Error::Invalid(_)
        | Error::NotFiniteType(_)
        | Error::NotInfiniteType(_)
        | Error::HypothesisViolated(_)
        | Error::DimensionMismatch(_) => exit::USAGE,
        _ => exit::FAILED,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.opts) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.passed { exit::OK } else { exit::FAILED })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
