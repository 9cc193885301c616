//! The `pk` command line.
//!
//! Every command prints one JSON document on stdout. Diagnostics go to
//! stderr. Exit codes: 0 ok, 1 property failure, 2 unreadable or invalid
//! input, 3 a `(p,p)` class or non-critical pair, 4 a non-critical `m`.

mod commands;
pub mod files;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::halfint::HalfInt;

pub use files::{MotiveFile, RepFile};
pub use verify::{run_verify, Suite, VerifyOptions, VerifySummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PP_CLASS: i32 = 3;
pub const EXIT_NOT_CRITICAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "pk", version, about = "Critical points and period formulas for pairs of regular motives")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Critical interval of R(M) or R(M ⊗ M'), by closed form and by pole scan.
    Critical(Inputs),
    /// Archimedean Γ-factor of R(M) or R(M ⊗ M').
    Gamma(Inputs),
    /// The index sets A and T of a pair.
    Sets(Inputs),
    /// Split indices of a pair, both ways.
    Split(Inputs),
    /// Deligne period of R(M ⊗ M') as a period monomial.
    Period {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = Form::Simplified)]
        form: Form,
    },
    /// Conjectured value of L(m) up to algebraic factors.
    Conjecture {
        #[command(flatten)]
        inputs: Inputs,
        /// Critical point, an integer or `k/2`.
        #[arg(long, allow_hyphen_values = true)]
        m: HalfInt,
        /// Read representation files instead of motive files.
        #[arg(long)]
        auto: bool,
        /// Attach the case report (implies --auto).
        #[arg(long)]
        classify: bool,
    },
    /// Which known case covers L(m, Π × Π').
    Classify {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, allow_hyphen_values = true)]
        m: HalfInt,
    },
    /// Seeded property suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// One file holding one or two objects, or two files.
#[derive(Debug, clap::Args)]
pub struct Inputs {
    #[arg(required = true, num_args = 1..=2)]
    pub files: Vec<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Raw,
    Simplified,
    Expanded,
}

/// Why a command stopped.
#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Math(Error),
    Property(serde_json::Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

impl From<files::ParseError> for Failure {
    fn from(e: files::ParseError) -> Self {
        Failure::Parse(e.0)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PpClass(_) | Error::NotCriticalPair(_) => EXIT_PP_CLASS,
        Error::NotCritical { .. } | Error::NonIntegerExponent(_) => EXIT_NOT_CRITICAL,
        Error::InvalidMotive(_)
        | Error::InvalidHodgeMultiset(_)
        | Error::InvalidInfinityType(_)
        | Error::Algebraicity(_)
        | Error::InvalidHalfInt(_)
        | Error::UnknownRank(_)
        | Error::RuleNotApplicable { .. }
        | Error::SizeLimit { .. } => EXIT_PARSE,
    }
}

/// Parses `args`, runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let (value, failure) = match commands::dispatch(&cli.command) {
        Ok(v) => (Some(v), None),
        Err(Failure::Property(v)) => (Some(v), Some(EXIT_PROPERTY)),
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            (None, Some(EXIT_PARSE))
        }
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            (None, Some(exit_code(&e)))
        }
    };
    if let Some(v) = value {
        let text = serde_json::to_string_pretty(&v).expect("JSON values serialize");
        // a closed pipe is not an error of the command
        let _ = writeln!(std::io::stdout(), "{text}");
    }
    failure.unwrap_or(EXIT_OK)
}
