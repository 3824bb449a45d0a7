//! `cyclic-es`: batch front end printing one JSON document per run.
//!
//! Exit codes: 0 success, 1 domain error (bounds, budget, membership),
//! 2 usage or input-parse error. Diagnostics go to standard error.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::commands::{CliError, Output};

#[derive(Parser, Debug)]
#[command(name = "cyclic-es", version, about = "Monotone sub-permutations of linear and cyclic permutations")]
struct Cli {
    /// Run data-parallel loops on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Longest monotone (cyclic) subsequences of a permutation.
    Analyze {
        /// Comma-separated values, e.g. "2,1,4,3" or "(6,1,4,2,7,3,5)".
        perm: String,
        /// Treat the input as a cycle. Implied by surrounding parentheses.
        #[arg(long)]
        cyclic: bool,
        #[command(flatten)]
        bounds: OptionalBounds,
    },
    /// Build one of the extremal cycles of length (k-1)(l-1)+1.
    Construct {
        k: usize,
        l: usize,
        #[arg(long, default_value = "i", value_parser = ["i", "ii"])]
        structure: String,
    },
    /// Tableau count of the l×k rectangle and |S(k, l)|.
    Count { k: usize, l: usize },
    /// The grid bijection between S(k, l) and pairs of l×k tableaux.
    Bijection(BijectionArgs),
    /// All extremal cycles for (k, l).
    Enumerate {
        k: usize,
        l: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = 0)]
        offset: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exhaustively check the cyclic bound at alpha(k, l) and alpha(k, l) - 1.
    VerifyAlpha { k: usize, l: usize },
    /// Monte Carlo estimate of the expected circular LIS.
    EstimateMu {
        /// Cycle length, or a comma-separated list for a sweep.
        n: String,
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Points and labelled edges of the distorted-grid picture.
    GridExport {
        perm: String,
        #[command(flatten)]
        bounds: OptionalBounds,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct OptionalBounds {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: Option<u64>,
    #[arg(long = "l", alias = "ℓ", value_parser = clap::value_parser!(u64).range(1..))]
    l: Option<u64>,
}

#[derive(Args, Debug)]
struct BijectionArgs {
    /// Permutation to map to its (ranking, valuation) pair.
    #[arg(long, conflicts_with = "inverse", required_unless_present = "inverse")]
    forward: Option<String>,
    /// Ranking and valuation tableaux as JSON matrices.
    #[arg(long, num_args = 2, value_names = ["R", "V"])]
    inverse: Option<Vec<String>>,
    #[command(flatten)]
    bounds: OptionalBounds,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Construct { .. } => "construct",
            Command::Count { .. } => "count",
            Command::Bijection(_) => "bijection",
            Command::Enumerate { .. } => "enumerate",
            Command::VerifyAlpha { .. } => "verify-alpha",
            Command::EstimateMu { .. } => "estimate-mu",
            Command::GridExport { .. } => "grid-export",
        }
    }
}

fn emit(doc: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = serde_json::to_writer_pretty(&mut out, doc);
    let _ = writeln!(out);
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render().to_string();
            eprint!("{rendered}");
            let informational = matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let code = if informational { 0 } else { 2 };
            let doc = if informational {
                json!({ "command": "help", "payload": { "text": rendered }, "exit_code": 0 })
            } else {
                json!({
                    "command": Value::Null,
                    "error": { "kind": "Usage", "message": rendered.trim_end() },
                    "exit_code": 2,
                })
            };
            emit(&doc);
            return ExitCode::from(code);
        }
    };

    let name = cli.command.name();
    let ctx = commands::Context::from_env(cli.sequential);
    let (input, result) = commands::run(&ctx, cli.command);
    match result {
        Ok(Output::Json(payload)) => {
            emit(&json!({ "command": name, "input": input, "payload": payload, "exit_code": 0 }));
            ExitCode::SUCCESS
        }
        Ok(Output::Csv(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError { code, kind, message }) => {
            eprintln!("error: {message}");
            emit(&json!({
                "command": name,
                "input": input,
                "error": { "kind": kind, "message": message },
                "exit_code": code,
            }));
            ExitCode::from(code)
        }
    }
}
