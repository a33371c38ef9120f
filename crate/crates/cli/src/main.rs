use std::path::PathBuf;
use std::process::ExitCode;

use affchar_cli::cache::Cache;
use affchar_cli::commands::{self, CliError, Method, Outcome};
use affchar_cli::json;
use affchar_core::Execution;
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Exact characters of affine su(r+1) modules, Kostka polynomials and
/// cross-checks.
///
/// Results are cached under $AFFCHAR_CACHE (default: the user cache
/// directory); set AFFCHAR_NO_CACHE=1 to bypass the cache.
#[derive(Parser)]
#[command(name = "affchar", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Write the document to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Run on a single thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Fermionic,
    Freudenthal,
}

#[derive(Subcommand)]
enum Command {
    /// Graded character of the integrable module with highest weight --weight.
    Character {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: u64,
        /// Dynkin labels, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        weight: Vec<i64>,
        #[arg(long)]
        max_degree: i64,
        #[arg(long, value_enum, default_value = "fermionic")]
        method: MethodArg,
    },
    /// Generalized Kostka polynomial K_{l,n}(q).
    Kostka {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        l: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        n: Vec<i64>,
    },
    /// Kostka matrix (or its inverse) over one congruence class.
    KostkaMatrix {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_threshold: u64,
        #[arg(long, default_value_t = 0)]
        class: u64,
        #[arg(long)]
        invert: bool,
    },
    /// Decompose a fusion-product character into irreducible characters.
    Decompose {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        n: Vec<i64>,
        /// Also verify the decomposition at this level against the oracle.
        #[arg(long, requires = "max_degree")]
        level: Option<u64>,
        #[arg(long, requires = "level")]
        max_degree: Option<i64>,
    },
    /// Run a named verification suite ("all" runs every suite).
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
    },
}

fn suite_names() -> Vec<&'static str> {
    let mut names = affchar_core::verify::SUITES.to_vec();
    names.push("all");
    names
}

fn run(args: Args) -> Result<Outcome, CliError> {
    let exec = if args.sequential { Execution::Sequential } else { Execution::default() };
    let cache = Cache::from_env();
    let cache = cache.as_ref();
    match args.command {
        Command::Character { rank, level, weight, max_degree, method } => {
            let method = match method {
                MethodArg::Fermionic => Method::Fermionic,
                MethodArg::Freudenthal => Method::Freudenthal,
            };
            commands::character(rank, level, &weight, max_degree, method, cache, exec)
        }
        Command::Kostka { rank, l, n } => commands::kostka(rank, &l, &n),
        Command::KostkaMatrix { rank, max_threshold, class, invert } => {
            commands::kostka_matrix(rank, max_threshold, class, invert, cache, exec)
        }
        Command::Decompose { rank, n, level, max_degree } => {
            commands::decompose(rank, &n, level.zip(max_degree), exec)
        }
        Command::Verify { suite } => commands::verify_suite(&suite, exec),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let output = args.output.clone();
    let outcome = match run(args) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::Internal(_) => EXIT_INTERNAL,
            });
        }
    };
    let mut text = json::canonical(&outcome.document);
    text.push('\n');
    let written = match &output {
        Some(path) => std::fs::write(path, &text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INTERNAL);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFICATION)
    }
}
