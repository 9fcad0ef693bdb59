//! `oscfock` — batch front-end for the superoscillation / Fock-space
//! library: run the identity verification suite, print convergence tables,
//! or evaluate the named objects on a grid.
//!
//! Exit codes: 0 all identities passed (or table/eval produced); 1 at
//! least one identity exceeded its tolerance; 2 usage or configuration
//! error.

mod config;
mod converge;
mod eval;
mod report;
mod suite;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{CommonArgs, OutputFormat, SuiteConfig};
use converge::ConvergeKind;
use eval::EvalObject;
use report::Table;

/// Errors surfaced to the user; all are usage/configuration problems and
/// exit with code 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "oscfock",
    version,
    about = "Superoscillating sequences and their Fock-space transforms: \
             verification suite, convergence tables, grid evaluation",
    after_help = "EXAMPLES:\n    \
        oscfock verify\n    \
        oscfock verify --format json --out report.json\n    \
        oscfock verify --tolerance sum_product=1e-9 --n 2,4,8 --a 2\n    \
        oscfock converge superosc --n 10,50,200 --a 2\n    \
        oscfock eval bso --n 4 --a 2 --grid 0,0.5:0.5,1.5\n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every closed-form identity against quadrature and report
    /// pass/fail per identity.
    Verify {
        #[command(flatten)]
        args: CommonArgs,
    },
    /// Tabulate the gap to the limit object as the sequence index grows
    /// (columns: n, gap). Uses the first configured amplitude.
    Converge {
        /// Which limit to tabulate.
        #[arg(value_enum)]
        kind: ConvergeKind,
        #[command(flatten)]
        args: CommonArgs,
    },
    /// Evaluate one object on the configured grid (first n, first a).
    Eval {
        /// Which object to evaluate.
        #[arg(value_enum)]
        object: EvalObject,
        /// Hermite degree, for objects parameterized by k.
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        args: CommonArgs,
    },
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            CliError::Usage(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn emit_table(table: &Table, cfg: &SuiteConfig) -> Result<(), CliError> {
    let text = match cfg.format {
        OutputFormat::Csv => table.to_csv(),
        OutputFormat::Json => table.to_json(),
    };
    emit(&text, cfg.out.as_deref())
}

fn run() -> Result<bool, CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { args } => {
            let cfg = SuiteConfig::resolve(&args, &suite::known_ids())?;
            let report = suite::run(&cfg)?;
            let text = match cfg.format {
                OutputFormat::Csv => report.to_csv(),
                OutputFormat::Json => report.to_json(),
            };
            emit(&text, cfg.out.as_deref())?;
            Ok(report.all_passed())
        }
        Command::Converge { kind, args } => {
            let grid_given = args.grid.is_some();
            let cfg = SuiteConfig::resolve(&args, &[])?;
            let table = converge::run(kind, &cfg, grid_given)?;
            emit_table(&table, &cfg)?;
            Ok(true)
        }
        Command::Eval { object, k, args } => {
            let cfg = SuiteConfig::resolve(&args, &[])?;
            let table = eval::run(object, k, &cfg)?;
            emit_table(&table, &cfg)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
