use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qseries::cli::{self, CliError, Status};
use qseries::corpus::RunOptions;
use qseries::verify::{DEFAULT_NMAX, DEFAULT_ORDER};
use qseries::SHIPPED_CORPUS;

#[derive(Parser)]
#[command(name = "qseries", version, about = "Exact q-series expansion and identity checking")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of an expression.
    Expand {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Print the coefficients on the progression m*n + j.
    Dissect {
        expr: String,
        #[arg(long = "m")]
        m: usize,
        #[arg(long = "j")]
        j: usize,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Print an oracle table (p, overp, a, a-mod6, a-oddtwice, g).
    Oracle {
        kind: String,
        n_max: Option<usize>,
        #[arg(long = "nmax")]
        nmax: Option<usize>,
    },
    /// Run an identity corpus; the built-in corpus when --corpus is absent.
    Verify {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long = "nmax")]
        nmax: Option<usize>,
    },
    /// Test every residue class mod m for divisibility of the coefficients.
    Scan {
        expr: String,
        #[arg(long = "m")]
        m: usize,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long = "nmax", default_value_t = DEFAULT_NMAX)]
        nmax: usize,
    },
}

fn run(command: Command) -> Result<Status, CliError> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let status = match command {
        Command::Expand { expr, order, modulus } => {
            cli::expand(&mut out, &expr, order, modulus).map(|_| Status::Pass)?
        }
        Command::Dissect { expr, m, j, order, modulus } => {
            cli::dissect(&mut out, &expr, m, j, order, modulus).map(|_| Status::Pass)?
        }
        Command::Oracle { kind, n_max, nmax } => {
            let n = nmax.or(n_max).ok_or_else(|| CliError::Usage("oracle needs a table size".into()))?;
            cli::oracle(&mut out, &kind, n).map(|_| Status::Pass)?
        }
        Command::Verify { corpus, only, order, nmax } => {
            let text = match corpus {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
                None => SHIPPED_CORPUS.to_string(),
            };
            cli::verify(&mut out, &mut io::stderr(), &text, only.as_deref(), &RunOptions { order, nmax })?
        }
        Command::Scan { expr, m, modulus, nmax } => {
            cli::scan(&mut out, &expr, m, modulus, nmax)?;
            Status::Pass
        }
    };
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::Error as u8)
        }
    }
}
