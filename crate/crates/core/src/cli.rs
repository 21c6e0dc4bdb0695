//! Command implementations behind the `qseries` binary. Each writes plain
//! text to the given sink so the commands can be driven from tests.

use std::io::{self, Write};

use thiserror::Error;

use crate::corpus::{parse_corpus, run_corpus, CorpusError, RunOptions};
use crate::expr::{evaluate, parse, Expr, ParseError};
use crate::oracles::OracleKind;
use crate::series::{Series, SeriesError};
use crate::verify::{check_congruence_progression, VerifyError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error in {src:?}: {source}")]
    Parse { src: String, source: ParseError },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("corpus {0}")]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Process exit status for the three outcomes the binary distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Fail = 1,
    Error = 2,
}

fn parse_expr(src: &str) -> Result<Expr, CliError> {
    parse(src).map_err(|source| CliError::Parse { src: src.to_string(), source })
}

fn write_coeffs(out: &mut impl Write, s: &Series, modulus: Option<u64>) -> Result<(), CliError> {
    let s = match modulus {
        Some(m) if m < 2 => return Err(CliError::Usage(format!("--mod must be at least 2, got {m}"))),
        Some(m) => s.reduce_mod(m),
        None => s.clone(),
    };
    for (n, c) in s.coeffs().iter().enumerate() {
        writeln!(out, "{n}\t{c}")?;
    }
    Ok(())
}

pub fn expand(out: &mut impl Write, src: &str, order: usize, modulus: Option<u64>) -> Result<(), CliError> {
    let s = evaluate(&parse_expr(src)?, order)?;
    write_coeffs(out, &s, modulus)
}

/// Prints `n<TAB>c(m*n + j)` for `n = 0..=order`.
pub fn dissect(
    out: &mut impl Write,
    src: &str,
    m: usize,
    j: usize,
    order: usize,
    modulus: Option<u64>,
) -> Result<(), CliError> {
    if m == 0 || j >= m {
        return Err(CliError::Usage(format!("need 0 <= j < m, got m = {m}, j = {j}")));
    }
    let s = evaluate(&parse_expr(src)?.extract(m, j), order)?;
    write_coeffs(out, &s, modulus)
}

pub fn oracle(out: &mut impl Write, kind: &str, n_max: usize) -> Result<(), CliError> {
    let kind: OracleKind = kind.parse().map_err(CliError::Usage)?;
    for (n, v) in kind.table(n_max).values().iter().enumerate() {
        writeln!(out, "{n}\t{v}")?;
    }
    Ok(())
}

/// One report record per residue `j`, named `j=<j>`.
pub fn scan(out: &mut impl Write, src: &str, m: usize, modulus: u64, n_max: usize) -> Result<(), CliError> {
    if m == 0 {
        return Err(CliError::Usage("--m must be at least 1".into()));
    }
    if modulus < 2 {
        return Err(CliError::Usage(format!("--mod must be at least 2, got {modulus}")));
    }
    let base = parse_expr(src)?;
    for j in 0..m {
        let r = check_congruence_progression(&format!("j={j}"), &base, m, j, modulus, n_max)?;
        writeln!(out, "{r}")?;
    }
    Ok(())
}

/// Runs a corpus and prints one record per report, in corpus order.
/// Entries that fail to evaluate print an `ERROR` record here and a
/// diagnostic on `err`. Entries marked `expect = "fail"` print `XFAIL`
/// when they fail and `XPASS` (which counts as a failure) when they hold.
pub fn verify(
    out: &mut impl Write,
    err: &mut impl Write,
    corpus: &str,
    only: Option<&str>,
    opts: &RunOptions,
) -> Result<Status, CliError> {
    let mut entries = parse_corpus(corpus)?;
    if let Some(name) = only {
        entries.retain(|e| e.name == name);
        if entries.is_empty() {
            return Err(CliError::Usage(format!("no corpus entry named {name:?}")));
        }
    }
    let mut status = Status::Pass;
    for (entry, result) in entries.iter().zip(run_corpus(&entries, opts)) {
        match result {
            Ok(reports) => {
                for r in reports {
                    let (label, bad) = match (entry.expect_fail, r.passed()) {
                        (false, true) => ("PASS", false),
                        (false, false) => ("FAIL", true),
                        (true, false) => ("XFAIL", false),
                        (true, true) => ("XPASS", true),
                    };
                    if bad && status == Status::Pass {
                        status = Status::Fail;
                    }
                    writeln!(out, "{}", r.record(label))?;
                }
            }
            Err(e) => {
                writeln!(out, "{}\tERROR\t\t\t\t", entry.name)?;
                writeln!(err, "{} (line {}): {e}", entry.name, entry.line)?;
                status = Status::Error;
            }
        }
    }
    Ok(status)
}
