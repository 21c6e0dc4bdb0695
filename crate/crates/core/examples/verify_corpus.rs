//! Runs an identity corpus in-process: the shipped one, or a file given
//! on the command line.
//!
//! cargo run --example verify_corpus [path]

use qseries::corpus::{parse_corpus, run_corpus, RunOptions};

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}")),
        None => qseries::SHIPPED_CORPUS.to_string(),
    };
    let entries = match parse_corpus(&text) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let opts = RunOptions::default();
    let (mut pass, mut other) = (0, 0);
    for (entry, result) in entries.iter().zip(run_corpus(&entries, &opts)) {
        for r in result.unwrap_or_else(|e| panic!("{}: {e}", entry.name)) {
            let expected = r.passed() != entry.expect_fail;
            if expected {
                pass += 1;
            } else {
                other += 1;
            }
            let note = entry.reference.as_deref().unwrap_or("");
            println!("{:<6} {:<40} {note}", if r.passed() { "ok" } else { "fails" }, r.name);
        }
    }
    println!("{pass} as recorded, {other} unexpected");
}
