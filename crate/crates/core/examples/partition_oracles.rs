//! Dynamic-programming partition counts, set against the generating
//! functions they should match.
//!
//! cargo run --example partition_oracles [n]

use num_bigint::BigInt;
use qseries::oracles::OracleKind;
use qseries::{evaluate, parse};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);

    println!("{:>4} {}", "n", OracleKind::ALL.map(|k| format!("{:>12}", k.name())).join(""));
    let tables = OracleKind::ALL.map(|k| k.table(n));
    for i in 0..=n {
        let row: String = tables.iter().map(|t| format!("{:>12}", t.values()[i])).collect();
        println!("{i:>4} {row}");
    }

    for (src, kind) in [
        ("1/f1", OracleKind::P),
        ("f2/f1^2", OracleKind::Overp),
        ("f3/(f1*f6)", OracleKind::AMod6),
        ("f3/(f1*f6)", OracleKind::AOddTwice),
        ("f2^2*f3*f12/(f1*f4*f6)", OracleKind::G),
    ] {
        let s = evaluate(&parse(src).unwrap(), n).unwrap();
        let same = s.coeffs().iter().zip(kind.table(n).values()).all(|(c, v)| *c == BigInt::from(v.clone()));
        println!("{src:<24} vs {:<11} {}", kind.name(), if same { "agree" } else { "DIFFER" });
    }
}
