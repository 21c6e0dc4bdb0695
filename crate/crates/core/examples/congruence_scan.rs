//! Scans every residue class mod m for coefficients divisible by a modulus.
//!
//! cargo run --example congruence_scan -- "f3/(f1*f6)" 4 2 2000

use qseries::parse;
use qseries::verify::check_congruence_progression;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let src = args.first().map(String::as_str).unwrap_or("f3/(f1*f6)");
    let m: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let modulus: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(2);
    let n_max: usize = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(2000);

    let base = parse(src).unwrap_or_else(|e| panic!("{src}: {e}"));
    println!("coefficients of {base} at q^({m}n + j) mod {modulus}, through q^{n_max}");
    for j in 0..m {
        let r = check_congruence_progression(&format!("j={j}"), &base, m, j, modulus, n_max).expect("evaluates");
        match &r.first_mismatch {
            None => println!("  j={j}: all divisible ({} terms)", r.checked_up_to + 1),
            Some(w) => println!("  j={j}: witness n={} has coefficient {}", w.index, w.lhs),
        }
    }
}
