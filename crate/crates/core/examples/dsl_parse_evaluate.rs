//! Parsing eta-quotient expressions, printing them canonically and
//! evaluating them to a chosen order.
//!
//! cargo run --example dsl_parse_evaluate -- "f2^2/f1" 10

use qseries::{evaluate, parse};

fn main() {
    let mut args = std::env::args().skip(1);
    let src = args.next().unwrap_or_else(|| "2 q f4^2*f16^2/(f2^5*f8) + f8^5/(f2^5*f16^2)".into());
    let order: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);

    let expr = match parse(&src) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{src}\n{}^ {e}", " ".repeat(e.offset()));
            std::process::exit(2);
        }
    };
    println!("input:     {src}");
    println!("canonical: {expr}");
    match evaluate(&expr, order) {
        Ok(s) => println!("value:     {s}"),
        Err(e) => {
            eprintln!("cannot evaluate: {e}");
            std::process::exit(2);
        }
    }

    for bad in ["f0", "f1 +", "1/q", "f1^65"] {
        let outcome = parse(bad).map_err(|e| e.to_string()).and_then(|e| evaluate(&e, 5).map_err(|e| e.to_string()));
        println!("{bad:>6} -> {}", outcome.map(|s| s.to_string()).unwrap_or_else(|e| e));
    }
}
