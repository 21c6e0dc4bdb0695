//! Expanding the Euler products f_r through the pentagonal number theorem.
//!
//! cargo run --example eta_products [order]

use qseries::eta::{expand_f, pentagonal_terms};

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(40);

    let exps: Vec<String> = pentagonal_terms()
        .take_while(|&(e, _)| e <= order)
        .map(|(e, s)| format!("{}q^{e}", if s < 0 { "-" } else { "+" }))
        .collect();
    println!("f1 = {} + O(q^{})", exps.join(" "), order + 1);

    for r in [1, 2, 3, 6] {
        let f = expand_f(r, order);
        println!("f{r}: {} nonzero terms through q^{order}", f.nonzero_terms());
    }

    let f1 = expand_f(1, 12);
    println!("f1 to q^12 = {f1}");
    println!("1/f1 to q^12 = {}", f1.invert().expect("f1 is a unit"));
}
