//! The lacunary series with exponents 3k^2 + 2k, and the parity relation
//! a(n) = sum p(k) g(n - 12k) mod 2 that it yields.
//!
//! cargo run --example theta_convolution [n_max]

use qseries::oracles::{a_oracle, g_oracle, p_oracle, ADefinition};
use qseries::verify::{check_convolution, check_empty_support};
use qseries::{evaluate, parse};

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);

    let g = evaluate(&parse("f2^2*f3*f12/(f1*f4*f6)").unwrap(), 100).unwrap();
    println!("G = {g}");

    let a = a_oracle(30, ADefinition::Mod6);
    let p = p_oracle(2);
    let gt = g_oracle(30);
    for n in [0, 2, 12, 13, 25] {
        let terms: Vec<String> =
            (0..=n / 12).filter(|&k| gt.values()[n - 12 * k] == 1u8.into()).map(|k| format!("p({k})")).collect();
        let sum: u64 = (0..=n / 12)
            .filter(|&k| gt.values()[n - 12 * k] == 1u8.into())
            .map(|k| u64::try_from(&p.values()[k]).unwrap())
            .sum();
        println!("a({n}) = {}, sum [{}] = {sum}", a.values()[n], terms.join(" + "));
    }

    println!("{}", check_convolution(n_max));
    for j in 0..4 {
        println!("{}", check_empty_support(4, j, n_max).unwrap());
    }
}
