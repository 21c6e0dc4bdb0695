//! f_{ap}^b = f_a^{bp} mod p for primes p, and what goes wrong for a
//! composite modulus.
//!
//! cargo run --example frobenius

use qseries::verify::{check_frobenius, check_power_congruence};

fn main() {
    for p in [2, 3, 5, 7] {
        for a in 1..=3 {
            for b in 1..=2 {
                println!("{}", check_frobenius(p, a, b, 200).unwrap());
            }
        }
    }
    println!("{}", check_power_congruence("f2 vs f1^2 mod 4", (2, 1), (1, 2), 4, 200).unwrap());
    match check_frobenius(9, 1, 1, 10) {
        Ok(r) => println!("{r}"),
        Err(e) => println!("p = 9: {e}"),
    }
}
