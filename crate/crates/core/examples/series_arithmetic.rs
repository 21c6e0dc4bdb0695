//! Exact truncated power series: ring operations, inversion and the
//! dissection primitives.
//!
//! cargo run --example series_arithmetic

use num_bigint::BigInt;
use qseries::Series;

fn main() -> Result<(), qseries::SeriesError> {
    let a = Series::from_i64s(&[1, -1, -1, 0, 0, 1, 0, 1]);
    let b = Series::from_i64s(&[1, 2, 0, -3, 0, 0, 0, 0]);
    println!("a       = {a}");
    println!("b       = {b}");
    println!("a + b   = {}", &a + &b);
    println!("a * b   = {}", &a * &b);
    println!("3a      = {}", a.scale(&BigInt::from(3)));

    // a has constant term 1, so it is invertible in the power series ring
    let inv = a.invert()?;
    println!("1/a     = {inv}");
    println!("a * 1/a = {}", &a * &inv);
    println!("a^-2    = {}", a.pow(-2)?);

    // mixing orders keeps only what both operands determine
    let short = Series::from_i64s(&[1, 1, 1]);
    println!("order of (a * short) = {}", (&a * &short).order());

    // exact division by a series with positive valuation
    let q2a = a.shift(2);
    let q2 = Series::monomial(2, 7);
    println!("(q^2 a) / q^2 = {}", q2a.div_exact(&q2)?);

    // dissections and their inverse
    for j in 0..2 {
        println!("extract(a, 2, {j}) = {}", a.extract(2, j)?);
    }
    println!("inflate(b, 3) = {}", b.truncate(2).inflate(3));
    println!("a mod 2 = {}", a.reduce_mod(2));
    Ok(())
}
