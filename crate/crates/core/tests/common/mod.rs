//! Independent reference computations shared by the integration tests.
//! Nothing here touches the series engine or the DP oracles.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;

/// Every partition of `n` as a non-increasing list of parts.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn multiplicity(parts: &[usize], size: usize) -> usize {
    parts.iter().filter(|&&p| p == size).count()
}

pub fn p_brute(n: usize) -> u64 {
    partitions(n).len() as u64
}

/// Counts overpartitions by listing, for each partition, every subset of
/// its distinct part sizes whose first occurrence is overlined.
pub fn overp_brute(n: usize) -> u64 {
    let mut count = 0;
    for parts in partitions(n) {
        let mut distinct = parts.clone();
        distinct.dedup();
        for mask in 0u32..(1 << distinct.len()) {
            let overlined: Vec<usize> =
                (0..distinct.len()).filter(|i| mask >> i & 1 == 1).map(|i| distinct[i]).collect();
            debug_assert!(overlined.iter().all(|s| parts.contains(s)));
            count += 1;
        }
    }
    count
}

pub fn a_mod6_brute(n: usize) -> u64 {
    partitions(n).iter().filter(|parts| parts.iter().all(|p| p % 6 != 3)).count() as u64
}

pub fn a_oddtwice_brute(n: usize) -> u64 {
    partitions(n)
        .iter()
        .filter(|parts| parts.iter().filter(|p| *p % 2 == 1).all(|&p| multiplicity(parts, p) <= 2))
        .count() as u64
}

/// `∏_{i >= 1} (1 - q^{r i})` multiplied out factor by factor, truncated
/// to order `n`.
pub fn naive_f(r: usize, n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::from(1);
    let mut step = r;
    while step <= n {
        for k in (step..=n).rev() {
            let prev = c[k - step].clone();
            c[k] -= prev;
        }
        step += r;
    }
    c
}

/// Plain `O(n^2)` Cauchy product.
pub fn naive_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

/// Exponents `3k^2 + 2k <= limit` for every integer `k`, by scanning `k`.
pub fn theta_exponents(limit: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (-200..=200).map(|k: i64| 3 * k * k + 2 * k).filter(|&e| e <= limit).collect();
    assert!(3 * 200 * 200 - 400 > limit, "scan range too small for limit");
    v.sort_unstable();
    v.dedup();
    v
}

pub mod strategies;
