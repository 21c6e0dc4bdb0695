//! Expansion of the Euler products `f_r = (1 - q^r)(1 - q^{2r})(1 - q^{3r})...`.

use num_bigint::BigInt;

use crate::series::Series;

/// Iterates `(exponent, sign)` for the nonzero terms of `f_1`, in
/// increasing exponent order: `1 - q - q^2 + q^5 + q^7 - q^12 - ...`.
///
/// These are the generalized pentagonal numbers `k(3k - 1)/2` for
/// `k = 0, 1, -1, 2, -2, ...` with sign `(-1)^k`.
pub fn pentagonal_terms() -> impl Iterator<Item = (usize, i64)> {
    std::iter::once((0, 1)).chain((1usize..).flat_map(|k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        [(k * (3 * k - 1) / 2, sign), (k * (3 * k + 1) / 2, sign)]
    }))
}

/// `f_r` truncated to order `n`.
pub fn expand_f(r: usize, n: usize) -> Series {
    assert!(r >= 1, "f_r needs r >= 1");
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (e, sign) in pentagonal_terms().map(|(e, s)| (e * r, s)).take_while(|&(e, _)| e <= n) {
        coeffs[e] = BigInt::from(sign);
    }
    Series::new(coeffs)
}
