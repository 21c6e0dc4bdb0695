//! Truncated formal power series in one indeterminate `q` with exact
//! integer coefficients.
//!
//! A [`Series`] of order `N` knows the coefficients of `q^0..=q^N` and
//! nothing beyond. Binary operations truncate to the smaller order, so a
//! result never claims a coefficient that its inputs did not determine.

use std::fmt;
use std::ops;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term {constant} is not a unit (must be 1 or -1)")]
    NotAUnit { constant: BigInt },
    #[error("coefficient of q^{index} is unknown (series known to order {order})")]
    OutOfRange { index: usize, order: usize },
    #[error("division would need negative powers of q (dividend valuation {dividend}, divisor valuation {divisor})")]
    NegativeValuation { dividend: usize, divisor: usize },
    #[error("division is not exact over the integers at q^{index}")]
    NonExactDivision { index: usize },
    #[error("divisor vanishes to order {order}")]
    ZeroDivisor { order: usize },
}

/// A power series `c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Builds a series whose order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty: every series knows at least its
    /// constant term.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(BigInt::one(), order)
    }

    pub fn constant(c: BigInt, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `q^k` known to `order`; zero if `k > order`.
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = BigInt::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OutOfRange { index: n, order: self.order() })
    }

    /// Index of the first nonzero coefficient, or `None` if the series is
    /// zero as far as it is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn nonzero_terms(&self) -> usize {
        nonzero_count(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Forgets every coefficient above `order`. Panics if that would need
    /// coefficients the series does not have.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot raise the order of a series by truncation");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order].iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order].iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Series { coeffs }
    }

    pub fn neg(&self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let a = &self.coeffs[..=order];
        let b = &other.coeffs[..=order];
        // Iterate over the sparser operand; eta products are mostly zeros.
        let (sparse, dense) = if nonzero_count(a) <= nonzero_count(b) { (a, b) } else { (b, a) };
        if let Some(coeffs) = mul_small(sparse, dense) {
            return Series { coeffs };
        }
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, x) in sparse.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (o, y) in out[i..].iter_mut().zip(dense) {
                if !y.is_zero() {
                    *o += x * y;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Reciprocal of a series whose constant term is `±1`.
    pub fn invert(&self) -> Result<Series, SeriesError> {
        Series::one(self.order()).div_unit(self)
    }

    /// `self / divisor` where the divisor's constant term is `±1`.
    ///
    /// Runs the reciprocal recurrence over the divisor's nonzero terms
    /// only, so dividing by a single `f_r` costs `O(N sqrt(N))`.
    pub fn div_unit(&self, divisor: &Series) -> Result<Series, SeriesError> {
        let lead = &divisor.coeffs[0];
        if !lead.abs().is_one() {
            return Err(SeriesError::NotAUnit { constant: lead.clone() });
        }
        let order = self.order().min(divisor.order());
        let terms: Vec<(usize, &BigInt)> = divisor.coeffs[1..=order]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k + 1, c))
            .collect();
        let negate = lead.is_negative();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for &(k, c) in terms.iter().take_while(|(k, _)| *k <= n) {
                let prev = &out[n - k];
                if !prev.is_zero() {
                    acc -= c * prev;
                }
            }
            out.push(if negate { -acc } else { acc });
        }
        Ok(Series { coeffs: out })
    }

    /// Exact quotient `self / divisor` over the integers.
    ///
    /// A divisor with valuation `v > 0` is divided out as `q^v`, which
    /// requires the dividend to vanish below `q^v` and lowers the result
    /// order by `v`. The remaining quotient must be exact term by term.
    pub fn div_exact(&self, divisor: &Series) -> Result<Series, SeriesError> {
        let order = self.order().min(divisor.order());
        let v = divisor.coeffs[..=order].iter().position(|c| !c.is_zero()).ok_or(SeriesError::ZeroDivisor { order })?;
        if let Some(dv) = self.coeffs[..v].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::NegativeValuation { dividend: dv, divisor: v });
        }
        let num = &self.coeffs[v..=order];
        let den = &divisor.coeffs[v..=order];
        let lead = &den[0];
        if lead.abs().is_one() {
            return Series { coeffs: num.to_vec() }.div_unit(&Series { coeffs: den.to_vec() });
        }
        let terms: Vec<(usize, &BigInt)> = den.iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(num.len());
        for n in 0..num.len() {
            let mut acc = num[n].clone();
            for &(k, c) in terms.iter().take_while(|(k, _)| *k <= n) {
                acc -= c * &out[n - k];
            }
            let (quot, rem) = acc.div_rem(lead);
            if !rem.is_zero() {
                return Err(SeriesError::NonExactDivision { index: n });
            }
            out.push(quot);
        }
        Ok(Series { coeffs: out })
    }

    /// `self^k`; negative `k` requires a unit constant term.
    pub fn pow(&self, k: i64) -> Result<Series, SeriesError> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Multiplies by `q^s`, keeping the order.
    pub fn shift(&self, s: usize) -> Series {
        let order = self.order();
        let mut out = Series::zero(order);
        if s <= order {
            out.coeffs[s..].clone_from_slice(&self.coeffs[..=order - s]);
        }
        out
    }

    /// Substitutes `q -> q^m`.
    ///
    /// The result is known through `q^{m*N + m - 1}`: the next coefficient
    /// that could be nonzero sits at `q^{m*(N+1)}`.
    pub fn inflate(&self, m: usize) -> Series {
        assert!(m >= 1, "inflation factor must be positive");
        let mut out = Series::zero(m * self.order() + m - 1);
        for (n, c) in self.coeffs.iter().enumerate() {
            out.coeffs[m * n] = c.clone();
        }
        out
    }

    /// Coefficients on the progression `m*n + j`, re-indexed by `n`.
    /// The result has order `floor((N - j) / m)`.
    pub fn extract(&self, m: usize, j: usize) -> Result<Series, SeriesError> {
        assert!(m >= 1 && j < m, "extract needs 0 <= j < m");
        if j > self.order() {
            return Err(SeriesError::OutOfRange { index: j, order: self.order() });
        }
        let coeffs = self.coeffs[j..].iter().step_by(m).cloned().collect();
        Ok(Series { coeffs })
    }

    /// Least non-negative residues modulo `modulus`.
    pub fn reduce_mod(&self, modulus: u64) -> Series {
        assert!(modulus >= 2, "modulus must be at least 2");
        let m = BigInt::from(modulus);
        Series { coeffs: self.coeffs.iter().map(|c| c.mod_floor(&m)).collect() }
    }
}

fn nonzero_count(c: &[BigInt]) -> usize {
    c.iter().filter(|x| !x.is_zero()).count()
}

/// Machine-word convolution, used when every product sum provably fits
/// in an `i128`.
fn mul_small(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let a: Vec<i64> = a.iter().map(ToPrimitive::to_i64).collect::<Option<_>>()?;
    let b: Vec<i64> = b.iter().map(ToPrimitive::to_i64).collect::<Option<_>>()?;
    let bits = |v: &[i64]| v.iter().map(|x| 64 - x.unsigned_abs().leading_zeros()).max().unwrap_or(0);
    let len_bits = usize::BITS - a.len().leading_zeros();
    if bits(&a) + bits(&b) + len_bits > 126 {
        return None;
    }
    let mut out = vec![0i128; a.len()];
    for (i, &x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
        for (o, &y) in out[i..].iter_mut().zip(&b) {
            *o += x as i128 * y as i128;
        }
    }
    Some(out.into_iter().map(BigInt::from).collect())
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series{:?}", self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>())
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl ops::Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl ops::Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl ops::Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl ops::Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> Series {
        Series::from_i64s(c)
    }

    #[test]
    fn add_cancels_and_truncates() {
        assert_eq!(s(&[1, 1]).add(&s(&[1, -1])), s(&[2, 0]));
        assert_eq!(s(&[1, -1, -1]).add(&Series::zero(2)), s(&[1, -1, -1]));
        let r = s(&[1, 2, 3]).add(&s(&[0, 1]));
        assert_eq!(r, s(&[1, 3]));
        assert_eq!(r.order(), 1);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, -1, 0, 0]).mul(&s(&[1, 1, 1, 1])), s(&[1, 0, 0, 0]));
        let x = s(&[3, -2, 7]);
        assert_eq!(x.mul(&Series::one(2)), x);
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, 1, 0])), s(&[1, 2, 1]));
    }

    #[test]
    fn mul_big_path_matches_small_path() {
        let big = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62);
        let a = Series::new(vec![big.clone(), BigInt::from(-3), big.clone()]);
        let b = s(&[2, 5, -1]);
        let r = a.mul(&b);
        assert_eq!(r.coeffs()[0], &big * 2);
        assert_eq!(r.coeffs()[1], &big * 5 - 6);
        assert_eq!(r.coeffs()[2], -&big - 15 + &big * 2);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(s(&[1, -1, 0, 0, 0]).invert().unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(Series::one(3).invert().unwrap(), Series::one(3));
        assert_eq!(s(&[-1, 1]).invert().unwrap(), s(&[-1, -1]));
        assert!(matches!(s(&[2, 1]).invert(), Err(SeriesError::NotAUnit { .. })));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(s(&[1, 1, 0]).pow(2).unwrap(), s(&[1, 2, 1]));
        assert_eq!(s(&[5, 1, 0]).pow(0).unwrap(), Series::one(2));
        assert_eq!(s(&[1, -1, 0, 0]).pow(-1).unwrap(), s(&[1, 1, 1, 1]));
        assert!(s(&[3, 1]).pow(-2).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(s(&[1, 1, 0, 0, 0]).shift(2), s(&[0, 0, 1, 1, 0]));
        assert_eq!(s(&[4, 5]).shift(0), s(&[4, 5]));
        assert_eq!(Series::one(3).shift(5), Series::zero(3));
    }

    #[test]
    fn inflate_examples() {
        let r = s(&[1, 1]).inflate(3);
        assert_eq!(&r.coeffs()[..4], s(&[1, 0, 0, 1]).coeffs());
        assert!(r.coeffs()[4..].iter().all(Zero::is_zero));
        assert_eq!(s(&[1, 2, 3]).inflate(1), s(&[1, 2, 3]));
        assert_eq!(s(&[1, 1, 1]).inflate(2).truncate(4), s(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn extract_examples() {
        let ramp = Series::new((0..=9).map(BigInt::from).collect());
        assert_eq!(ramp.extract(2, 1).unwrap(), s(&[1, 3, 5, 7, 9]));
        assert_eq!(ramp.extract(1, 0).unwrap(), ramp);
        assert_eq!(ramp.inflate(3).extract(3, 0).unwrap(), ramp);
        assert_eq!(ramp.extract(4, 3).unwrap().order(), 1);
        assert!(s(&[1]).extract(2, 1).is_err());
    }

    #[test]
    fn reduce_mod_examples() {
        assert_eq!(s(&[2, 3, 4]).reduce_mod(2), s(&[0, 1, 0]));
        assert_eq!(s(&[-1, 5]).reduce_mod(3), s(&[2, 2]));
        let r = s(&[-7, 13, 0, 22]).reduce_mod(5);
        assert_eq!(r.reduce_mod(5), r);
    }

    #[test]
    fn coeff_access() {
        let x = s(&[1, -1, -1]);
        assert_eq!(x.coeff(2).unwrap(), &BigInt::from(-1));
        assert_eq!(Series::one(0).coeff(0).unwrap(), &BigInt::one());
        assert_eq!(s(&[1, 0, 0, 0]).coeff(4), Err(SeriesError::OutOfRange { index: 4, order: 3 }));
    }

    #[test]
    fn exact_division_shifts_out_q() {
        // (q + q^2) / q = 1 + q, order drops by one
        let r = s(&[0, 1, 1, 0]).div_exact(&s(&[0, 1, 0, 0])).unwrap();
        assert_eq!(r, s(&[1, 1, 0]));
        // (2 + 4q) / 2
        assert_eq!(s(&[2, 4]).div_exact(&s(&[2, 0])).unwrap(), s(&[1, 2]));
        assert_eq!(s(&[1, 1]).div_exact(&s(&[2, 0])), Err(SeriesError::NonExactDivision { index: 0 }));
        assert!(matches!(s(&[1, 0]).div_exact(&s(&[0, 1])), Err(SeriesError::NegativeValuation { .. })));
        assert!(matches!(s(&[1, 0]).div_exact(&s(&[0, 0])), Err(SeriesError::ZeroDivisor { .. })));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -1, -2, 0]).to_string(), "1 - q - 2q^2 + O(q^4)");
        assert_eq!(Series::zero(1).to_string(), "0 + O(q^2)");
    }
}
