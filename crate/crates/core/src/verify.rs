//! Coefficientwise checks of identities and congruences to a finite order.
//!
//! Every verdict is "holds through `q^N`", never a proof.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::eta::expand_f;
use crate::expr::{evaluate, Expr};
use crate::oracles::{a_oracle, g_oracle, p_oracle, ADefinition, OracleKind};
use crate::series::{Series, SeriesError};

/// Order used for identities when an entry does not give one.
pub const DEFAULT_ORDER: usize = 500;
/// Largest index scanned by congruence checks by default.
pub const DEFAULT_NMAX: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lhs => "left-hand side",
            Side::Rhs => "right-hand side",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{side}: {source}")]
    Eval { side: Side, source: SeriesError },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid check parameters: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Equality,
    Congruence { modulus: u64 },
}

/// `lhs = rhs` (or `lhs ≡ rhs mod M`) to be checked through `q^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub kind: CheckKind,
    pub order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Outcome of one check. A report fails exactly when it carries a
/// mismatch, which is always the smallest failing index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checked_up_to: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl Report {
    pub fn verdict(&self) -> Verdict {
        if self.first_mismatch.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Report {
        self.name = name.into();
        self
    }

    /// Scans `pairs` in index order and stops at the first disagreement.
    fn scan<I>(name: &str, pairs: I) -> Report
    where
        I: IntoIterator<Item = (usize, BigInt, BigInt)>,
    {
        let mut last = 0;
        for (index, lhs, rhs) in pairs {
            if lhs != rhs {
                return Report {
                    name: name.to_string(),
                    checked_up_to: index,
                    first_mismatch: Some(Mismatch { index, lhs, rhs }),
                };
            }
            last = index;
        }
        Report { name: name.to_string(), checked_up_to: last, first_mismatch: None }
    }
}

/// `name<TAB>verdict<TAB>checked_up_to<TAB>mismatch_index<TAB>lhs<TAB>rhs`,
/// with the last three fields empty on a pass.
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.record(&self.verdict().to_string()))
    }
}

impl Report {
    /// The tab-separated record with a custom verdict label.
    pub fn record(&self, verdict: &str) -> String {
        let tail = match &self.first_mismatch {
            Some(m) => format!("{}\t{}\t{}", m.index, m.lhs, m.rhs),
            None => "\t\t".to_string(),
        };
        format!("{}\t{}\t{}\t{}", self.name, verdict, self.checked_up_to, tail)
    }
}

fn compare(name: &str, lhs: &Series, rhs: &Series) -> Report {
    let pairs = lhs.coeffs().iter().zip(rhs.coeffs()).enumerate().map(|(i, (a, b))| (i, a.clone(), b.clone()));
    Report::scan(name, pairs)
}

/// Evaluates both sides to the check's order and compares them over the
/// range both sides determine. Sides containing `extract(·, m, j)` are
/// expanded internally to order `m*N + j`, so the comparison still
/// reaches `q^N`.
pub fn check_identity(c: &IdentityCheck) -> Result<Report, VerifyError> {
    let lhs = evaluate(&c.lhs, c.order).map_err(|source| VerifyError::Eval { side: Side::Lhs, source })?;
    let rhs = evaluate(&c.rhs, c.order).map_err(|source| VerifyError::Eval { side: Side::Rhs, source })?;
    Ok(match c.kind {
        CheckKind::Equality => compare(&c.name, &lhs, &rhs),
        CheckKind::Congruence { modulus } => {
            if modulus < 2 {
                return Err(VerifyError::Invalid(format!("modulus {modulus} < 2")));
            }
            compare(&c.name, &lhs.reduce_mod(modulus), &rhs.reduce_mod(modulus))
        }
    })
}

/// Checks that every coefficient of `q^{m*n + j}` in `base` with
/// `m*n + j <= n_max` is divisible by `modulus`. Indices in the report are
/// the progression index `n`.
pub fn check_congruence_progression(
    name: &str,
    base: &Expr,
    m: usize,
    j: usize,
    modulus: u64,
    n_max: usize,
) -> Result<Report, VerifyError> {
    if m == 0 || j >= m {
        return Err(VerifyError::Invalid(format!("need 0 <= j < m, got m = {m}, j = {j}")));
    }
    if modulus < 2 {
        return Err(VerifyError::Invalid(format!("modulus {modulus} < 2")));
    }
    if j > n_max {
        return Ok(Report { name: name.to_string(), checked_up_to: 0, first_mismatch: None });
    }
    let s = evaluate(base, n_max).map_err(|source| VerifyError::Eval { side: Side::Lhs, source })?;
    let modulus = BigInt::from(modulus);
    let zero = BigInt::zero();
    let pairs = s.extract(m, j).expect("j <= n_max").into_coeffs().into_iter().enumerate().map(|(n, c)| {
        let r = c.mod_floor(&modulus);
        (n, if r.is_zero() { zero.clone() } else { c }, zero.clone())
    });
    Ok(Report::scan(name, pairs))
}

/// Deterministic trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `f_{r1}^{e1} ≡ f_{r2}^{e2} (mod modulus)` through `q^order`.
pub fn check_power_congruence(
    name: &str,
    (r1, e1): (usize, i64),
    (r2, e2): (usize, i64),
    modulus: u64,
    order: usize,
) -> Result<Report, VerifyError> {
    let lhs = expand_f(r1, order).pow(e1).map_err(|source| VerifyError::Eval { side: Side::Lhs, source })?;
    let rhs = expand_f(r2, order).pow(e2).map_err(|source| VerifyError::Eval { side: Side::Rhs, source })?;
    Ok(compare(name, &lhs.reduce_mod(modulus), &rhs.reduce_mod(modulus)))
}

/// `f_{ap}^b ≡ f_a^{bp} (mod p)` through `q^order`, for prime `p`.
pub fn check_frobenius(p: u64, a: usize, b: u32, order: usize) -> Result<Report, VerifyError> {
    if !is_prime(p) {
        return Err(VerifyError::NotPrime(p));
    }
    if a == 0 || b == 0 {
        return Err(VerifyError::Invalid(format!("need a, b >= 1, got a = {a}, b = {b}")));
    }
    let name = format!("frobenius[p={p},a={a},b={b}]");
    check_power_congruence(&name, (a * p as usize, i64::from(b)), (a, i64::from(b) * p as i64), p, order)
}

/// `a(n) ≡ Σ_k p(k) g(n - 12k) (mod 2)` for `n <= n_max`, from the oracle
/// tables alone. Report values are the two parities.
pub fn check_convolution(n_max: usize) -> Report {
    let a = a_oracle(n_max, ADefinition::Mod6);
    let p = p_oracle(n_max / 12);
    let g = g_oracle(n_max);
    let pairs = (0..=n_max).map(|n| {
        let lhs = a.values()[n].is_odd();
        let rhs =
            (0..=n / 12).filter(|&k| !g.values()[n - 12 * k].is_zero() && p.values()[k].is_odd()).count() % 2 == 1;
        (n, BigInt::from(lhs as u8), BigInt::from(rhs as u8))
    });
    Report::scan("convolution", pairs)
}

/// `g(n) = 0` for every `n <= n_max` with `n ≡ j (mod m)`. Indices in the
/// report are the raw exponents `n`.
pub fn check_empty_support(m: usize, j: usize, n_max: usize) -> Result<Report, VerifyError> {
    if m == 0 || j >= m {
        return Err(VerifyError::Invalid(format!("need 0 <= j < m, got m = {m}, j = {j}")));
    }
    let g = g_oracle(n_max);
    let pairs = (j..=n_max).step_by(m).map(|n| (n, BigInt::from(g.values()[n].clone()), BigInt::zero()));
    Ok(Report::scan(&format!("empty-support[m={m},j={j}]"), pairs))
}

/// Compares the coefficients of `expr` with an oracle table through
/// `q^order`.
pub fn check_oracle_match(name: &str, expr: &Expr, oracle: OracleKind, order: usize) -> Result<Report, VerifyError> {
    let s = evaluate(expr, order).map_err(|source| VerifyError::Eval { side: Side::Lhs, source })?;
    let table = oracle.table(order);
    let pairs =
        s.coeffs().iter().zip(table.values()).enumerate().map(|(i, (c, v))| (i, c.clone(), BigInt::from(v.clone())));
    Ok(Report::scan(name, pairs))
}
