use num_traits::{One, Signed};

use super::ast::Expr;
use crate::eta::expand_f;
use crate::series::{Series, SeriesError};

/// How far past the requested order a vanishing divisor is re-expanded
/// before giving up on finding its leading term.
const DIVISOR_PROBE: usize = 64;

/// Expands `expr` as a series known to order `n`.
///
/// Products and quotients are flattened so that each `f_r` factor is
/// applied by sparse multiplication or division. Divisors whose constant
/// term is not `±1` are collected and divided out exactly at the end; when
/// such a divisor starts at `q^v`, everything is re-expanded to order
/// `n + v` so the quotient is still known to order `n`.
pub fn evaluate(expr: &Expr, n: usize) -> Result<Series, SeriesError> {
    match expr {
        Expr::Int(c) => Ok(Series::constant(c.clone(), n)),
        Expr::QPower(k) => Ok(Series::monomial(*k, n)),
        Expr::F(a) => Ok(expand_f(a.r(), n)),
        Expr::Neg(x) => Ok(evaluate(x, n)?.neg()),
        Expr::Add(a, b) => Ok(evaluate(a, n)?.add(&evaluate(b, n)?)),
        Expr::Sub(a, b) => Ok(evaluate(a, n)?.sub(&evaluate(b, n)?)),
        Expr::Mul(..) | Expr::Div(..) | Expr::Pow(..) => {
            let mut factors = Vec::new();
            flatten(expr, 1, &mut factors);
            eval_product(&factors, n, 0)
        }
        Expr::Extract { expr, m, j } => evaluate(expr, m * n + j)?.extract(*m, *j),
        Expr::Inflate { expr, m } => Ok(evaluate(expr, n / m)?.inflate(*m).truncate(n)),
        Expr::ModRed { expr, modulus } => Ok(evaluate(expr, n)?.reduce_mod(*modulus)),
    }
}

fn flatten<'a>(expr: &'a Expr, exp: i64, out: &mut Vec<(&'a Expr, i64)>) {
    match expr {
        Expr::Mul(a, b) => {
            flatten(a, exp, out);
            flatten(b, exp, out);
        }
        Expr::Div(a, b) => {
            flatten(a, exp, out);
            flatten(b, -exp, out);
        }
        Expr::Pow(base, k) => flatten(base, exp * k, out),
        _ => out.push((expr, exp)),
    }
}

/// A factor is sparse enough that applying it once per unit of exponent
/// beats raising it to a power first.
fn is_sparse(s: &Series) -> bool {
    s.nonzero_terms() * 8 <= s.order() + 1
}

fn eval_product(factors: &[(&Expr, i64)], n: usize, extra: usize) -> Result<Series, SeriesError> {
    let order = n + extra;
    let mut acc = Series::one(order);
    let mut non_units: Vec<(Series, u64)> = Vec::new();
    for &(e, k) in factors.iter().filter(|(_, k)| *k > 0) {
        let s = evaluate(e, order)?;
        let k = k.unsigned_abs();
        if is_sparse(&s) {
            for _ in 0..k {
                acc = acc.mul(&s);
            }
        } else {
            acc = acc.mul(&s.pow(k as i64)?);
        }
    }
    for &(e, k) in factors.iter().filter(|(_, k)| *k < 0) {
        let s = evaluate(e, order)?;
        let k = k.unsigned_abs();
        if !s.coeffs()[0].abs().is_one() {
            non_units.push((s, k));
        } else if is_sparse(&s) {
            for _ in 0..k {
                acc = acc.div_unit(&s)?;
            }
        } else {
            acc = acc.div_unit(&s.pow(k as i64)?)?;
        }
    }
    if non_units.is_empty() {
        return Ok(acc.truncate(n));
    }
    let mut divisor = Series::one(order);
    for (s, k) in &non_units {
        divisor = divisor.mul(&s.pow(*k as i64)?);
    }
    match divisor.valuation() {
        Some(v) if v <= extra => Ok(acc.div_exact(&divisor)?.truncate(n)),
        Some(v) => eval_product(factors, n, v),
        None if extra < DIVISOR_PROBE => eval_product(factors, n, (2 * extra + 1).min(DIVISOR_PROBE)),
        None => Err(SeriesError::ZeroDivisor { order }),
    }
}
