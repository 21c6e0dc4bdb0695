//! Generators shared by the property tests and the acceptance runner.

use num_bigint::BigInt;
use proptest::prelude::*;
use qseries::expr::Expr;
use qseries::Series;

pub fn series(order: usize, bound: i64) -> impl Strategy<Value = Series> {
    prop::collection::vec(-bound..=bound, order + 1).prop_map(|c| Series::from_i64s(&c))
}

pub fn sparse_series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec((0..=order, -9i64..=9), 0..6).prop_map(move |terms| {
        let mut c = vec![0i64; order + 1];
        for (k, v) in terms {
            c[k] += v;
        }
        Series::from_i64s(&c)
    })
}

pub fn unit(order: usize) -> impl Strategy<Value = Series> {
    (series(order, 50), prop::bool::ANY).prop_map(|(s, neg)| {
        let mut c = s.into_coeffs();
        c[0] = BigInt::from(if neg { -1 } else { 1 });
        Series::new(c)
    })
}

pub fn eta_product() -> impl Strategy<Value = Expr> {
    prop::collection::vec((1usize..=12, -4i64..=4), 1..5)
        .prop_map(|factors| factors.into_iter().map(|(r, e)| Expr::f(r).pow(e)).reduce(|a, b| a * b).unwrap())
}

pub fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![(-20i64..=20).prop_map(Expr::int), (0usize..=6).prop_map(Expr::q), (1usize..=24).prop_map(Expr::f),]
}

pub fn ast() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| -e),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a / b),
            (inner.clone(), -64i64..=64).prop_map(|(a, k)| a.pow(k)),
            (inner.clone(), 1usize..=6, 0usize..6).prop_map(|(a, m, j)| a.extract(m, j % m)),
            (inner.clone(), 1usize..=5).prop_map(|(a, m)| a.inflate(m)),
            (inner, 2u64..=12).prop_map(|(a, p)| a.modred(p)),
        ]
    })
}
