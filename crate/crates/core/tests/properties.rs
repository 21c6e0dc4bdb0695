mod common;

use common::strategies::{ast, eta_product, series, sparse_series, unit};
use num_bigint::BigInt;
use proptest::prelude::*;
use qseries::eta::expand_f;
use qseries::expr::Expr;
use qseries::{evaluate, parse, Series};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn addition_is_a_commutative_group(a in series(50, 1000), b in series(50, 1000), c in series(50, 1000)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &Series::zero(50), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a + &(-&b), &a - &b);
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in series(50, 1000), b in series(50, 1000), c in series(50, 1000)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &Series::one(50), a.clone());
    }

    #[test]
    fn multiplication_distributes(a in series(50, 1000), b in series(50, 1000), c in series(50, 1000)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn multiplication_matches_schoolbook(a in series(50, i64::MAX / 2), b in series(50, 1000), s in sparse_series(50)) {
        prop_assert_eq!((&a * &b).into_coeffs(), common::naive_mul(a.coeffs(), b.coeffs()));
        prop_assert_eq!((&a * &s).into_coeffs(), common::naive_mul(a.coeffs(), s.coeffs()));
    }

    #[test]
    fn mixed_orders_truncate_to_the_minimum(a in series(30, 100), b in series(50, 100)) {
        prop_assert_eq!((&a + &b).order(), 30);
        prop_assert_eq!((&a * &b).order(), 30);
        prop_assert_eq!(&a * &b, &a * &b.truncate(30));
    }

    #[test]
    fn inverse_of_a_unit(u in unit(100), a in series(100, 100)) {
        let inv = u.invert().unwrap();
        prop_assert_eq!(&u * &inv, Series::one(100));
        prop_assert_eq!(u.div_unit(&u).unwrap(), Series::one(100));
        prop_assert_eq!(&a.div_unit(&u).unwrap() * &u, a.clone());
        prop_assert_eq!(a.div_unit(&u).unwrap(), &a * &inv);
    }

    #[test]
    fn negative_powers_invert(u in unit(60), k in 0i64..=5) {
        let up = u.pow(k).unwrap();
        let down = u.pow(-k).unwrap();
        prop_assert_eq!(&up * &down, Series::one(60));
    }

    #[test]
    fn dissection_is_complete(s in series(120, 1000), mi in 0usize..5) {
        let m = [2, 3, 4, 6, 12][mi];
        let n = s.order();
        let parts: Vec<Series> = (0..m).map(|j| s.extract(m, j).unwrap()).collect();
        for k in 0..=n {
            let part = &parts[k % m];
            prop_assert_eq!(part.order(), (n - k % m) / m);
            prop_assert_eq!(part.coeff(k / m).unwrap(), s.coeff(k).unwrap());
        }
        let rebuilt = (0..m)
            .map(|j| parts[j].inflate(m).shift(j))
            .reduce(|acc, x| &acc + &x)
            .unwrap();
        let common_order = rebuilt.order();
        prop_assert!(common_order + m > n);
        prop_assert_eq!(rebuilt, s.truncate(common_order));
    }

    #[test]
    fn extract_undoes_inflate(s in series(60, 1000), m in 1usize..=7) {
        let up = s.inflate(m);
        prop_assert_eq!(up.order(), m * 60 + m - 1);
        prop_assert_eq!(up.extract(m, 0).unwrap(), s.clone());
        for j in 1..m {
            prop_assert!(up.extract(m, j).unwrap().is_zero());
        }
    }

    #[test]
    fn reduce_mod_is_idempotent_and_reduces(s in series(50, 10_000), m in 2u64..=50) {
        let r = s.reduce_mod(m);
        prop_assert_eq!(r.reduce_mod(m), r.clone());
        prop_assert!(r.coeffs().iter().all(|c| *c >= BigInt::from(0) && *c < BigInt::from(m)));
        prop_assert!((&s - &r).reduce_mod(m).is_zero());
    }

    #[test]
    fn f1_has_pentagonal_support(n in 0usize..=300) {
        let fast = expand_f(1, n);
        prop_assert_eq!(fast.coeffs(), &common::naive_f(1, n)[..]);
        for (k, c) in fast.coeffs().iter().enumerate() {
            // k is generalized pentagonal iff 24k + 1 is a square of some 6j +- 1
            let d = 24 * k as u64 + 1;
            let root = (d as f64).sqrt() as u64;
            let pentagonal = (root.saturating_sub(1)..=root + 1).any(|x| x * x == d);
            prop_assert_eq!(c != &BigInt::from(0), pentagonal, "k = {}", k);
            prop_assert!(c.magnitude() <= &1u8.into());
        }
    }

    #[test]
    fn f_r_is_inflated_f1(r in 1usize..=48, n in 0usize..=300) {
        let s = expand_f(r, n);
        prop_assert_eq!(s.coeffs(), &common::naive_f(r, n)[..]);
        prop_assert_eq!(s, expand_f(1, n / r).inflate(r).truncate(n));
    }

    #[test]
    fn format_then_parse_is_identity(e in ast()) {
        let text = e.to_string();
        let back = parse(&text);
        prop_assert_eq!(back.as_ref().ok(), Some(&e), "{}", text);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in eta_product(), b in eta_product(), n in 0usize..=80) {
        let ea = evaluate(&a, n).unwrap();
        let eb = evaluate(&b, n).unwrap();
        prop_assert_eq!(evaluate(&(a.clone() + b.clone()), n).unwrap(), &ea + &eb);
        prop_assert_eq!(evaluate(&(a.clone() - b.clone()), n).unwrap(), &ea - &eb);
        prop_assert_eq!(evaluate(&(a.clone() * b.clone()), n).unwrap(), &ea * &eb);
        prop_assert_eq!(&evaluate(&(a.clone() / b.clone()), n).unwrap() * &eb, ea.clone());
        prop_assert_eq!(evaluate(&(-a.clone()), n).unwrap(), -&ea);
        prop_assert_eq!(evaluate(&a.clone().pow(3), n).unwrap(), &(&ea * &ea) * &ea);
    }

    #[test]
    fn q_prefactors_shift(a in eta_product(), k in 0usize..=10, n in 0usize..=80) {
        let shifted = evaluate(&(Expr::q(k) * a.clone()), n).unwrap();
        prop_assert_eq!(shifted, evaluate(&a, n).unwrap().shift(k));
    }
}
