use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use spinnet::arith::{radical_eq, ExactRadical, RadicalSum, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..40).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn radicand() -> impl Strategy<Value = Rational> {
    (0i64..500, 1i64..50).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn radical() -> impl Strategy<Value = ExactRadical> {
    (rational(), radicand()).prop_map(|(c, r)| ExactRadical::new(c, r))
}

fn radical_sum() -> impl Strategy<Value = RadicalSum> {
    proptest::collection::vec(radical(), 0..5).prop_map(RadicalSum::from_terms)
}

proptest! {
    #[test]
    fn canonicalisation_is_idempotent(x in radical()) {
        prop_assert_eq!(x.canonical(), x.clone());
        prop_assert_eq!(x.canonical().canonical(), x.canonical());
    }

    #[test]
    fn product_squares_multiply(a in radical(), b in radical()) {
        let p = &a * &b;
        prop_assert_eq!(p.square(), a.square() * b.square());
        prop_assert_eq!(p.canonical(), p);
    }

    #[test]
    fn sum_ring_laws(a in radical_sum(), b in radical_sum(), c in radical_sum(), q in rational()) {
        prop_assert!(radical_eq(&(&a + &b), &(&b + &a)));
        prop_assert!(radical_eq(&(&(&a + &b) + &c), &(&a + &(&b + &c))));
        prop_assert!(radical_eq(&(&a * &b), &(&b * &a)));
        prop_assert!(radical_eq(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
        prop_assert!(radical_eq(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))));
        prop_assert!(radical_eq(&(&a + &b).scale(&q), &(&a.scale(&q) + &b.scale(&q))));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_error_is_within_bound(s in radical_sum(), precision in 32u32..200) {
        let coarse = s.eval(precision);
        let fine = s.eval(2 * precision);
        let gap = (coarse.exact_value() - fine.exact_value()).abs();
        prop_assert!(gap <= coarse.exact_bound() + fine.exact_bound());
        let f = s.to_f64();
        prop_assert!((f - coarse.value()).abs() <= coarse.error_bound() + 1e-9 * f.abs().max(1.0));
    }
}

#[test]
fn precision_below_minimum_is_raised() {
    let s = RadicalSum::from(ExactRadical::sqrt_of(2));
    assert_eq!(s.eval(8).precision(), 32);
}
