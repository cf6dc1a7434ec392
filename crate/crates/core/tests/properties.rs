use num_traits::{One, Zero};
use proptest::prelude::*;

use tesspec::barnes::{barnes_recursion_holds, barnes_special_value, verify_alternating_sum};
use tesspec::exactnum::{parse_rational, rat, rational_to_string, QuadraticNumber, Rational};
use tesspec::ratfun::{Poly, RationalFunction, ZPolynomial};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..7, 1..5).prop_map(|c| Poly::from_ints(&c))
}

// denominators that do not vanish at σ = 0, so series exist
fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(), prop::collection::vec(1u32..5, 0..3), 0i64..3).prop_map(|(n, ks, e)| {
        let base = RationalFunction::inverse_product(&ks);
        (&RationalFunction::from_poly(n) * &base).mul_sigma_power(e)
    })
}

fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    (0..a.len()).map(|n| (0..=n).map(|k| &a[k] * &b[n - k]).sum()).collect()
}

proptest! {
    #[test]
    fn rational_roundtrip(x in small_rat()) {
        prop_assert_eq!(parse_rational(&rational_to_string(&x)).unwrap(), x);
    }

    #[test]
    fn series_of_product_is_convolution(f in ratfun(), g in ratfun()) {
        let n = 12;
        let lhs = (&f * &g).series(n).unwrap();
        prop_assert_eq!(lhs, convolve(&f.series(n).unwrap(), &g.series(n).unwrap()));
    }

    #[test]
    fn series_is_additive(f in ratfun(), g in ratfun()) {
        let n = 10;
        let s: Vec<Rational> = f.series(n).unwrap().iter().zip(g.series(n).unwrap()).map(|(a, b)| a + b).collect();
        prop_assert_eq!((&f + &g).series(n).unwrap(), s);
    }

    #[test]
    fn invert_sigma_is_involution(f in ratfun()) {
        prop_assert_eq!(f.invert_sigma().invert_sigma(), f);
    }

    #[test]
    fn reciprocal_inverts(f in ratfun()) {
        prop_assume!(!f.is_zero());
        prop_assert_eq!(&f * &f.recip().unwrap(), RationalFunction::one());
    }

    #[test]
    fn canonical_form_is_unique(f in ratfun(), g in ratfun()) {
        prop_assume!(!g.is_zero());
        let h = &(&f * &g) * &g.recip().unwrap();
        prop_assert_eq!(h, f);
    }

    #[test]
    fn z_reciprocal_is_involution(cs in prop::collection::vec(ratfun(), 1..4)) {
        let n = cs.len() + 1;
        let z = ZPolynomial::new(cs, n).unwrap();
        prop_assert_eq!(z.reciprocal().reciprocal(), z);
    }

    #[test]
    fn quadratic_norm_is_multiplicative(a in small_rat(), b in small_rat(), c in small_rat(), e in small_rat(), root in prop::sample::select(vec![2u32, 5])) {
        let x = QuadraticNumber::new(a, b, root).unwrap();
        let y = QuadraticNumber::new(c, e, root).unwrap();
        prop_assert_eq!(x.try_mul(&y).unwrap().norm(), x.norm() * y.norm());
        if !y.is_zero() {
            prop_assert_eq!(x.try_mul(&y).unwrap().try_div(&y).unwrap(), x);
        }
    }

    #[test]
    fn barnes_permutation_invariant(mut degs in prop::collection::vec(1u32..7, 1..4), a in (1i64..20, 1i64..5), m in 0usize..5) {
        let a = rat(a.0, a.1);
        let v = barnes_special_value(m, &a, &degs).unwrap();
        degs.reverse();
        prop_assert_eq!(barnes_special_value(m, &a, &degs).unwrap(), v.clone());
        degs.rotate_left(1);
        prop_assert_eq!(barnes_special_value(m, &a, &degs).unwrap(), v);
    }

    #[test]
    fn barnes_difference_recursion(degs in prop::collection::vec(1u32..6, 2..4), a in (1i64..20, 1i64..5), m in 0usize..4, i in 0usize..4) {
        let i = i % degs.len();
        prop_assert!(barnes_recursion_holds(m, &rat(a.0, a.1), &degs, i).unwrap());
    }

    #[test]
    fn barnes_alternating_sum(degs in prop::collection::vec(1u32..6, 1..4), a in (0i64..20, 1i64..5), m in 0usize..4) {
        prop_assert!(verify_alternating_sum(&degs, &rat(a.0, a.1), m).unwrap().passed);
    }
}

#[test]
fn one_and_zero_series() {
    assert_eq!(RationalFunction::one().series(3).unwrap(), vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()]);
}
