use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use tesspec::barnes::{barnes_recursion_holds, barnes_residue, barnes_special_value, gen_bernoulli, BernoulliContext};
use tesspec::exactnum::{int, rat, Rational};
use tesspec::Error;

fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=n {
        let mut s = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += bk * Rational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(k)));
        }
        b.push(-s / int(m as i64 + 1));
    }
    b
}

fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    let b = bernoulli_numbers(n);
    let mut s = Rational::zero();
    let mut xp = Rational::one();
    for k in (0..=n).rev() {
        s += &b[k] * Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k))) * &xp;
        xp = &xp * x;
    }
    s
}

fn hurwitz_neg(m: usize, a: &Rational) -> Rational {
    -bernoulli_poly(m + 1, a) / int(m as i64 + 1)
}

#[test]
fn single_degree_is_scaled_hurwitz() {
    // Σ (a + d n)^{-s} = d^{-s} ζ_H(s, a/d)
    for d in 1..=6u32 {
        for a in [rat(1, 2), rat(2, 3), int(1), rat(9, 4)] {
            for m in 0..=6usize {
                let scale = int(d as i64).pow(m as i32);
                let want = scale * hurwitz_neg(m, &(&a / int(d as i64)));
                assert_eq!(barnes_special_value(m, &a, &[d]).unwrap(), want, "d={d} a={a} m={m}");
            }
        }
    }
}

#[test]
fn two_and_three_unit_degrees() {
    for a in [rat(1, 5), rat(3, 2), int(2), rat(11, 3)] {
        for m in 0..=6usize {
            let w2 = hurwitz_neg(m + 1, &a) + (int(1) - &a) * hurwitz_neg(m, &a);
            assert_eq!(barnes_special_value(m, &a, &[1, 1]).unwrap(), w2);
            let w3 = (hurwitz_neg(m + 2, &a)
                + (int(3) - int(2) * &a) * hurwitz_neg(m + 1, &a)
                + (int(1) - &a) * (int(2) - &a) * hurwitz_neg(m, &a))
                / int(2);
            assert_eq!(barnes_special_value(m, &a, &[1, 1, 1]).unwrap(), w3);
        }
        assert_eq!(barnes_residue(2, &a, &[1, 1]).unwrap(), int(1));
        assert_eq!(barnes_residue(1, &a, &[1, 1]).unwrap(), int(1) - &a);
        assert_eq!(barnes_residue(3, &a, &[1, 1, 1]).unwrap(), rat(1, 2));
    }
}

#[test]
fn top_residue_is_inverse_degree_product() {
    for degs in [vec![2u32, 3], vec![1, 4, 5], vec![2, 2, 3, 7]] {
        let prod: i64 = degs.iter().map(|&x| x as i64).product();
        let k = degs.len();
        let fact: i64 = (1..k as i64).product();
        assert_eq!(barnes_residue(k, &rat(1, 3), &degs).unwrap(), rat(1, prod * fact));
    }
}

#[test]
fn generalized_bernoulli_reduces_to_classical() {
    for n in 0..=8 {
        for x in [rat(0, 1), rat(1, 3), rat(5, 2)] {
            assert_eq!(gen_bernoulli(n, &x, &[1]).unwrap(), bernoulli_poly(n, &x));
        }
    }
}

#[test]
fn context_caches_and_bounds() {
    let ctx = BernoulliContext::new(&[2, 3, 5], 10).unwrap();
    assert_eq!(ctx.max_n(), 10);
    assert!(matches!(ctx.polynomial(11), Err(Error::IndexError { .. })));
    assert_eq!(ctx.value(4, &rat(1, 2)).unwrap(), gen_bernoulli(4, &rat(1, 2), &[2, 3, 5]).unwrap());
    assert!(matches!(BernoulliContext::new(&[2, 0], 4), Err(Error::DomainError(_))));
    assert!(matches!(barnes_special_value(1, &int(0), &[1]), Err(Error::DomainError(_))));
}

#[test]
fn difference_recursion() {
    for i in 0..3 {
        for m in 0..4 {
            assert!(barnes_recursion_holds(m, &rat(7, 3), &[2, 3, 4], i).unwrap());
        }
    }
}
