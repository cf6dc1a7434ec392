use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::bigreal::BigReal;
use super::quadratic::QuadraticNumber;
use super::rational::Rational;
use crate::error::{Error, Result};

pub const MIN_RECOGNITION_DIGITS: u32 = 40;
pub const DEFAULT_DENOMINATOR_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum Recognition {
    Match(QuadraticNumber),
    NoMatch,
}

impl Recognition {
    pub fn matched(&self) -> Option<&QuadraticNumber> {
        match self {
            Recognition::Match(q) => Some(q),
            Recognition::NoMatch => None,
        }
    }
}

type Vector = Vec<BigInt>;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gram_schmidt(b: &[Vector]) -> (Vec<Rational>, Vec<Vec<Rational>>) {
    let n = b.len();
    let mut star: Vec<Vec<Rational>> = Vec::with_capacity(n);
    let mut norms = Vec::with_capacity(n);
    let mut mu = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        let mut v: Vec<Rational> = b[i].iter().map(|x| Rational::from_integer(x.clone())).collect();
        for j in 0..i {
            let num: Rational = b[i]
                .iter()
                .zip(&star[j])
                .map(|(x, y)| Rational::from_integer(x.clone()) * y)
                .sum();
            mu[i][j] = num / &norms[j];
            for (vk, sk) in v.iter_mut().zip(&star[j]) {
                *vk -= &mu[i][j] * sk;
            }
        }
        norms.push(v.iter().map(|x| x * x).sum::<Rational>());
        star.push(v);
    }
    (norms, mu)
}

/// LLL reduction with δ = 3/4 and exact Gram–Schmidt data.
fn lll(mut b: Vec<Vector>) -> Vec<Vector> {
    let n = b.len();
    let delta = Rational::new(3.into(), 4.into());
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let (_, mu) = gram_schmidt(&b);
            let q = mu[k][j].round().to_integer();
            if !q.is_zero() {
                let bj = b[j].clone();
                for (x, y) in b[k].iter_mut().zip(&bj) {
                    *x -= &q * y;
                }
            }
        }
        let (norms, mu) = gram_schmidt(&b);
        let lhs = &norms[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    b.sort_by_key(|v| dot(v, v));
    b
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), e as usize)
}

/// Search for `a + b√k` within `10^(10−P)` of `x`, denominators bounded.
pub fn recognize_quadratic(x: &BigReal, root: u32, denominator_bound: &BigInt) -> Result<Recognition> {
    QuadraticNumber::zero(root)?;
    let p = x.digits();
    if p < MIN_RECOGNITION_DIGITS {
        return Err(Error::InsufficientPrecision(p));
    }
    if !denominator_bound.is_positive() {
        return Err(Error::DomainError("denominator bound must be at least 1".into()));
    }
    let tol = 10 - p as i32;
    if x.abs_lt_pow10(tol) {
        return Ok(Recognition::Match(QuadraticNumber::zero(root)?));
    }
    let e = p - 8;
    let sk = BigReal::from_integer(root as i64, p).sqrt();
    let basis = vec![
        vec![BigInt::from(1), BigInt::zero(), BigInt::zero(), x.scaled_round(e)],
        vec![BigInt::zero(), BigInt::from(1), BigInt::zero(), pow10(e)],
        vec![BigInt::zero(), BigInt::zero(), BigInt::from(1), sk.scaled_round(e)],
    ];
    for v in lll(basis) {
        if v[0].is_zero() {
            continue;
        }
        let a = Rational::new(-v[1].clone(), v[0].clone());
        let b = Rational::new(-v[2].clone(), v[0].clone());
        if a.denom() > denominator_bound || b.denom() > denominator_bound {
            continue;
        }
        let cand = QuadraticNumber::new(a, b, root)?;
        if (x - &cand.to_bigreal(p)).abs_lt_pow10(tol) {
            return Ok(Recognition::Match(cand));
        }
    }
    Ok(Recognition::NoMatch)
}

/// Recognition at `digits`, accepted only if the candidate also agrees with
/// a re-evaluation at twice the precision.
pub fn recognize_quadratic_confirmed<F>(eval: F, digits: u32, root: u32, denominator_bound: &BigInt) -> Result<Recognition>
where
    F: Fn(u32) -> Result<BigReal>,
{
    let first = recognize_quadratic(&eval(digits)?, root, denominator_bound)?;
    let Recognition::Match(cand) = first else {
        return Ok(Recognition::NoMatch);
    };
    let hi = 2 * digits;
    let x2 = eval(hi)?;
    if (&x2 - &cand.to_bigreal(hi)).abs_lt_pow10(10 - hi as i32) {
        Ok(Recognition::Match(cand))
    } else {
        Ok(Recognition::NoMatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};

    fn bound(n: u64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn recognizes_table_rational() {
        let x = BigReal::from_rational(&rat(-5, 16), 50);
        let r = recognize_quadratic(&x, 5, &bound(10_000)).unwrap();
        assert_eq!(r, Recognition::Match(QuadraticNumber::new(rat(-5, 16), int(0), 5).unwrap()));
    }

    #[test]
    fn zero_and_precision_floor() {
        let r = recognize_quadratic(&BigReal::zero(50), 3, &bound(10)).unwrap();
        assert_eq!(r, Recognition::Match(QuadraticNumber::zero(3).unwrap()));
        assert_eq!(
            recognize_quadratic(&BigReal::zero(39), 3, &bound(10)),
            Err(Error::InsufficientPrecision(39))
        );
    }

    #[test]
    fn recognizes_rationalized_surd() {
        // −2/(5√5) = −(2/25)√5
        let eval = |p: u32| {
            let s5 = BigReal::from_integer(5, p).sqrt();
            BigReal::from_integer(-2, p).checked_div(&(BigReal::from_integer(5, p) * s5))
        };
        let r = recognize_quadratic_confirmed(eval, 64, 5, &bound(10_000)).unwrap();
        assert_eq!(r, Recognition::Match(QuadraticNumber::new(int(0), rat(-2, 25), 5).unwrap()));
    }

    #[test]
    fn large_denominators() {
        let q = QuadraticNumber::new(rat(-37291, 7200), rat(277, 375), 5).unwrap();
        let r = recognize_quadratic_confirmed(|p| Ok(q.to_bigreal(p)), 64, 5, &bound(1_000_000)).unwrap();
        assert_eq!(r, Recognition::Match(q));
    }

    #[test]
    fn transcendental_is_no_match() {
        let x = BigReal::pi(64);
        let r = recognize_quadratic(&x, 2, &bound(1000)).unwrap();
        assert_eq!(r, Recognition::NoMatch);
    }
}
