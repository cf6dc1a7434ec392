use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::bigreal::BigReal;
use super::rational::{int, rational_str, Rational};
use crate::error::{Error, Result};

pub const SUPPORTED_ROOTS: [u32; 3] = [2, 3, 5];

/// `a + b√root` with `root` one of 2, 3, 5.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticNumber {
    #[serde(with = "rational_str")]
    pub a: Rational,
    #[serde(with = "rational_str")]
    pub b: Rational,
    pub root: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn check_root(root: u32) -> Result<()> {
    if SUPPORTED_ROOTS.contains(&root) {
        Ok(())
    } else {
        Err(Error::UnsupportedRoot(root))
    }
}

impl QuadraticNumber {
    pub fn new(a: Rational, b: Rational, root: u32) -> Result<Self> {
        check_root(root)?;
        Ok(QuadraticNumber { a, b, root })
    }

    pub fn from_rational(a: Rational, root: u32) -> Result<Self> {
        Self::new(a, Rational::zero(), root)
    }

    pub fn zero(root: u32) -> Result<Self> {
        Self::from_rational(Rational::zero(), root)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadraticNumber { a: self.a.clone(), b: -self.b.clone(), root: self.root }
    }

    /// Field norm `a² − k b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(self.root as i64) * &self.b * &self.b
    }

    pub fn neg(&self) -> Self {
        QuadraticNumber { a: -self.a.clone(), b: -self.b.clone(), root: self.root }
    }

    fn same_root(&self, o: &Self) -> Result<()> {
        if self.root != o.root {
            Err(Error::RootMismatch(self.root, o.root))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same_root(o)?;
        Ok(QuadraticNumber { a: &self.a + &o.a, b: &self.b + &o.b, root: self.root })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.same_root(o)?;
        Ok(QuadraticNumber { a: &self.a - &o.a, b: &self.b - &o.b, root: self.root })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.same_root(o)?;
        let k = int(self.root as i64);
        Ok(QuadraticNumber {
            a: &self.a * &o.a + k * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
            root: self.root,
        })
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.same_root(o)?;
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = o.norm();
        let p = self.try_mul(&o.conjugate())?;
        Ok(QuadraticNumber { a: p.a / &n, b: p.b / &n, root: self.root })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadraticNumber { a: &self.a * r, b: &self.b * r, root: self.root }
    }

    /// Exact sign of `a + b√k`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with k b²
        let lhs = &self.a * &self.a;
        let rhs = int(self.root as i64) * &self.b * &self.b;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_bigreal(&self, digits: u32) -> BigReal {
        let s = BigReal::from_integer(self.root as i64, digits).sqrt();
        BigReal::from_rational(&self.a, digits) + BigReal::from_rational(&self.b, digits) * s
    }
}

pub fn quadratic_arith(x: &QuadraticNumber, y: &QuadraticNumber, op: ArithOp) -> Result<QuadraticNumber> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Sub => x.try_sub(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Div => x.try_div(y),
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        let mag = self.b.abs();
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}({mag})*sqrt({})", self.root)
        } else {
            write!(f, "{} {sign} ({mag})*sqrt({})", self.a, self.root)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    fn q(a: Rational, b: Rational, k: u32) -> QuadraticNumber {
        QuadraticNumber::new(a, b, k).unwrap()
    }

    #[test]
    fn conjugate_product() {
        let x = q(int(1), int(1), 5);
        let p = quadratic_arith(&x, &x.conjugate(), ArithOp::Mul).unwrap();
        assert_eq!(p, q(int(-4), int(0), 5));
    }

    #[test]
    fn self_division() {
        let x = q(int(0), int(1), 2);
        assert_eq!(quadratic_arith(&x, &x, ArithOp::Div).unwrap(), q(int(1), int(0), 2));
    }

    #[test]
    fn rationalize_eta_entry() {
        // 2341/5400 + (118/75)/sqrt5
        let x = q(rat(2341, 5400), int(0), 5);
        let inv = quadratic_arith(&q(int(1), int(0), 5), &q(int(0), int(1), 5), ArithOp::Div).unwrap();
        let y = quadratic_arith(&x, &inv.scale(&rat(118, 75)), ArithOp::Add).unwrap();
        assert_eq!(y, q(rat(2341, 5400), rat(118, 375), 5));
    }

    #[test]
    fn errors() {
        let x = q(int(1), int(1), 5);
        let y = q(int(1), int(1), 2);
        assert_eq!(x.try_add(&y), Err(Error::RootMismatch(5, 2)));
        assert_eq!(x.try_div(&QuadraticNumber::zero(5).unwrap()), Err(Error::DivisionByZero));
        assert_eq!(QuadraticNumber::new(int(1), int(1), 7), Err(Error::UnsupportedRoot(7)));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(q(int(-2), int(1), 5).signum(), Ordering::Greater);
        assert_eq!(q(int(-3), int(1), 5).signum(), Ordering::Less);
        assert_eq!(q(int(0), int(0), 5).signum(), Ordering::Equal);
    }

    #[test]
    fn json_shape() {
        let x = q(rat(-5, 16), int(0), 5);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"a":"-5/16","b":"0","root":5}"#);
        let back: QuadraticNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
