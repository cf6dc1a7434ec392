use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::{elementary_symmetric_all, Poly};
use super::rf::RationalFunction;
use crate::error::{Error, Result};

/// Polynomial in z with rational-function coefficients, carrying the degree
/// `n` at which the reciprocal `z^n f(1/z)` is taken.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZPolynomial {
    coeffs: Vec<RationalFunction>,
    declared_degree: usize,
}

impl ZPolynomial {
    pub fn new(mut coeffs: Vec<RationalFunction>, declared_degree: usize) -> Result<Self> {
        while coeffs.len() > declared_degree + 1 {
            if !coeffs.last().map(RationalFunction::is_zero).unwrap_or(true) {
                return Err(Error::IndexError { index: coeffs.len() as i64 - 1, max: declared_degree as i64 });
            }
            coeffs.pop();
        }
        coeffs.resize(declared_degree + 1, RationalFunction::zero());
        Ok(ZPolynomial { coeffs, declared_degree })
    }

    pub fn zero(n: usize) -> Self {
        ZPolynomial { coeffs: vec![RationalFunction::zero(); n + 1], declared_degree: n }
    }

    pub fn constant(c: RationalFunction, n: usize) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = c;
        z
    }

    /// `c z^k` declared at degree `n`.
    pub fn monomial(c: RationalFunction, k: usize, n: usize) -> Result<Self> {
        let mut v = vec![RationalFunction::zero(); k + 1];
        v[k] = c;
        Self::new(v, n)
    }

    /// `a + b z` declared at degree 1.
    pub fn linear(a: RationalFunction, b: RationalFunction) -> Self {
        ZPolynomial { coeffs: vec![a, b], declared_degree: 1 }
    }

    pub fn declared_degree(&self) -> usize {
        self.declared_degree
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, p: usize) -> RationalFunction {
        self.coeffs.get(p).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Actual z-degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Same coefficients declared at another degree.
    pub fn redeclare(&self, n: usize) -> Result<Self> {
        Self::new(self.coeffs.clone(), n)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.declared_degree.max(o.declared_degree);
        let coeffs = (0..=n).map(|i| &self.coeff(i) + &o.coeff(i)).collect();
        ZPolynomial { coeffs, declared_degree: n }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        ZPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect(), declared_degree: self.declared_degree }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.declared_degree + o.declared_degree;
        let mut coeffs = vec![RationalFunction::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        ZPolynomial { coeffs, declared_degree: n }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        ZPolynomial { coeffs: self.coeffs.iter().map(|x| x * c).collect(), declared_degree: self.declared_degree }
    }

    /// `z^n f(1/z)` at the declared degree.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        ZPolynomial { coeffs, declared_degree: self.declared_degree }
    }

    /// Horner evaluation at `z = z0`.
    pub fn evaluate_at_z(&self, z0: &RationalFunction) -> RationalFunction {
        self.coeffs.iter().rev().fold(RationalFunction::zero(), |acc, c| &(&acc * z0) + c)
    }

    /// Exact quotient by `divisor`; the declared degree drops by the divisor's degree.
    pub fn div_exact(&self, divisor: &ZPolynomial) -> Result<Self> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.coeff(dd);
        let n = self.declared_degree.checked_sub(dd).ok_or_else(|| Error::NotDivisible("degree too small".into()))?;
        let mut r = self.coeffs.clone();
        let top = match self.degree() {
            Some(t) => t,
            None => return Ok(Self::zero(n)),
        };
        if top < dd {
            return Err(Error::NotDivisible("nonzero remainder in z".into()));
        }
        let mut q = vec![RationalFunction::zero(); top - dd + 1];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].checked_div(&lead)?;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate().take(dd + 1) {
                r[i + j] = &r[i + j] - &(&c * dc);
            }
            q[i] = c;
        }
        if r.iter().take(dd).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible("nonzero remainder in z".into()));
        }
        Self::new(q, n)
    }

    /// `(f(z) − f(0)) / z`, declared degree reduced by one.
    pub fn drop_constant_over_z(&self) -> Self {
        let coeffs: Vec<_> = self.coeffs.iter().skip(1).cloned().collect();
        let n = self.declared_degree.saturating_sub(1);
        ZPolynomial::new(coeffs, n).expect("length fits")
    }

    /// Multiply by `z^k`, raising the declared degree by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![RationalFunction::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPolynomial { coeffs, declared_degree: self.declared_degree + k }
    }

    /// `Σ_q (−z)^q e_q(σ^{d_1},…)` built from the elementary symmetric functions.
    pub fn signed_elementary(degrees: &[u32]) -> Self {
        let e = elementary_symmetric_all(degrees);
        let coeffs = e
            .into_iter()
            .enumerate()
            .map(|(q, p)| {
                let p = if q % 2 == 1 { -&p } else { p };
                RationalFunction::from_poly(p)
            })
            .collect();
        ZPolynomial { coeffs, declared_degree: degrees.len() }
    }

    /// `Π (1 − z σ^{d_i})` by direct multiplication.
    pub fn product_one_minus(degrees: &[u32]) -> Self {
        degrees.iter().fold(Self::constant(RationalFunction::one(), 0), |acc, &d| {
            let f = Self::linear(
                RationalFunction::one(),
                RationalFunction::from_poly(Poly::monomial(crate::exactnum::int(-1), d as usize)),
            );
            acc.mul(&f)
        })
    }
}

impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]*z")?,
                _ => write!(f, "[{c}]*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }

    #[test]
    fn reciprocal_example() {
        let f = ZPolynomial::new(vec![c(1), c(2)], 1).unwrap();
        assert_eq!(f.reciprocal(), ZPolynomial::new(vec![c(2), c(1)], 1).unwrap());
        let g = ZPolynomial::new(vec![c(1), c(2)], 3).unwrap();
        assert_eq!(g.reciprocal().reciprocal(), g);
        assert_eq!(g.reciprocal().coeff(3), c(1));
    }

    #[test]
    fn evaluation_at_zero() {
        let f = ZPolynomial::new(vec![c(5), c(2), c(3)], 2).unwrap();
        assert_eq!(f.evaluate_at_z(&RationalFunction::zero()), c(5));
    }

    #[test]
    fn exact_division() {
        let s = RationalFunction::sigma();
        let zs = ZPolynomial::linear(s.clone(), RationalFunction::one());
        let g = ZPolynomial::new(vec![c(1), c(3), c(2)], 2).unwrap();
        let p = g.mul(&zs);
        assert_eq!(p.div_exact(&zs).unwrap(), g);
        let bad = p.add(&ZPolynomial::constant(c(1), 3));
        assert!(bad.div_exact(&zs).is_err());
    }

    #[test]
    fn elementary_generating_identity() {
        let ds = [3, 4, 5, 1, 1];
        assert_eq!(ZPolynomial::signed_elementary(&ds), ZPolynomial::product_one_minus(&ds));
    }

    #[test]
    fn declared_degree_overflow() {
        assert!(ZPolynomial::new(vec![c(1), c(0), c(1)], 1).is_err());
    }
}
