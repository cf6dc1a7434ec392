use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};

/// Dense univariate polynomial over ℚ; index = power of σ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c σ^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `1 − σ^k`
    pub fn one_minus_power(k: usize) -> Self {
        &Self::one() - &Self::monomial(Rational::one(), k)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Drop the lowest `k` coefficients (they must be zero for exact division by σ^k).
    pub fn shift_down(&self, k: usize) -> Self {
        Poly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `σ^deg p(1/σ)` at the given degree.
    pub fn reverse(&self, deg: usize) -> Self {
        let mut v = vec![Rational::zero(); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[deg - i] = c.clone();
        }
        Poly::new(v)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = d.lead();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible("polynomial division left a remainder".into()));
        }
        Ok(q)
    }

    /// Scalar multiple with integer coprime coefficients and positive leading term.
    fn primitive_int(&self) -> Vec<BigInt> {
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let v: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        primitive(v)
    }

    /// Greatest common divisor, normalized to constant term 1 when possible, else monic.
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_zero() {
            return o.normalized();
        }
        if o.is_zero() {
            return self.normalized();
        }
        if self.degree() == Some(0) || o.degree() == Some(0) {
            return Poly::one();
        }
        // Powers of σ are tracked separately by callers; peel them off here too.
        let vs = self.valuation().unwrap_or(0);
        let vo = o.valuation().unwrap_or(0);
        let v = vs.min(vo);
        let (a, b) = (self.shift_down(vs), o.shift_down(vo));
        let g = if let Some(g) = cyclotomic_gcd(&a, &b) {
            g
        } else {
            prs_gcd(a.primitive_int(), b.primitive_int())
        };
        g.shift_up(v).normalized()
    }

    fn normalized(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = match self.valuation() {
            Some(0) => self.coeff(0),
            _ => self.lead(),
        };
        self.scale(&c.recip())
    }

    /// Multiplicity of `f` as a factor.
    pub fn multiplicity(&self, f: &Poly) -> (usize, Poly) {
        let mut cur = self.clone();
        let mut k = 0;
        while !cur.is_zero() {
            match cur.div_rem(f) {
                Ok((q, r)) if r.is_zero() => {
                    cur = q;
                    k += 1;
                }
                _ => break,
            }
        }
        (k, cur)
    }
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v;
    }
    let g = if v.last().is_some_and(|c| c.is_negative()) { -g } else { g };
    v.iter().map(|c| c / &g).collect()
}

fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn prs_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Poly {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(prem(&a, &b));
        a = b;
        b = r;
    }
    Poly::new(a.into_iter().map(Rational::from_integer).collect())
}

/// n-th cyclotomic polynomial.
pub fn cyclotomic(n: usize) -> Poly {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<usize, Poly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache").get(&n) {
        return p.clone();
    }
    // σ^n − 1 divided by Φ_k for every proper divisor k
    let mut p = &Poly::monomial(Rational::one(), n) - &Poly::one();
    for k in 1..n {
        if n.is_multiple_of(k) {
            p = p.div_exact(&cyclotomic(k)).expect("cyclotomic division");
        }
    }
    cache.lock().expect("cyclotomic cache").insert(n, p.clone());
    p
}

/// Factor `p` completely into cyclotomic polynomials, if possible.
fn cyclotomic_factors(p: &Poly) -> Option<Vec<(usize, usize)>> {
    let deg = p.degree()?;
    // products of cyclotomics are palindromic up to sign
    let c = p.coeffs();
    let pal = (0..=deg).all(|i| c[i] == c[deg - i]);
    let anti = (0..=deg).all(|i| c[i] == -c[deg - i].clone());
    if !pal && !anti {
        return None;
    }
    let mut cur = p.clone();
    let mut out = Vec::new();
    let mut n = 1;
    while cur.degree().unwrap_or(0) > 0 {
        // φ(n) > deg once n > 6 deg + 6
        if n > 6 * deg + 6 {
            return None;
        }
        let phi = cyclotomic(n);
        if phi.degree().unwrap_or(0) <= cur.degree().unwrap_or(0) {
            let (k, rest) = cur.multiplicity(&phi);
            if k > 0 {
                out.push((n, k));
                cur = rest;
            }
        }
        n += 1;
    }
    Some(out)
}

/// Fast gcd when one side is a product of cyclotomic polynomials.
fn cyclotomic_gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    let small_enough = |p: &Poly| p.coeffs.iter().all(|c| c.is_integer() && c.numer().bits() < 8);
    let (cyc, other) = if small_enough(b) && b.degree() <= a.degree() { (b, a) } else if small_enough(a) { (a, b) } else { return None };
    let factors = cyclotomic_factors(cyc)?;
    let mut g = Poly::one();
    let mut rest = other.clone();
    for (n, k) in factors {
        let phi = cyclotomic(n);
        for _ in 0..k {
            match rest.div_rem(&phi) {
                Ok((q, r)) if r.is_zero() => {
                    rest = q;
                    g = &g * &phi;
                }
                _ => break,
            }
        }
    }
    Some(g)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Poly::new(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "s")?,
                (1, false) => write!(f, "{mag}*s")?,
                (_, true) => write!(f, "s^{i}")?,
                (_, false) => write!(f, "{mag}*s^{i}")?,
            }
        }
        Ok(())
    }
}

/// `e_q(σ^{d_1}, …, σ^{d_n})`.
pub fn elementary_symmetric(q: usize, degrees: &[u32]) -> Result<Poly> {
    if q > degrees.len() {
        return Err(Error::IndexError { index: q as i64, max: degrees.len() as i64 });
    }
    Ok(elementary_symmetric_all(degrees).swap_remove(q))
}

/// All of `e_0 … e_n` at once.
pub fn elementary_symmetric_all(degrees: &[u32]) -> Vec<Poly> {
    let mut e = vec![Poly::one()];
    for &d in degrees {
        let m = Poly::monomial(Rational::one(), d as usize);
        let mut next = e.clone();
        next.push(Poly::zero());
        for j in 1..next.len() {
            next[j] = &next[j] + &(&e[j - 1] * &m);
        }
        e = next;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_symmetric(0, &[3, 4]).unwrap(), Poly::one());
        assert_eq!(elementary_symmetric(2, &[1, 1, 1]).unwrap(), Poly::monomial(int(3), 2));
        assert_eq!(elementary_symmetric(3, &[3, 4, 5]).unwrap(), Poly::monomial(int(1), 12));
        assert!(matches!(elementary_symmetric(4, &[3, 4, 5]), Err(Error::IndexError { .. })));
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), Poly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(6), Poly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), Poly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn gcd_paths_agree() {
        let d = &(&Poly::one_minus_power(6) * &Poly::one_minus_power(4)) * &Poly::one_minus_power(10);
        let n = &(&Poly::one_minus_power(2) * &Poly::from_ints(&[3, 1, 7])) * &Poly::one_minus_power(5);
        let g1 = n.gcd(&d);
        let g2 = prs_gcd(n.primitive_int(), d.primitive_int()).normalized();
        assert_eq!(g1, g2);
        assert_eq!(g1, &Poly::one_minus_power(2) * &Poly::one_minus_power(5));
    }

    #[test]
    fn division() {
        let a = Poly::from_ints(&[1, 0, -1]);
        let (q, r) = a.div_rem(&Poly::from_ints(&[1, 1])).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, -1]));
        assert!(r.is_zero());
        assert!(a.div_exact(&Poly::from_ints(&[2, 1])).is_err());
    }
}
