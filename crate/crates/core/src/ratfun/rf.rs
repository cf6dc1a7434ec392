use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, rational_to_string, Rational};

/// `σ^e · num(σ) / den(σ)` in canonical form: `num` and `den` coprime, neither
/// divisible by σ, `den(0) = 1`. Zero is `0/1` with `e = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    sigma_power: i64,
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        Self::with_power(0, num, den)
    }

    pub fn with_power(e: i64, num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        } else {
            (num, den)
        };
        Ok(Self::from_coprime(e, num, den))
    }

    /// Assemble from parts already known to be coprime.
    fn from_coprime(mut e: i64, num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let vn = num.valuation().unwrap_or(0);
        let vd = den.valuation().unwrap_or(0);
        e += vn as i64 - vd as i64;
        let num = num.shift_down(vn);
        let den = den.shift_down(vd);
        let c = den.coeff(0).recip();
        RationalFunction { sigma_power: e, num: num.scale(&c), den: den.scale(&c) }
    }

    pub fn zero() -> Self {
        RationalFunction { sigma_power: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coprime(0, Poly::constant(c), Poly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_coprime(0, p, Poly::one())
    }

    /// `c σ^k`, k may be negative.
    pub fn monomial(c: Rational, k: i64) -> Self {
        Self::from_coprime(k, Poly::constant(c), Poly::one())
    }

    pub fn sigma() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `1 / Π (1 − σ^{d_i})`
    pub fn inverse_product(degrees: &[u32]) -> Self {
        let den = degrees
            .iter()
            .fold(Poly::one(), |acc, &d| &acc * &Poly::one_minus_power(d as usize));
        Self::from_coprime(0, Poly::one(), den)
    }

    pub fn sigma_power(&self) -> i64 {
        self.sigma_power
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cross-multiplication equality, independent of the canonical form.
    pub fn cross_equal(&self, o: &Self) -> bool {
        let e = self.sigma_power.min(o.sigma_power);
        let a = &self.num.shift_up((self.sigma_power - e) as usize) * &o.den;
        let b = &o.num.shift_up((o.sigma_power - e) as usize) * &self.den;
        a == b
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), ..self.clone() }
    }

    pub fn mul_sigma_power(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        RationalFunction { sigma_power: self.sigma_power + k, ..self.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(-self.sigma_power, self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.recip()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitute σ → 1/σ.
    pub fn invert_sigma(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let e = -self.sigma_power + dd as i64 - dn as i64;
        Self::from_coprime(e, self.num.reverse(dn), self.den.reverse(dd))
    }

    /// Value at a rational point σ0 ≠ 0 (or σ0 = 0 when the prefactor allows).
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let pre = crate::exactnum::rational::rat_pow(x, self.sigma_power)?;
        Ok(pre * self.num.eval(x) / d)
    }

    /// Taylor coefficients `c_0 … c_L` at σ = 0.
    pub fn series(&self, order: usize) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); order + 1];
        if self.is_zero() {
            return Ok(out);
        }
        if self.sigma_power < 0 {
            return Err(Error::LaurentLeak);
        }
        let e = self.sigma_power as usize;
        if e > order {
            return Ok(out);
        }
        let body = series_quotient(&self.num, &self.den, order - e);
        for (i, c) in body.into_iter().enumerate() {
            out[i + e] = c;
        }
        Ok(out)
    }

    /// Coefficient of σ^n alone.
    pub fn series_coefficient(&self, n: usize) -> Result<Rational> {
        Ok(self.series(n)?.pop().unwrap_or_else(Rational::zero))
    }
}

/// Power-series quotient `num/den` with `den(0) = 1`, through σ^L.
fn series_quotient(num: &Poly, den: &Poly, order: usize) -> Vec<Rational> {
    let d = den.coeffs();
    let nz: Vec<(usize, &Rational)> = d.iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).collect();
    let mut c: Vec<Rational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut v = num.coeff(n);
        for &(k, dk) in &nz {
            if k > n {
                break;
            }
            v -= dk * &c[n - k];
        }
        c.push(v);
    }
    c
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.sigma_power.min(o.sigma_power);
        let a = self.num.shift_up((self.sigma_power - e) as usize);
        let b = o.num.shift_up((o.sigma_power - e) as usize);
        let r = if self.den == o.den {
            RationalFunction::with_power(e, &a + &b, self.den.clone())
        } else {
            let g = self.den.gcd(&o.den);
            let ca = o.den.div_exact(&g).expect("gcd divides");
            let cb = self.den.div_exact(&g).expect("gcd divides");
            let den = &self.den * &ca;
            RationalFunction::with_power(e, &(&a * &ca) + &(&b * &cb), den)
        };
        r.expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, ..self.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RationalFunction::from_coprime(self.sigma_power + o.sigma_power, &n1 * &n2, &d1 * &d2)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        match self.sigma_power {
            0 => {}
            1 => write!(f, "s*")?,
            e => write!(f, "s^{e}*")?,
        }
        if self.den == Poly::one() {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RfRepr {
    sigma_power: i64,
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RfRepr {
            sigma_power: self.sigma_power,
            num: self.num.coeffs().iter().map(rational_to_string).collect(),
            den: self.den.coeffs().iter().map(rational_to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RfRepr::deserialize(d)?;
        let parse = |v: &[String]| -> std::result::Result<Poly, D::Error> {
            v.iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>>>()
                .map(Poly::new)
                .map_err(serde::de::Error::custom)
        };
        let (n, dd) = (parse(&r.num)?, parse(&r.den)?);
        RationalFunction::with_power(r.sigma_power, n, dd).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn geo(k: u32) -> RationalFunction {
        RationalFunction::inverse_product(&[1]).pow(k)
    }

    #[test]
    fn binomial_series() {
        assert_eq!(geo(2).series(3).unwrap(), vec![int(1), int(2), int(3), int(4)]);
        let f = &geo(2) + &geo(3).scale(&int(2));
        assert_eq!(f.series(2).unwrap(), vec![int(3), int(8), int(15)]);
        let g = &RationalFunction::sigma() * &geo(1);
        assert_eq!(g.series(2).unwrap(), vec![int(0), int(1), int(1)]);
    }

    #[test]
    fn laurent_leak() {
        let f = RationalFunction::monomial(int(1), -1);
        assert_eq!(f.series(3), Err(Error::LaurentLeak));
    }

    #[test]
    fn inversion_examples() {
        let s = RationalFunction::sigma().invert_sigma();
        assert_eq!(s.sigma_power(), -1);
        assert_eq!(s.numerator(), &Poly::one());
        let f = geo(1).invert_sigma();
        // 1/(1 − 1/σ) = σ/(σ − 1) = −σ/(1 − σ)
        let expect = (&RationalFunction::sigma() * &geo(1)).scale(&int(-1));
        assert_eq!(f, expect);
        assert_eq!(f.invert_sigma(), geo(1));
    }

    #[test]
    fn canonical_cancellation() {
        // (1 − σ²)/(1 − σ) = 1 + σ
        let f = RationalFunction::new(Poly::one_minus_power(2), Poly::one_minus_power(1)).unwrap();
        assert_eq!(f, RationalFunction::from_poly(Poly::from_ints(&[1, 1])));
        let g = &geo(1) - &geo(1);
        assert!(g.is_zero());
        assert_eq!(g, RationalFunction::zero());
    }

    #[test]
    fn evaluation() {
        let f = geo(2);
        assert_eq!(f.eval(&rat(1, 2)).unwrap(), int(4));
        assert!(f.eval(&int(1)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = (&RationalFunction::monomial(rat(-3, 2), -2) * &geo(3)).scale(&rat(1, 7));
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.starts_with(r#"{"sigma_power":-2,"num":["-3/14"]"#));
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
