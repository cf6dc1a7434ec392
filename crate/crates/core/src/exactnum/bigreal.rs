use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

pub const DEFAULT_DIGITS: u32 = 64;
const GUARD_BITS: u32 = 64;

/// Binary fixed-point real: `mant / 2^bits`, carrying a nominal decimal precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigReal {
    mant: BigInt,
    bits: u32,
    digits: u32,
}

fn bits_for(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), e as usize)
}

/// Round `n / 2^s` to nearest.
fn shr_round(n: &BigInt, s: u32) -> BigInt {
    if s == 0 {
        return n.clone();
    }
    let half = BigInt::one() << (s - 1);
    if n.is_negative() {
        -((-n + half) >> s)
    } else {
        (n + half) >> s
    }
}

fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_mod_floor(d);
    if (r << 1u32).abs() >= d.abs() {
        if d.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl BigReal {
    pub fn zero(digits: u32) -> Self {
        BigReal { mant: BigInt::zero(), bits: bits_for(digits), digits }
    }

    pub fn from_integer(n: i64, digits: u32) -> Self {
        let bits = bits_for(digits);
        BigReal { mant: BigInt::from(n) << bits, bits, digits }
    }

    pub fn from_rational(x: &Rational, digits: u32) -> Self {
        let bits = bits_for(digits);
        let mant = div_round(&(x.numer() << bits), x.denom());
        BigReal { mant, bits, digits }
    }

    pub fn from_f64(x: f64, digits: u32) -> Self {
        let r = Rational::from_float(x).unwrap_or_else(Rational::zero);
        Self::from_rational(&r, digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Requantize at a different precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        let bits = bits_for(digits);
        let mant = if bits >= self.bits {
            &self.mant << (bits - self.bits)
        } else {
            shr_round(&self.mant, self.bits - bits)
        };
        BigReal { mant, bits, digits }
    }

    fn aligned(&self, o: &BigReal) -> (BigInt, BigInt, u32, u32) {
        let digits = self.digits.min(o.digits);
        let a = self.with_digits(digits);
        let b = o.with_digits(digits);
        (a.mant, b.mant, a.bits, digits)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigReal { mant: self.mant.abs(), ..self.clone() }
    }

    pub fn checked_div(&self, o: &BigReal) -> Result<BigReal> {
        let (a, b, bits, digits) = self.aligned(o);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigReal { mant: div_round(&(a << bits), &b), bits, digits })
    }

    pub fn recip(&self) -> Result<BigReal> {
        BigReal::from_integer(1, self.digits).checked_div(self)
    }

    pub fn mul_rational(&self, r: &Rational) -> BigReal {
        BigReal { mant: div_round(&(&self.mant * r.numer()), r.denom()), ..self.clone() }
    }

    /// Square root of a non-negative value.
    pub fn sqrt(&self) -> BigReal {
        assert!(!self.is_negative(), "sqrt of negative BigReal");
        BigReal { mant: (&self.mant << self.bits).sqrt(), bits: self.bits, digits: self.digits }
    }

    /// `round(self * 10^e)` as an integer.
    pub fn scaled_round(&self, e: u32) -> BigInt {
        shr_round(&(&self.mant * pow10(e)), self.bits)
    }

    /// `|self| < 10^e`.
    pub fn abs_lt_pow10(&self, e: i32) -> bool {
        let m = self.mant.abs();
        let one = BigInt::one() << self.bits;
        if e >= 0 {
            m < one * pow10(e as u32)
        } else {
            m * pow10((-e) as u32) < one
        }
    }

    pub fn to_f64(&self) -> f64 {
        let (m, b) = if self.bits > 900 {
            (shr_round(&self.mant, self.bits - 900), 900)
        } else {
            (self.mant.clone(), self.bits)
        };
        m.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(b as i32))
    }

    /// Fixed-point decimal rendering with `n` fractional digits.
    pub fn to_decimal_string(&self, n: u32) -> String {
        let scaled = shr_round(&(self.mant.abs() * pow10(n)), self.bits);
        let mut s = scaled.to_str_radix(10);
        if s.len() <= n as usize {
            s = "0".repeat(n as usize + 1 - s.len()) + &s;
        }
        let split = s.len() - n as usize;
        let (ip, fp) = s.split_at(split);
        let sign = if self.mant.sign() == Sign::Minus && !scaled.is_zero() { "-" } else { "" };
        if n == 0 {
            format!("{sign}{ip}")
        } else {
            format!("{sign}{ip}.{fp}")
        }
    }

    pub fn pi(digits: u32) -> BigReal {
        let bits = bits_for(digits);
        BigReal { mant: pi_mant(bits), bits, digits }
    }

    /// sin and cos of an arbitrary real.
    pub fn sin_cos(&self) -> (BigReal, BigReal) {
        let digits = self.digits;
        let mag = self.abs().to_f64().max(1.0).log2().ceil() as u32;
        let work = digits + (mag as f64 / std::f64::consts::LOG2_10).ceil() as u32 + 4;
        let x = self.with_digits(work);
        let half_pi = BigReal::pi(work).mul_rational(&Rational::new(1.into(), 2.into()));
        let q = x.checked_div(&half_pi).expect("pi is nonzero");
        let k = shr_round(&q.mant, q.bits);
        let r = &x - &BigReal { mant: &half_pi.mant * &k, bits: half_pi.bits, digits: work };
        let (s, c) = taylor_sin_cos(&r);
        let quadrant = k.mod_floor(&BigInt::from(4)).to_u32().unwrap_or(0);
        let (s, c) = rotate(s, c, quadrant);
        (s.with_digits(digits), c.with_digits(digits))
    }

    pub fn sin(&self) -> BigReal {
        self.sin_cos().0
    }

    pub fn cos(&self) -> BigReal {
        self.sin_cos().1
    }

    /// sin(πq) and cos(πq) for rational q, reduced exactly before evaluation.
    pub fn sin_cos_pi(q: &Rational, digits: u32) -> (BigReal, BigReal) {
        let two = Rational::from_integer(2.into());
        let q = q - &two * (q / &two).floor();
        let k = (&q * &two).round();
        let r = &q - &k / &two;
        let work = digits + 4;
        let (s, c) = if r.is_zero() {
            (BigReal::zero(work), BigReal::from_integer(1, work))
        } else {
            taylor_sin_cos(&BigReal::pi(work).mul_rational(&r))
        };
        let quadrant = k.to_integer().mod_floor(&BigInt::from(4)).to_u32().unwrap_or(0);
        let (s, c) = rotate(s, c, quadrant);
        (s.with_digits(digits), c.with_digits(digits))
    }
}

fn rotate(s: BigReal, c: BigReal, quadrant: u32) -> (BigReal, BigReal) {
    match quadrant {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

/// Taylor series for |x| ≲ 1.
fn taylor_sin_cos(x: &BigReal) -> (BigReal, BigReal) {
    let bits = x.bits;
    let one = BigInt::one() << bits;
    let mut sin = BigInt::zero();
    let mut cos = BigInt::zero();
    let mut term = one; // x^n / n!
    let mut n: u64 = 0;
    loop {
        if term.is_zero() {
            break;
        }
        match n % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        n += 1;
        term = ((&term * &x.mant) >> bits) / BigInt::from(n);
    }
    (
        BigReal { mant: sin, bits, digits: x.digits },
        BigReal { mant: cos, bits, digits: x.digits },
    )
}

fn atan_inv(n: u32, bits: u32) -> BigInt {
    // Σ (-1)^k / ((2k+1) n^(2k+1))
    let n = BigInt::from(n);
    let n2 = &n * &n;
    let mut power = (BigInt::one() << bits) / &n;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &n2;
        k += 1;
    }
    sum
}

fn pi_cache() -> &'static Mutex<HashMap<u32, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn pi_mant(bits: u32) -> BigInt {
    if let Some(v) = pi_cache().lock().expect("pi cache poisoned").get(&bits) {
        return v.clone();
    }
    let work = bits + 32;
    let v = atan_inv(5, work) * 16 - atan_inv(239, work) * 4;
    let v = shr_round(&v, 32);
    pi_cache().lock().expect("pi cache poisoned").insert(bits, v.clone());
    v
}

impl Add for &BigReal {
    type Output = BigReal;
    fn add(self, o: &BigReal) -> BigReal {
        let (a, b, bits, digits) = self.aligned(o);
        BigReal { mant: a + b, bits, digits }
    }
}

impl Sub for &BigReal {
    type Output = BigReal;
    fn sub(self, o: &BigReal) -> BigReal {
        let (a, b, bits, digits) = self.aligned(o);
        BigReal { mant: a - b, bits, digits }
    }
}

impl Mul for &BigReal {
    type Output = BigReal;
    fn mul(self, o: &BigReal) -> BigReal {
        let (a, b, bits, digits) = self.aligned(o);
        BigReal { mant: shr_round(&(a * b), bits), bits, digits }
    }
}

impl Add for BigReal {
    type Output = BigReal;
    fn add(self, o: BigReal) -> BigReal {
        &self + &o
    }
}

impl Sub for BigReal {
    type Output = BigReal;
    fn sub(self, o: BigReal) -> BigReal {
        &self - &o
    }
}

impl Mul for BigReal {
    type Output = BigReal;
    fn mul(self, o: BigReal) -> BigReal {
        &self * &o
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { mant: -self.mant, ..self }
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, o: &BigReal) -> Option<Ordering> {
        let (a, b, _, _) = self.aligned(o);
        Some(a.cmp(&b))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(f.precision().map(|p| p as u32).unwrap_or(self.digits)))
    }
}

/// Pairwise summation, so the result does not depend on how terms were produced.
pub fn pairwise_sum(terms: &[BigReal], digits: u32) -> BigReal {
    match terms.len() {
        0 => BigReal::zero(digits),
        1 => terms[0].clone(),
        n => {
            let (l, r) = terms.split_at(n / 2);
            &pairwise_sum(l, digits) + &pairwise_sum(r, digits)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    const PI_100: &str = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170680";

    #[test]
    fn pi_digits() {
        assert_eq!(BigReal::pi(100).to_decimal_string(100), PI_100);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(BigReal::from_rational(&rat(-5, 16), 50).to_decimal_string(6), "-0.312500");
        assert_eq!(BigReal::from_rational(&rat(1, 3), 20).to_decimal_string(3), "0.333");
        assert_eq!(BigReal::from_integer(0, 20).to_decimal_string(2), "0.00");
    }

    #[test]
    fn sqrt_two() {
        let s = BigReal::from_integer(2, 60).sqrt();
        let back = &s * &s;
        assert!((&back - &BigReal::from_integer(2, 60)).abs_lt_pow10(-58));
    }

    #[test]
    fn sin_cos_general_matches_rational_path() {
        let x = BigReal::pi(60).mul_rational(&rat(7, 5));
        let (s1, c1) = x.sin_cos();
        let (s2, c2) = BigReal::sin_cos_pi(&rat(7, 5), 60);
        assert!((&s1 - &s2).abs_lt_pow10(-58));
        assert!((&c1 - &c2).abs_lt_pow10(-58));
        let y = BigReal::from_integer(100, 60);
        let (s, c) = y.sin_cos();
        assert!((&(&s * &s) + &(&c * &c) - BigReal::from_integer(1, 60)).abs_lt_pow10(-57));
        assert!((s.to_f64() - 100f64.sin()).abs() < 1e-12);
    }

    #[test]
    fn exact_quadrant_values() {
        let (s, c) = BigReal::sin_cos_pi(&rat(1, 2), 40);
        assert_eq!(s, BigReal::from_integer(1, 40));
        assert!(c.is_zero());
        let (s, _) = BigReal::sin_cos_pi(&rat(-3, 2), 40);
        assert_eq!(s, BigReal::from_integer(1, 40));
    }
}
