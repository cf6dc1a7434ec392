use num_traits::{Signed, Zero};

use super::bigreal::BigReal;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigFn {
    Cot,
    Cosec,
}

/// cot or cosec of `π·num/den`.
pub fn trig_at_rational_angle(f: TrigFn, num: i64, den: i64, digits: u32) -> Result<BigReal> {
    if den == 0 {
        return Err(Error::DivisionByZero);
    }
    let q = Rational::new(num.into(), den.into());
    if q.is_zero() || q.abs() >= int(2) {
        return Err(Error::AngleOutOfRange(num, den));
    }
    if q.is_integer() {
        return Err(Error::PoleAngle(num, den));
    }
    let (s, c) = BigReal::sin_cos_pi(&q, digits + 8);
    let v = match f {
        TrigFn::Cot => c.checked_div(&s)?,
        TrigFn::Cosec => s.recip()?,
    };
    Ok(v.with_digits(digits))
}
