//! Accumulated degeneracies, the eigenvalue counting function, its Weyl
//! term and the rank-resolved Weyl–Polya sign pattern.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::coxeter::GroupDescriptor;
use crate::error::{Error, Result};
use crate::exactnum::rational::{binomial, factorial, rational_str, rational_vec};
use crate::exactnum::{rat, rational_to_string, BigReal, Rational};
use crate::poincare::{gce, gce_closed_full, BoundaryCondition};
use crate::ratfun::{Poly, RationalFunction, ZPolynomial};

/// `½(1+σ)/(1−σ)`
fn half_cylinder() -> RationalFunction {
    RationalFunction::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[2, -2])).expect("nonzero denominator")
}

/// Generating function of the accumulated degeneracies G(l).
pub fn accumulated_series(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize) -> Result<RationalFunction> {
    if p >= desc.d() as usize {
        return Err(Error::RankError { p: p as i64, d: desc.d() as i64 });
    }
    Ok(&half_cylinder() * &gce(desc, bc)?.coeff(p))
}

/// `(l+1)(l+2)…(l+r)`
fn rising(l: u64, r: usize) -> BigInt {
    (1..=r as u64).fold(BigInt::one(), |acc, j| acc * BigInt::from(l + j))
}

/// Closed polynomial form of G(l) on the d-hemisphere; relative conditions
/// use the dual rank.
pub fn hemisphere_accumulated_closed(d: usize, p: usize, l: u64, bc: BoundaryCondition) -> Result<Rational> {
    if p >= d {
        return Err(Error::RankError { p: p as i64, d: d as i64 });
    }
    let p = if bc.is_absolute() { p } else { d - 1 - p };
    // coefficient of z^p in (1+z)^k is C(k,p); in (1−z)(1+z)^k it is C(k,p) − C(k,p−1)
    let c = |k: usize, j: i64| Rational::from_integer(binomial(k as i64, j));
    let f = |n: usize| Rational::from_integer(factorial(n as u64));
    let mut g = Rational::from_integer(rising(l, d)) / f(d) * c(d - 1, p as i64);
    if p == 0 {
        g -= rat(1, 2);
    }
    for r in 1..d {
        let coef = c(r - 1, p as i64) - c(r - 1, p as i64 - 1);
        g += coef * Rational::from_integer(rising(l, r)) / (f(r) * rat(2, 1));
    }
    Ok(g)
}

/// Coexact eigenvalue `(l + (d+1)/2)² − ((d−1)/2 − p)²`.
pub fn eigenvalue(d: usize, p: usize, l: u64) -> Rational {
    let a = Rational::from_integer(BigInt::from(2 * l + d as u64 + 1)) / rat(2, 1);
    let b = Rational::new(BigInt::from(d as i64 - 1 - 2 * p as i64), 2.into());
    &a * &a - &b * &b
}

#[derive(Clone, Debug, Serialize)]
pub struct CountingContext {
    pub group: GroupDescriptor,
    pub bc: BoundaryCondition,
    pub p: usize,
    pub g_series: RationalFunction,
    pub accumulated: RationalFunction,
    #[serde(with = "rational_vec")]
    pub degeneracies: Vec<Rational>,
    #[serde(with = "rational_vec")]
    pub accumulated_values: Vec<Rational>,
}

impl CountingContext {
    /// Context with degeneracies through level `lmax`.
    pub fn new(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize, lmax: usize) -> Result<Self> {
        let d = desc.d() as usize;
        if p >= d {
            return Err(Error::RankError { p: p as i64, d: d as i64 });
        }
        let g_series = gce(desc, bc)?.coeff(p);
        let accumulated = &half_cylinder() * &g_series;
        let degeneracies = g_series.series(lmax)?;
        let mut accumulated_values = Vec::with_capacity(lmax + 1);
        let mut below = Rational::zero();
        for g in &degeneracies {
            accumulated_values.push(&below + g / rat(2, 1));
            below += g;
        }
        Ok(CountingContext { group: desc.clone(), bc, p, g_series, accumulated, degeneracies, accumulated_values })
    }

    pub fn d(&self) -> usize {
        self.group.d() as usize
    }

    pub fn lmax(&self) -> usize {
        self.degeneracies.len() - 1
    }

    pub fn eigenvalue(&self, l: u64) -> Rational {
        eigenvalue(self.d(), self.p, l)
    }

    /// G(l), the counting function at the l-th eigenlevel.
    pub fn accumulated(&self, l: usize) -> Result<&Rational> {
        self.accumulated_values.get(l).ok_or(Error::IndexError { index: l as i64, max: self.lmax() as i64 })
    }

    /// N(λ): levels below λ fully, a level at λ with weight one half.
    pub fn counting_function(&self, lambda: &Rational) -> Result<Rational> {
        if lambda.is_negative() {
            return Err(Error::DomainError("λ must be non-negative".into()));
        }
        let mut n = Rational::zero();
        for (l, g) in self.degeneracies.iter().enumerate() {
            let ev = self.eigenvalue(l as u64);
            if &ev < lambda {
                n += g;
            } else {
                if &ev == lambda {
                    n += g / rat(2, 1);
                }
                return Ok(n);
            }
        }
        Err(Error::IndexError { index: self.lmax() as i64 + 1, max: self.lmax() as i64 })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylLeading {
    pub group: String,
    pub p: usize,
    /// `C(d−1,p)/(d! Π d_i)`, the closed value of the Weyl constant.
    #[serde(with = "rational_str")]
    pub constant: Rational,
    /// `C(d−1,p)|M|/((4π)^{d/2} Γ(1+d/2))` evaluated numerically.
    pub constant_numeric: String,
    pub l: u64,
    pub ratio: f64,
    pub ratio_shifted: f64,
}

/// Γ(1 + d/2) as a BigReal.
fn gamma_one_plus_half(d: usize, digits: u32) -> BigReal {
    if d.is_multiple_of(2) {
        BigReal::from_rational(&Rational::from_integer(factorial(d as u64 / 2)), digits)
    } else {
        // Γ(k + 1/2) = (2k)!/(4^k k!) √π with k = (d+1)/2
        let k = (d as u64).div_ceil(2);
        let r = Rational::new(factorial(2 * k), num_traits::pow(BigInt::from(4), k as usize) * factorial(k));
        BigReal::pi(digits).sqrt().mul_rational(&r)
    }
}

fn pi_power_half(n: usize, digits: u32) -> BigReal {
    let pi = BigReal::pi(digits);
    let mut acc = BigReal::from_integer(1, digits);
    for _ in 0..n / 2 {
        acc = &acc * &pi;
    }
    if n % 2 == 1 {
        acc = &acc * &pi.sqrt();
    }
    acc
}

/// Weyl constant from the volume formula, at `digits`.
pub fn weyl_constant_numeric(desc: &GroupDescriptor, p: usize, digits: u32) -> Result<BigReal> {
    let d = desc.d() as usize;
    // |S^d| = 2π^{(d+1)/2}/Γ((d+1)/2), Γ((d+1)/2) = Γ(1 + (d−1)/2)
    let sphere = pi_power_half(d + 1, digits).mul_rational(&rat(2, 1)).checked_div(&gamma_one_plus_half(d - 1, digits))?;
    let prod: BigInt = desc.reduced_degrees.iter().map(|&x| BigInt::from(x)).product();
    let volume = sphere.mul_rational(&Rational::new(1.into(), prod * 2));
    let four_pi = pi_power_half(d, digits).mul_rational(&Rational::from_integer(num_traits::pow(BigInt::from(2), d)));
    let c = Rational::from_integer(binomial(d as i64 - 1, p as i64));
    volume.mul_rational(&c).checked_div(&(&four_pi * &gamma_one_plus_half(d, digits)))
}

pub fn weyl_constant(desc: &GroupDescriptor, p: usize) -> Rational {
    let d = desc.d() as usize;
    let prod: BigInt = desc.reduced_degrees.iter().map(|&x| BigInt::from(x)).product();
    Rational::new(binomial(d as i64 - 1, p as i64), factorial(d as u64) * prod)
}

fn power_half(x: f64, d: usize) -> f64 {
    x.powf(d as f64 / 2.0)
}

/// Weyl constant and the empirical ratio `G(l)/(C λ(l)^{d/2})` at level l,
/// also with λ shifted by 5.
pub fn weyl_leading(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize, l: u64) -> Result<WeylLeading> {
    let d = desc.d() as usize;
    let constant = weyl_constant(desc, p);
    let numeric = weyl_constant_numeric(desc, p, 40)?;
    let ctx = CountingContext::new(desc, bc, p, l as usize)?;
    let g = ctx.accumulated(l as usize)?.to_f64().unwrap_or(f64::NAN);
    let c = constant.to_f64().unwrap_or(f64::NAN);
    let lam = ctx.eigenvalue(l).to_f64().unwrap_or(f64::NAN);
    Ok(WeylLeading {
        group: desc.label(),
        p,
        constant,
        constant_numeric: numeric.to_decimal_string(30),
        l,
        ratio: g / (c * power_half(lam, d)),
        ratio_shifted: g / (c * power_half(lam + 5.0, d)),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PointSign {
    #[serde(with = "rational_str")]
    pub sigma: Rational,
    #[serde(with = "rational_str")]
    pub value: Rational,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankSign {
    pub i: usize,
    /// "nonpositive" or "nonnegative"
    pub expected: &'static str,
    pub holds: bool,
    pub zero_coefficients: Vec<usize>,
    pub first_violation: Option<usize>,
    /// Same test on the unaccumulated difference w_i.
    pub raw_holds: bool,
    pub pointwise: Vec<PointSign>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylPolyaReport {
    pub group: String,
    pub d: usize,
    pub order: usize,
    pub w: ZPolynomial,
    pub big_w: ZPolynomial,
    pub anti_reciprocal: bool,
    pub middle_vanishes: Option<bool>,
    pub vanishes_at_one: bool,
    pub vanishes_at_minus_one: Option<bool>,
    pub ranks: Vec<RankSign>,
    pub structure_holds: bool,
    pub signs_hold: bool,
}

fn sign_ok(x: &Rational, nonpositive: bool) -> bool {
    if nonpositive {
        !x.is_positive()
    } else {
        !x.is_negative()
    }
}

/// `w = g_r − g_a − z^d` and `W = ½(1+σ)/(1−σ) w`, with the exact
/// structural identities and the coefficient-wise sign pattern through σ^order.
pub fn weyl_polya_report(desc: &GroupDescriptor, order: usize) -> Result<WeylPolyaReport> {
    let d = desc.d() as usize;
    let gr = gce_closed_full(desc, BoundaryCondition::Relative)?;
    let ga = gce_closed_full(desc, BoundaryCondition::Absolute)?;
    let top = ZPolynomial::monomial(RationalFunction::one(), d, d)?;
    let diff = gr.sub(&ga).sub(&top);
    if !diff.coeff(d).is_zero() {
        return Err(Error::InternalIdentityFailure("top coefficient of the difference survives".into()));
    }
    let w = diff.redeclare(d - 1)?;
    let big_w = w.scale(&half_cylinder());
    let anti_reciprocal = big_w.reciprocal() == big_w.neg();
    let odd = d % 2 == 1;
    let middle_vanishes = odd.then(|| big_w.coeff((d - 1) / 2).is_zero());
    let vanishes_at_one = big_w.evaluate_at_z(&RationalFunction::one()).is_zero();
    let vanishes_at_minus_one = odd.then(|| big_w.evaluate_at_z(&RationalFunction::from_int(-1)).is_zero());
    let mut ranks = Vec::with_capacity(d);
    for i in 0..d {
        let nonpositive = 2 * i < d;
        let s = big_w.coeff(i).series(order)?;
        let raw = w.coeff(i).series(order)?;
        let zero_coefficients = s.iter().enumerate().filter(|(_, x)| x.is_zero()).map(|(k, _)| k).collect();
        let first_violation = s.iter().position(|x| !sign_ok(x, nonpositive));
        let pointwise = [rat(1, 4), rat(1, 2), rat(3, 4)]
            .into_iter()
            .map(|sg| {
                let v = big_w.coeff(i).eval(&sg)?;
                Ok(PointSign { holds: sign_ok(&v, nonpositive), sigma: sg, value: v })
            })
            .collect::<Result<Vec<_>>>()?;
        ranks.push(RankSign {
            i,
            expected: if nonpositive { "nonpositive" } else { "nonnegative" },
            holds: first_violation.is_none(),
            zero_coefficients,
            first_violation,
            raw_holds: raw.iter().all(|x| sign_ok(x, nonpositive)),
            pointwise,
        });
    }
    let structure_holds = anti_reciprocal
        && middle_vanishes.unwrap_or(true)
        && vanishes_at_one
        && vanishes_at_minus_one.unwrap_or(true);
    let signs_hold = ranks.iter().all(|r| r.holds);
    Ok(WeylPolyaReport {
        group: desc.label(),
        d,
        order,
        w,
        big_w,
        anti_reciprocal,
        middle_vanishes,
        vanishes_at_one,
        vanishes_at_minus_one,
        ranks,
        structure_holds,
        signs_hold,
    })
}

/// Renders a rational for tables.
pub fn fmt_rational(x: &Rational) -> String {
    rational_to_string(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::lookup_str;

    #[test]
    fn hemisphere_three() {
        let h = GroupDescriptor::hemisphere(3).unwrap();
        let ctx = CountingContext::new(&h, BoundaryCondition::Absolute, 1, 40).unwrap();
        assert_eq!(ctx.accumulated(0).unwrap(), &rat(3, 2));
        assert_eq!(ctx.eigenvalue(0), rat(4, 1));
        assert_eq!(ctx.counting_function(&rat(4, 1)).unwrap(), rat(3, 2));
        assert_eq!(ctx.counting_function(&rat(5, 1)).unwrap(), rat(3, 1));
        assert_eq!(ctx.counting_function(&rat(1, 1)).unwrap(), rat(0, 1));
        for l in 0..=30u64 {
            assert_eq!(
                &hemisphere_accumulated_closed(3, 1, l, BoundaryCondition::Absolute).unwrap(),
                ctx.accumulated(l as usize).unwrap()
            );
        }
        let s = accumulated_series(&h, BoundaryCondition::Absolute, 1).unwrap().series(0).unwrap();
        assert_eq!(s[0], rat(3, 2));
    }

    #[test]
    fn weyl_constants_agree() {
        for g in ["3-3-3", "hemisphere-3"] {
            let desc = lookup_str(g).unwrap();
            let exact = BigReal::from_rational(&weyl_constant(&desc, 1), 40);
            let num = weyl_constant_numeric(&desc, 1, 40).unwrap();
            assert!((&exact - &num).abs_lt_pow10(-30));
        }
    }

    #[test]
    fn weyl_polya_b4() {
        let desc = lookup_str("3-3-4").unwrap();
        let r = weyl_polya_report(&desc, 60).unwrap();
        assert!(r.structure_holds);
        assert_eq!(r.middle_vanishes, Some(true));
    }
}
