//! Generalized Bernoulli polynomials and Barnes zeta special values.
//!
//! Normalization is Nörlund's: the product of degrees sits inside the
//! generating function, so `ζ_d(−m, a|d) = (−1)^d m!/(d+m)! B^{(d)}_{d+m}(a|d) / Π d_i`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::rational::{factorial, rat_pow};
use crate::exactnum::{rational_to_string, Rational};
use crate::ratfun::Poly;

/// Default highest index: d + 2·10 + 2.
pub fn default_order(d: usize) -> usize {
    d + 22
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn degree_product(degrees: &[u32]) -> Rational {
    Rational::from_integer(degrees.iter().fold(BigInt::one(), |acc, &d| acc * BigInt::from(d)))
}

/// Truncated power-series product through t^n.
fn series_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Reciprocal of a series with unit constant term, through t^n.
fn series_inverse(g: &[Rational], n: usize) -> Vec<Rational> {
    let mut f = vec![Rational::zero(); n + 1];
    f[0] = Rational::one() / &g[0];
    for k in 1..=n {
        let mut acc = Rational::zero();
        for j in 1..=k.min(g.len() - 1) {
            acc += &g[j] * &f[k - j];
        }
        f[k] = -acc / &g[0];
    }
    f
}

/// Cached table of `B^{(d)}_n(x|d)` for n up to a fixed order.
#[derive(Clone, Debug)]
pub struct BernoulliContext {
    degrees: Vec<u32>,
    beta: Vec<Rational>,
    table: Vec<Poly>,
}

impl BernoulliContext {
    pub fn new(degrees: &[u32], max_n: usize) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::DomainError("degrees must be positive".into()));
        }
        let n = max_n;
        // Π_i d_i t / (e^{d_i t} − 1), one factor at a time
        let mut beta = vec![Rational::zero(); n + 1];
        beta[0] = Rational::one();
        for &d in degrees {
            let dd = BigInt::from(d);
            let g: Vec<Rational> = (0..=n)
                .map(|k| Rational::new(num_traits::pow(dd.clone(), k), factorial(k as u64 + 1)))
                .collect();
            beta = series_mul(&beta, &series_inverse(&g, n), n);
        }
        let table = (0..=n)
            .map(|m| {
                let nf = fact(m);
                Poly::new((0..=m).map(|j| &nf / fact(j) * &beta[m - j]).collect())
            })
            .collect();
        Ok(BernoulliContext { degrees: degrees.to_vec(), beta, table })
    }

    pub fn for_degrees(degrees: &[u32]) -> Result<Self> {
        Self::new(degrees, default_order(degrees.len()))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn max_n(&self) -> usize {
        self.table.len() - 1
    }

    /// Taylor coefficients of Π d_i t/(e^{d_i t} − 1).
    pub fn generating_coefficients(&self) -> &[Rational] {
        &self.beta
    }

    pub fn polynomial(&self, n: usize) -> Result<&Poly> {
        self.table.get(n).ok_or(Error::IndexError { index: n as i64, max: self.max_n() as i64 })
    }

    pub fn value(&self, n: usize, x: &Rational) -> Result<Rational> {
        Ok(self.polynomial(n)?.eval(x))
    }

    /// `ζ_d(−m, a|d)` through the Bernoulli form with no sign check on `a`;
    /// at `a = 0` this is the analytic a→0 limit used by the alternating sum.
    pub fn barnes_value(&self, m: usize, a: &Rational) -> Result<Rational> {
        let d = self.degrees.len();
        let b = self.value(d + m, a)?;
        let sign = if d.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        Ok(sign * fact(m) / fact(d + m) * b / degree_product(&self.degrees))
    }

    /// Residue of `ζ_d(s, a|d)` at `s = k`.
    pub fn barnes_residue(&self, k: usize, a: &Rational) -> Result<Rational> {
        let d = self.degrees.len();
        if k < 1 || k > d {
            return Err(Error::DomainError(format!("residue index {k} outside 1..={d}")));
        }
        let b = self.value(d - k, a)?;
        let sign = if (d - k).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        Ok(sign * b / (fact(k - 1) * fact(d - k) * degree_product(&self.degrees)))
    }
}

fn context_for(degrees: &[u32], n: usize) -> Result<BernoulliContext> {
    BernoulliContext::new(degrees, n.max(default_order(degrees.len())))
}

pub fn gen_bernoulli(n: usize, x: &Rational, degrees: &[u32]) -> Result<Rational> {
    context_for(degrees, n)?.value(n, x)
}

fn require_positive(a: &Rational) -> Result<()> {
    if !a.is_positive() {
        return Err(Error::DomainError(format!("Barnes argument {} is not positive", rational_to_string(a))));
    }
    Ok(())
}

/// `ζ_d(−m, a|d)` for `a > 0`.
pub fn barnes_special_value(m: usize, a: &Rational, degrees: &[u32]) -> Result<Rational> {
    require_positive(a)?;
    context_for(degrees, degrees.len() + m)?.barnes_value(m, a)
}

pub fn barnes_residue(k: usize, a: &Rational, degrees: &[u32]) -> Result<Rational> {
    require_positive(a)?;
    context_for(degrees, degrees.len())?.barnes_residue(k, a)
}

/// Checks `ζ_d(−m, a + d_i) = ζ_d(−m, a) − ζ_{d−1}(−m, a)` with `d_i` omitted.
pub fn barnes_recursion_holds(m: usize, a: &Rational, degrees: &[u32], i: usize) -> Result<bool> {
    if i >= degrees.len() {
        return Err(Error::IndexError { index: i as i64, max: degrees.len() as i64 - 1 });
    }
    let mut rest = degrees.to_vec();
    let di = rest.remove(i);
    let shifted = a + Rational::from_integer(di.into());
    let lhs = barnes_special_value(m, &shifted, degrees)?;
    let rhs = barnes_special_value(m, a, degrees)? - barnes_special_value(m, a, &rest)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, Serialize)]
pub struct AlternatingSumReport {
    pub degrees: Vec<u32>,
    #[serde(with = "crate::exactnum::rational::rational_str")]
    pub a: Rational,
    pub m: usize,
    #[serde(with = "crate::exactnum::rational::rational_str")]
    pub lhs: Rational,
    #[serde(with = "crate::exactnum::rational::rational_str")]
    pub rhs: Rational,
    pub passed: bool,
}

/// Subset sums `d_T` paired with `(−1)^{|T|}`, over all subsets of `degrees`.
pub fn signed_subset_sums(degrees: &[u32]) -> Vec<(i32, u64)> {
    let d = degrees.len();
    (0u32..(1u32 << d))
        .map(|mask| {
            let sum: u64 = (0..d).filter(|i| mask >> i & 1 == 1).map(|i| degrees[i] as u64).sum();
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            (sign, sum)
        })
        .collect()
}

/// Alternating sum `Σ_T (−1)^{|T|} ζ_d(−2m, a + d_T)` against `a^{2m}`.
/// `a = 0` is allowed and taken in the Bernoulli form.
pub fn verify_alternating_sum(degrees: &[u32], a: &Rational, m: usize) -> Result<AlternatingSumReport> {
    if a.is_negative() {
        return Err(Error::DomainError("alternating sum needs a ≥ 0".into()));
    }
    let ctx = context_for(degrees, degrees.len() + 2 * m)?;
    let mut lhs = Rational::zero();
    for (sign, sum) in signed_subset_sums(degrees) {
        let v = ctx.barnes_value(2 * m, &(a + Rational::from_integer(sum.into())))?;
        if sign > 0 {
            lhs += v;
        } else {
            lhs -= v;
        }
    }
    let rhs = if m == 0 { Rational::one() } else { rat_pow(a, 2 * m as i64)? };
    Ok(AlternatingSumReport { degrees: degrees.to_vec(), a: a.clone(), m, passed: lhs == rhs, lhs, rhs })
}
