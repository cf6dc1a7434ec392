//! Coexact zeta values, heat-kernel coefficients and Casimir energies,
//! assembled from Barnes special values over degree subsets.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::barnes::{gen_bernoulli, BernoulliContext};
use crate::coxeter::GroupDescriptor;
use crate::error::{Error, Result};
use crate::exactnum::rational::{factorial, rational_str};
use crate::exactnum::{rational_to_string, Rational};
use crate::poincare::BoundaryCondition;
use crate::ratfun::Poly;

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn fact(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// Subsets of the degrees as (size, sum).
fn subsets(degrees: &[u32]) -> Vec<(usize, u64)> {
    let d = degrees.len();
    (0u32..(1 << d))
        .map(|mask| {
            let sum = (0..d).filter(|i| mask >> i & 1 == 1).map(|i| degrees[i] as u64).sum();
            (mask.count_ones() as usize, sum)
        })
        .collect()
}

/// Barnes order m with 2s = −m; only such points are computed.
pub fn barnes_order(s: &Rational) -> Result<usize> {
    let m = -(s * Rational::from_integer(2.into()));
    if !m.is_integer() || m.is_negative() {
        return Err(Error::DomainError(format!("s = {} is not 0 or a negative half-integer", rational_to_string(s))));
    }
    usize::try_from(m.to_integer()).map_err(|_| Error::DomainError("s too negative".into()))
}

fn is_middle(desc: &GroupDescriptor, p: usize) -> bool {
    let d = desc.d() as usize;
    d % 2 == 1 && 2 * p + 1 == d
}

fn require_middle(desc: &GroupDescriptor, p: usize) -> Result<()> {
    if !is_middle(desc, p) {
        return Err(Error::RankError { p: p as i64, d: desc.d() as i64 });
    }
    Ok(())
}

/// Signed Barnes arguments `(±1, a)` with `ζ = Σ ± ζ_d(2s, a)` for the
/// shifted-spectrum zeta of coexact p-forms.
pub fn modified_terms(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize) -> Result<Vec<(Rational, Rational)>> {
    let d = desc.d() as usize;
    if p >= d {
        return Err(Error::RankError { p: p as i64, d: d as i64 });
    }
    // relative rank p is absolute rank d−1−p
    let pa = if bc.is_absolute() { p } else { d - 1 - p };
    let shift = Rational::new(BigInt::from(d as i64 - 1 - 2 * pa as i64), 2.into());
    let mut out = Vec::new();
    for (q, sum) in subsets(&desc.reduced_degrees) {
        if q < pa + 1 {
            continue;
        }
        let a = &shift + Rational::from_integer(sum.into());
        if !a.is_positive() {
            return Err(Error::DomainError(format!("Barnes argument {} not positive", rational_to_string(&a))));
        }
        out.push((sign(pa as i64 + 1 + q as i64), a));
    }
    Ok(out)
}

fn barnes_sum(ctx: &BernoulliContext, terms: &[(Rational, Rational)], m: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (s, a) in terms {
        acc += s * ctx.barnes_value(m, a)?;
    }
    Ok(acc)
}

fn context(desc: &GroupDescriptor, m: usize) -> Result<BernoulliContext> {
    BernoulliContext::new(&desc.reduced_degrees, desc.reduced_degrees.len() + m.max(22))
}

/// Modified coexact zeta at `s` with `−2s` a non-negative integer.
pub fn modified_zeta_value(desc: &GroupDescriptor, p: usize, bc: BoundaryCondition, s: &Rational) -> Result<Rational> {
    let m = barnes_order(s)?;
    barnes_sum(&context(desc, m)?, &modified_terms(desc, bc, p)?, m)
}

/// Sum of the rank p and rank p−1 modified zetas; rank −1 contributes nothing.
pub fn total_form_zeta(desc: &GroupDescriptor, p: usize, bc: BoundaryCondition, s: &Rational) -> Result<Rational> {
    let mut v = modified_zeta_value(desc, p, bc, s)?;
    if p >= 1 {
        v += modified_zeta_value(desc, p - 1, bc, s)?;
    }
    Ok(v)
}

/// Middle-rank coexact zeta, evaluated from the complementary-subset
/// arrangement and from the direct one; the two must agree.
pub fn zeta_ce_value(desc: &GroupDescriptor, p: usize, s: &Rational) -> Result<Rational> {
    require_middle(desc, p)?;
    let d = desc.d() as usize;
    let m = barnes_order(s)?;
    let ctx = context(desc, m)?;
    let total: u64 = desc.reduced_degrees.iter().map(|&x| x as u64).sum();
    let mut first = Rational::zero();
    let mut third = Rational::zero();
    for (q, sum) in subsets(&desc.reduced_degrees) {
        if q + 1 + p <= d {
            first += sign((p + q) as i64) * ctx.barnes_value(m, &Rational::from_integer((total - sum).into()))?;
        }
        if q >= d - p {
            third += sign((p + d + q) as i64) * ctx.barnes_value(m, &Rational::from_integer(sum.into()))?;
        }
    }
    if first != third {
        return Err(Error::InternalIdentityFailure(format!(
            "zeta arrangements differ: {} vs {}",
            rational_to_string(&first),
            rational_to_string(&third)
        )));
    }
    Ok(first)
}

/// A rational multiple of 1 or of √π.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeatCoefficient {
    pub k: usize,
    #[serde(with = "rational_str")]
    pub coefficient: Rational,
    pub sqrt_pi: bool,
}

impl HeatCoefficient {
    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let c = self.coefficient.to_f64().unwrap_or(f64::NAN);
        if self.sqrt_pi {
            c * std::f64::consts::PI.sqrt()
        } else {
            c
        }
    }
}

impl std::fmt::Display for HeatCoefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.sqrt_pi && !self.coefficient.is_zero() {
            write!(f, "{}*sqrt(pi)", rational_to_string(&self.coefficient))
        } else {
            f.write_str(&rational_to_string(&self.coefficient))
        }
    }
}

/// Γ(n/2) as (rational, carries √π).
fn gamma_half(n: usize) -> (Rational, bool) {
    if n.is_multiple_of(2) {
        (fact(n as u64 / 2 - 1), false)
    } else {
        let k = (n - 1) / 2;
        let four = num_traits::pow(BigInt::from(4), k);
        (fact(2 * k as u64) / (Rational::from_integer(four) * fact(k as u64)), true)
    }
}

/// Heat coefficients `C_{k/2}`, k = 0…d, of the modified coexact operator.
/// For k < d they come from the Barnes residues; `C_{d/2} = ζ(0)`.
pub fn heat_coefficients_bc(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize) -> Result<Vec<HeatCoefficient>> {
    let d = desc.d() as usize;
    let terms = modified_terms(desc, bc, p)?;
    let ctx = context(desc, 0)?;
    let mut out = Vec::with_capacity(d + 1);
    for k in 0..d {
        let mut res = Rational::zero();
        for (s, a) in &terms {
            res += s * ctx.barnes_residue(d - k, a)?;
        }
        let (g, root) = gamma_half(d - k);
        let c = g * res * half();
        let sqrt_pi = root && !c.is_zero();
        out.push(HeatCoefficient { k, coefficient: c, sqrt_pi });
    }
    out.push(HeatCoefficient { k: d, coefficient: barnes_sum(&ctx, &terms, 0)?, sqrt_pi: false });
    Ok(out)
}

/// Middle-rank heat coefficients.
pub fn heat_coefficients(desc: &GroupDescriptor, p: usize) -> Result<Vec<HeatCoefficient>> {
    require_middle(desc, p)?;
    heat_coefficients_bc(desc, BoundaryCondition::Absolute, p)
}

/// Casimir energy `½ζ(−1/2)` at middle rank, from the zeta assembly and
/// from the Bernoulli subset sum; the two must agree.
pub fn casimir_energy(desc: &GroupDescriptor, p: usize) -> Result<Rational> {
    require_middle(desc, p)?;
    let direct = zeta_ce_value(desc, p, &-half())? * half();
    let q_sum = casimir_bernoulli_sum(desc, p)?;
    if direct != q_sum {
        return Err(Error::InternalIdentityFailure(format!(
            "Casimir paths differ: {} vs {}",
            rational_to_string(&direct),
            rational_to_string(&q_sum)
        )));
    }
    Ok(direct)
}

/// `(−1)^{p+1}/(2(d+1)!Π d_i) Σ_{q≤p} (−1)^q Σ_{|S|=q} B^{(d)}_{d+1}(d_S)`.
pub fn casimir_bernoulli_sum(desc: &GroupDescriptor, p: usize) -> Result<Rational> {
    let d = desc.d() as usize;
    let ctx = context(desc, 1)?;
    let mut acc = Rational::zero();
    for (q, sum) in subsets(&desc.reduced_degrees) {
        if q <= p {
            acc += sign(q as i64) * ctx.value(d + 1, &Rational::from_integer(sum.into()))?;
        }
    }
    let prod: BigInt = desc.reduced_degrees.iter().map(|&x| BigInt::from(x)).product();
    Ok(sign(p as i64 + 1) * acc / (Rational::from_integer(2.into()) * fact(d as u64 + 1) * Rational::from_integer(prod)))
}

/// Sphere modified zeta two ways: absolute + relative hemisphere sums, and
/// the standard sphere degeneracies summed against one-dimensional
/// Hurwitz values.
pub fn sphere_recombination(d: u32, p: usize, s: &Rational) -> Result<(Rational, Rational)> {
    let desc = GroupDescriptor::hemisphere(d)?;
    let sum = modified_zeta_value(&desc, p, BoundaryCondition::Absolute, s)?
        + modified_zeta_value(&desc, p, BoundaryCondition::Relative, s)?;
    let m = barnes_order(s)?;
    let du = d as usize;
    let c = Rational::new(BigInt::from(du + 1), 2.into());
    // degeneracy as a polynomial in n = l + c
    let lin = |j: usize| Poly::new(vec![Rational::from_integer(BigInt::from(j as i64)) - &c, Rational::one()]);
    let prod_except = |skip: usize| (1..=du).filter(|&j| j != skip).fold(Poly::one(), |acc, j| &acc * &lin(j));
    let deg = (&prod_except(1 + p) + &prod_except(du - p)).scale(&(Rational::one() / (fact(p as u64) * fact((du - p - 1) as u64))));
    let mut oracle = Rational::zero();
    for (j, cj) in deg.coeffs().iter().enumerate() {
        // ζ_H(−(m + j), c) = −B_{m+j+1}(c)/(m+j+1)
        let n = m + j + 1;
        oracle -= cj * gen_bernoulli(n, &c, &[1])? / Rational::from_integer(BigInt::from(n));
    }
    Ok((sum, oracle))
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub group: String,
    pub d: usize,
    pub p: usize,
    pub bc: BoundaryCondition,
    #[serde(with = "rational_str")]
    pub zeta_at_zero: Rational,
    #[serde(with = "crate::exactnum::rational::rational_vec")]
    pub zeta_at_neg_integers: Vec<Rational>,
    #[serde(with = "rational_str")]
    pub casimir: Rational,
    pub heat_coefficients: Vec<HeatCoefficient>,
    pub notes: Vec<String>,
}

/// Values at 0, −1…−kmax, the Casimir energy and heat coefficients.
pub fn spectral_report(desc: &GroupDescriptor, p: usize, bc: BoundaryCondition, kmax: usize) -> Result<SpectralReport> {
    let middle = is_middle(desc, p);
    let mut notes = Vec::new();
    let z = |s: Rational| -> Result<Rational> {
        if middle {
            zeta_ce_value(desc, p, &s)
        } else {
            modified_zeta_value(desc, p, bc, &s)
        }
    };
    let zeta_at_zero = z(Rational::zero())?;
    let zeta_at_neg_integers = (1..=kmax).map(|k| z(-Rational::from_integer(BigInt::from(k)))).collect::<Result<_>>()?;
    let casimir = if middle {
        notes.push("middle rank: Casimir energy agrees with the Bernoulli subset sum".into());
        casimir_energy(desc, p)?
    } else {
        notes.push("non-middle rank: values refer to the shifted operator".into());
        modified_zeta_value(desc, p, bc, &-half())? * half()
    };
    let heat_coefficients = heat_coefficients_bc(desc, bc, p)?;
    Ok(SpectralReport {
        group: desc.label(),
        d: desc.d() as usize,
        p,
        bc,
        zeta_at_zero,
        zeta_at_neg_integers,
        casimir,
        heat_coefficients,
        notes,
    })
}
