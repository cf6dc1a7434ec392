//! Double Poincaré series, the recursion chain down to coexact forms, and
//! the exact identities tying them together.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coxeter::molien::char_poly_classes;
use crate::coxeter::{GroupDescriptor, GroupElement};
use crate::error::{Error, Result};
use crate::exactnum::rational::binomial;
use crate::exactnum::{int, rational_to_string, QuadraticNumber, Rational};
use crate::ratfun::{elementary_symmetric_all, Poly, RationalFunction, ZPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryCondition {
    Absolute,
    Relative,
}

impl BoundaryCondition {
    pub fn dual(self) -> Self {
        match self {
            BoundaryCondition::Absolute => BoundaryCondition::Relative,
            BoundaryCondition::Relative => BoundaryCondition::Absolute,
        }
    }

    pub fn is_absolute(self) -> bool {
        self == BoundaryCondition::Absolute
    }

    pub fn both() -> [BoundaryCondition; 2] {
        [BoundaryCondition::Absolute, BoundaryCondition::Relative]
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_absolute() { "absolute" } else { "relative" })
    }
}

impl FromStr for BoundaryCondition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "absolute" | "a" | "neumann" => Ok(BoundaryCondition::Absolute),
            "relative" | "r" | "dirichlet" => Ok(BoundaryCondition::Relative),
            _ => Err(Error::Parse(format!("unknown boundary condition {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeriesKind {
    H,
    HC,
    HCC,
    HCCC,
    GCE,
    ZeroForm,
    T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeriesValue {
    Z(ZPolynomial),
    F(RationalFunction),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesFamily {
    pub kind: SeriesKind,
    pub bc: BoundaryCondition,
    pub group: GroupDescriptor,
    pub value: SeriesValue,
}

fn sig(k: i64) -> RationalFunction {
    RationalFunction::monomial(int(1), k)
}

fn one() -> RationalFunction {
    RationalFunction::one()
}

/// `z + σ`
fn z_plus_sigma() -> ZPolynomial {
    ZPolynomial::linear(sig(1), one())
}

/// `1 + zσ`
fn one_plus_z_sigma() -> ZPolynomial {
    ZPolynomial::linear(one(), sig(1))
}

fn identity_failure(what: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::InternalIdentityFailure(format!("{what}: {e}"))
}

/// `1/Π(1 − σ^{d_i})` over the reduced degrees.
pub fn inverse_product(desc: &GroupDescriptor) -> RationalFunction {
    RationalFunction::inverse_product(&desc.reduced_degrees)
}

/// Closed product form of the double series, declared at z-degree d+1.
pub fn double_series_closed(desc: &GroupDescriptor, bc: BoundaryCondition) -> ZPolynomial {
    let factor = |m: u32| match bc {
        BoundaryCondition::Absolute => ZPolynomial::linear(one(), sig(m as i64)),
        BoundaryCondition::Relative => ZPolynomial::linear(sig(m as i64), one()),
    };
    desc.exponents.iter().fold(factor(1), |acc, &m| acc.mul(&factor(m))).scale(&inverse_product(desc))
}

/// Group average `(1−σ²)/|Γ| Σ det(1+zA) χ(A)/det(1−σA)` as a table
/// `[k][l]` of σ^l coefficients of z^k, l ≤ order. χ is trivial for
/// absolute and the determinant for relative conditions.
pub fn double_series_group_average(
    elements: &[GroupElement],
    bc: BoundaryCondition,
    order: usize,
) -> Result<Vec<Vec<Rational>>> {
    let classes = char_poly_classes(elements);
    let zero_row = || -> Result<Vec<QuadraticNumber>> { Ok(vec![QuadraticNumber::zero(5)?; order + 1]) };
    let partial: Vec<Vec<Vec<QuadraticNumber>>> = classes
        .par_iter()
        .map(|(cp, det, count)| -> Result<Vec<Vec<QuadraticNumber>>> {
            let chi: i64 = if bc.is_absolute() { 1 } else { *det as i64 };
            let w = Rational::from_integer((chi * *count as i64).into());
            let inv = crate::coxeter::molien::inverse_det_series(cp, order)?;
            (0..=4)
                .map(|k| {
                    let ck = cp.coeff(k).scale(&w);
                    inv.iter().map(|s| ck.try_mul(s)).collect::<Result<Vec<_>>>()
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut acc: Vec<Vec<QuadraticNumber>> = (0..=4).map(|_| zero_row()).collect::<Result<_>>()?;
    for table in partial {
        for (row, add) in acc.iter_mut().zip(table) {
            for (a, b) in row.iter_mut().zip(add) {
                *a = a.try_add(&b)?;
            }
        }
    }
    let size = Rational::from_integer(elements.len().into());
    acc.into_iter()
        .map(|row| {
            let r: Vec<Rational> =
                row.iter().map(|q| crate::coxeter::molien::rational_part(q).map(|x| x / &size)).collect::<Result<_>>()?;
            // multiply by 1 − σ²
            Ok((0..=order).map(|l| if l >= 2 { &r[l] - &r[l - 2] } else { r[l].clone() }).collect())
        })
        .collect()
}

/// σ-series of every z coefficient of `f`, in the group-average layout.
pub fn series_table(f: &ZPolynomial, order: usize) -> Result<Vec<Vec<Rational>>> {
    f.coeffs().iter().map(|c| c.series(order)).collect()
}

/// Every stage of the chain from the double series down to the coexact
/// generating function.
#[derive(Clone, Debug, Serialize)]
pub struct CoexactChain {
    pub bc: BoundaryCondition,
    pub h: ZPolynomial,
    pub hc: ZPolynomial,
    pub hcc: ZPolynomial,
    pub hccc: ZPolynomial,
    /// The same as `hccc`, built in one step from `h`.
    pub hccc_direct: ZPolynomial,
    /// `(h^CCC(z) − h^CCC(0))/z` at declared degree d, before the top
    /// coefficient (no coexact d-forms) is dropped.
    pub g_full: ZPolynomial,
}

pub fn build_chain(desc: &GroupDescriptor, bc: BoundaryCondition) -> Result<CoexactChain> {
    let n = desc.d() as usize + 1;
    let h = double_series_closed(desc, bc);
    let abs = bc.is_absolute();
    let fail = identity_failure("recursion chain");

    let mut num = h.shift(1);
    if abs {
        num = num.add(&ZPolynomial::linear(sig(1), sig(2)));
    }
    let hc = num.div_exact(&z_plus_sigma()).map_err(&fail)?;

    let mut num = h.redeclare(n + 1)?;
    if !abs {
        num = num.add(&ZPolynomial::linear(sig(2), sig(1)).shift(n));
    }
    let hcc = num.div_exact(&one_plus_z_sigma()).map_err(&fail)?;

    let mut num = hcc.shift(1);
    if abs {
        num = num.add(&ZPolynomial::constant(sig(1), 0));
    }
    let hccc = num.div_exact(&z_plus_sigma()).map_err(&fail)?;

    let mut num = h.shift(1).redeclare(n + 2)?;
    if abs {
        num = num.add(&ZPolynomial::linear(sig(1), sig(2)));
    } else {
        num = num.add(&ZPolynomial::linear(sig(2), sig(1)).shift(n + 1));
    }
    let hccc_direct = num.div_exact(&z_plus_sigma().mul(&one_plus_z_sigma())).map_err(&fail)?;

    let g_full = hccc.drop_constant_over_z();
    Ok(CoexactChain { bc, h, hc, hcc, hccc, hccc_direct, g_full })
}

/// Closed coexact form at declared degree d; the top coefficient is 1 for
/// relative and 0 for absolute conditions.
pub fn gce_closed_full(desc: &GroupDescriptor, bc: BoundaryCondition) -> Result<ZPolynomial> {
    let d = desc.d() as usize;
    let inv = inverse_product(desc);
    let fail = identity_failure("closed coexact form");
    match bc {
        BoundaryCondition::Absolute => {
            let p = desc.exponents.iter().fold(ZPolynomial::constant(one(), 0), |acc, &m| {
                acc.mul(&ZPolynomial::linear(one(), sig(m as i64)))
            });
            let num = p.scale(&inv).sub(&ZPolynomial::constant(one(), 0));
            num.div_exact(&z_plus_sigma()).map_err(&fail)?.redeclare(d)
        }
        BoundaryCondition::Relative => {
            let p = desc.exponents.iter().fold(ZPolynomial::constant(one(), 0), |acc, &m| {
                acc.mul(&ZPolynomial::linear(sig(m as i64), one()))
            });
            let num = p.scale(&inv).add(&ZPolynomial::monomial(sig(1), d + 1, d + 1)?);
            num.div_exact(&one_plus_z_sigma()).map_err(&fail)
        }
    }
}

fn strip_top(g_full: &ZPolynomial, bc: BoundaryCondition) -> Result<ZPolynomial> {
    let d = g_full.declared_degree();
    let expect = if bc.is_absolute() { RationalFunction::zero() } else { one() };
    if g_full.coeff(d) != expect {
        return Err(Error::InternalIdentityFailure(format!("top coexact coefficient is {}", g_full.coeff(d))));
    }
    let mut c = g_full.coeffs().to_vec();
    c.pop();
    ZPolynomial::new(c, d.saturating_sub(1))
}

/// Coexact generating function `g(z,σ)` at declared degree d−1, from the
/// closed form.
pub fn gce(desc: &GroupDescriptor, bc: BoundaryCondition) -> Result<ZPolynomial> {
    strip_top(&gce_closed_full(desc, bc)?, bc)
}

/// Runs the recursion chain and requires it to agree with the closed form.
pub fn chain_to_coexact(desc: &GroupDescriptor, bc: BoundaryCondition) -> Result<SeriesFamily> {
    let ch = build_chain(desc, bc)?;
    if ch.hccc != ch.hccc_direct {
        return Err(Error::InternalIdentityFailure("stepwise and one-step h^CCC differ".into()));
    }
    let closed = gce_closed_full(desc, bc)?;
    if ch.g_full != closed {
        return Err(Error::InternalIdentityFailure(format!("chain and closed coexact forms differ ({bc})")));
    }
    Ok(SeriesFamily { kind: SeriesKind::GCE, bc, group: desc.clone(), value: SeriesValue::Z(strip_top(&ch.g_full, bc)?) })
}

fn check_rank(desc: &GroupDescriptor, p: usize) -> Result<()> {
    if p >= desc.d() as usize {
        return Err(Error::RankError { p: p as i64, d: desc.d() as i64 });
    }
    Ok(())
}

/// Single-rank coexact series from elementary symmetric functions of σ^{d_i}.
pub fn gce_elementary(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize) -> Result<RationalFunction> {
    check_rank(desc, p)?;
    let d = desc.d() as usize;
    let e = elementary_symmetric_all(&desc.reduced_degrees);
    let inv = inverse_product(desc);
    let alt = |q: usize| if q.is_multiple_of(2) { e[d - q].clone() } else { -&e[d - q] };
    let (sum, sign, shift) = match bc {
        BoundaryCondition::Absolute => {
            let s = (0..d - p).fold(Poly::zero(), |acc, q| &acc + &alt(q));
            (s, (d + 1 + p).is_multiple_of(2), -(p as i64 + 1))
        }
        BoundaryCondition::Relative => {
            let s = (0..=p).fold(Poly::zero(), |acc, q| &acc + &alt(q));
            (s, p.is_multiple_of(2), -((d - p) as i64))
        }
    };
    let f = (&RationalFunction::from_poly(sum) * &inv).mul_sigma_power(shift);
    Ok(if sign { f } else { -f })
}

/// z^p coefficient of the chain output, cross-checked against the
/// elementary-symmetric form.
pub fn gce_single_rank(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize) -> Result<RationalFunction> {
    check_rank(desc, p)?;
    let fam = chain_to_coexact(desc, bc)?;
    let g = match fam.value {
        SeriesValue::Z(z) => z.coeff(p),
        SeriesValue::F(_) => unreachable!(),
    };
    if g != gce_elementary(desc, bc, p)? {
        return Err(Error::InternalIdentityFailure(format!("rank {p} {bc} series disagrees with elementary form")));
    }
    Ok(g)
}

/// Coexact series with the rank −1 convention `g_a(−1) = 1`.
pub fn gce_rank_extended(desc: &GroupDescriptor, bc: BoundaryCondition, p: i64) -> Result<RationalFunction> {
    if p == -1 && bc.is_absolute() {
        return Ok(one());
    }
    if p < 0 {
        return Err(Error::RankError { p, d: desc.d() as i64 });
    }
    check_rank(desc, p as usize)?;
    Ok(gce(desc, bc)?.coeff(p as usize))
}

fn sanity_integer(x: &Rational, what: &str) -> Result<()> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::SanityFailure(format!("{what} = {} is not a non-negative integer", rational_to_string(x))));
    }
    Ok(())
}

/// Degeneracies of coexact p-forms at levels 0…lmax.
pub fn degeneracies(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize, lmax: usize) -> Result<Vec<Rational>> {
    check_rank(desc, p)?;
    let s = gce(desc, bc)?.coeff(p).series(lmax)?;
    for (l, x) in s.iter().enumerate() {
        sanity_integer(x, &format!("degeneracy at l={l}"))?;
    }
    Ok(s)
}

pub fn degeneracy(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize, l: usize) -> Result<Rational> {
    Ok(degeneracies(desc, bc, p, l)?.pop().unwrap_or_else(Rational::zero))
}

/// Full-sphere coexact degeneracy.
pub fn sphere_degeneracy(d: usize, p: usize, l: usize) -> Rational {
    let f = |n: usize| Rational::from_integer(crate::exactnum::rational::factorial(n as u64));
    let pre = f(l + d) / (f(p) * f(d - p - 1) * f(l));
    pre * (Rational::new(1.into(), ((l + 1 + p) as i64).into()) + Rational::new(1.into(), ((l + d - p) as i64).into()))
}

/// Per-rank hemisphere forms as sums of powers of 1/(1−σ).
pub fn hemisphere_rank_form(d: usize, p: usize, bc: BoundaryCondition) -> RationalFunction {
    let (lo, k) = match bc {
        BoundaryCondition::Absolute => (p + 1, p),
        BoundaryCondition::Relative => (d - p, d - p - 1),
    };
    (lo..=d).fold(RationalFunction::zero(), |acc, m| {
        let c = Rational::from_integer(binomial(m as i64 - 1, k as i64));
        &acc + &RationalFunction::inverse_product(&vec![1; m]).scale(&c)
    })
}

/// `σ^{(d+1)/2} g_b(p, σ)` for odd d.
pub fn cylinder_t(desc: &GroupDescriptor, bc: BoundaryCondition, p: usize) -> Result<RationalFunction> {
    let d = desc.d() as i64;
    if d % 2 == 0 {
        return Err(Error::DomainError("the cylinder kernel prefactor is rational only for odd d".into()));
    }
    Ok(gce_rank_extended(desc, bc, p as i64)?.mul_sigma_power((d + 1) / 2))
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub group: String,
    pub detail: String,
    pub passed: bool,
}

impl IdentityCheck {
    fn new(name: &str, desc: &GroupDescriptor, detail: impl Into<String>, passed: bool) -> Self {
        IdentityCheck { name: name.into(), group: desc.label(), detail: detail.into(), passed }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CylinderReport {
    pub p: usize,
    /// Reflection of the absolute kernel onto the relative one.
    pub reflection: bool,
    /// Middle-rank self-symmetry, odd d only.
    pub self_symmetry: Option<[bool; 2]>,
    /// Doubled-domain cosh form, odd d only.
    pub doubled: Option<bool>,
}

/// Cylinder-kernel symmetries for rank p, in the σ-form
/// `g_a(p,1/σ) − (−1)^d σ^{d+1} g_r(p,σ) = (−1)^{p+1} σ^{p+1}` plus the odd-d
/// forms in terms of `T = σ^{(d+1)/2} g`.
pub fn cylinder_symmetry_check(desc: &GroupDescriptor, p: usize) -> Result<CylinderReport> {
    check_rank(desc, p)?;
    let d = desc.d() as usize;
    let ga = gce(desc, BoundaryCondition::Absolute)?.coeff(p);
    let gr = gce(desc, BoundaryCondition::Relative)?.coeff(p);
    let sd = if d.is_multiple_of(2) { one() } else { -one() };
    let lhs = &ga.invert_sigma() - &(&sd * &gr.mul_sigma_power(d as i64 + 1));
    let pm = if (p + 1).is_multiple_of(2) { one() } else { -one() };
    let reflection = lhs == pm.mul_sigma_power(p as i64 + 1);
    let (mut self_symmetry, mut doubled) = (None, None);
    if d % 2 == 1 {
        if 2 * p + 1 == d {
            let mut r = [false; 2];
            for (i, bc) in BoundaryCondition::both().into_iter().enumerate() {
                let t = cylinder_t(desc, bc, p)?;
                r[i] = &t.invert_sigma() + &t == pm;
            }
            self_symmetry = Some(r);
        }
        let t = &cylinder_t(desc, BoundaryCondition::Absolute, p)? + &cylinder_t(desc, BoundaryCondition::Relative, p)?;
        let c = p as i64 - (d as i64 - 1) / 2;
        let rhs = &(&sig(c) + &sig(-c)) * &(if (p + d).is_multiple_of(2) { one() } else { -one() });
        doubled = Some(&t + &t.invert_sigma() == rhs);
    }
    Ok(CylinderReport { p, reflection, self_symmetry, doubled })
}

/// Zero-form series: `1/Π` absolute, `σ^{1+Σm_i}/Π` relative, checked
/// against `δ_ba + σ g_b(0, σ)`.
pub fn zeroform_series(desc: &GroupDescriptor, bc: BoundaryCondition) -> Result<RationalFunction> {
    let inv = inverse_product(desc);
    let closed = match bc {
        BoundaryCondition::Absolute => inv,
        BoundaryCondition::Relative => inv.mul_sigma_power(desc.d0() as i64 + 1),
    };
    let delta = if bc.is_absolute() { one() } else { RationalFunction::zero() };
    let via = &delta + &gce(desc, bc)?.coeff(0).mul_sigma_power(1);
    if via != closed {
        return Err(Error::InternalIdentityFailure(format!("zero-form series ({bc})")));
    }
    Ok(closed)
}

#[derive(Clone, Debug, Serialize)]
pub struct DoublingReport {
    pub d: usize,
    pub order: usize,
    pub doubled: ZPolynomial,
    pub rank_forms_match: bool,
    pub sphere_match: bool,
}

/// Hemisphere doubling: absolute + relative is the sphere, per rank and
/// per level against the standard sphere degeneracies.
pub fn doubling_check(d: u32, order: usize) -> Result<DoublingReport> {
    let desc = GroupDescriptor::hemisphere(d)?;
    let du = d as usize;
    let ga = gce(&desc, BoundaryCondition::Absolute)?;
    let gr = gce(&desc, BoundaryCondition::Relative)?;
    let doubled = ga.add(&gr);
    let mut rank_forms_match = true;
    let mut sphere_match = true;
    for p in 0..du {
        for bc in BoundaryCondition::both() {
            let g = if bc.is_absolute() { ga.coeff(p) } else { gr.coeff(p) };
            rank_forms_match &= g == hemisphere_rank_form(du, p, bc);
        }
        let s = doubled.coeff(p).series(order)?;
        sphere_match &= s.iter().enumerate().all(|(l, x)| *x == sphere_degeneracy(du, p, l));
    }
    Ok(DoublingReport { d: du, order, doubled, rank_forms_match, sphere_match })
}

fn coefficient_top(f: &ZPolynomial) -> RationalFunction {
    f.coeff(f.declared_degree())
}

/// Every exact generating-function identity for one group.
pub fn identity_suite(desc: &GroupDescriptor, order: usize) -> Result<Vec<IdentityCheck>> {
    let d = desc.d() as usize;
    let mut out = Vec::new();
    let mut push = |name: &str, detail: String, ok: bool| out.push(IdentityCheck::new(name, desc, detail, ok));
    let s = sig(1);
    let minus_sigma = -&s;
    let chains: Vec<CoexactChain> =
        BoundaryCondition::both().into_iter().map(|bc| build_chain(desc, bc)).collect::<Result<_>>()?;
    let ga = gce(desc, BoundaryCondition::Absolute)?;
    let gr = gce(desc, BoundaryCondition::Relative)?;
    for ch in &chains {
        let bc = ch.bc;
        let a = bc.is_absolute();
        let delta_a = if a { one() } else { RationalFunction::zero() };
        let delta_r = if a { RationalFunction::zero() } else { one() };
        push("chain-one-step", format!("{bc}"), ch.hccc == ch.hccc_direct);
        let closed = gce_closed_full(desc, bc)?;
        push("coexact-closed-form", format!("{bc}"), ch.g_full == closed);
        let g = if a { &ga } else { &gr };
        for p in 0..d {
            push("coexact-elementary", format!("{bc} p={p}"), g.coeff(p) == gce_elementary(desc, bc, p)?);
        }
        push("endpoint hC(0)", format!("{bc}"), ch.hc.coeff(0) == delta_a);
        push("endpoint *hC(0)", format!("{bc}"), coefficient_top(&ch.hc) == coefficient_top(&ch.h));
        push("endpoint hCCC(0)", format!("{bc}"), ch.hccc.coeff(0) == delta_a);
        push("endpoint *hCCC(0)", format!("{bc}"), coefficient_top(&ch.hccc) == delta_r);
        push("endpoint *hCC(0)", format!("{bc}"), coefficient_top(&ch.hcc) == delta_r);
        push("endpoint hCC(0)", format!("{bc}"), ch.hcc.coeff(0) == ch.h.coeff(0));
        let one_minus_s2 = &one() - &sig(2);
        push("supertrace h", format!("{bc}"), ch.h.evaluate_at_z(&minus_sigma) == &delta_a * &one_minus_s2);
        push("supertrace hCC", format!("{bc}"), ch.hcc.evaluate_at_z(&minus_sigma) == delta_a);
        let zf = zeroform_series(desc, bc);
        push("zero-form", format!("{bc}"), zf.is_ok());
        for p in 0..d {
            let ok = degeneracies(desc, bc, p, order).is_ok();
            push("degeneracy-integrality", format!("{bc} p={p} l<={order}"), ok);
        }
    }
    let (ca, cr) = (&chains[0], &chains[1]);
    push("reciprocity h", "h_r = *h_a".into(), cr.h == ca.h.reciprocal());
    push("reciprocity hCCC", "absolute".into(), ca.hccc == cr.hccc.reciprocal());
    push("reciprocity hCCC", "relative".into(), cr.hccc == ca.hccc.reciprocal());
    push("reciprocity hCC*", "absolute".into(), ca.hcc.reciprocal() == cr.hc);
    push("reciprocity hCC*", "relative".into(), cr.hcc.reciprocal() == ca.hc);
    push("duality", format!("g_b(p) = g_*b({}-p)", d - 1), gr == ga.reciprocal());
    // g_r(z) = z^{d−1}(g_a(1/z) + z)
    let gr_full = gce_closed_full(desc, BoundaryCondition::Relative)?;
    let via_a = ga.reciprocal().redeclare(d)?.add(&ZPolynomial::monomial(one(), d, d)?);
    push("relative-from-absolute", "rank -1 convention".into(), gr_full == via_a);
    let sum: RationalFunction =
        desc.reduced_degrees.iter().fold(RationalFunction::zero(), |acc, &k| &acc + &RationalFunction::inverse_product(&[k]));
    let lhs = &(&ga.evaluate_at_z(&minus_sigma) * &s) + &RationalFunction::from_int(d as i64);
    push("hemisphere-supertrace", "σ g_a(−σ,σ) + d".into(), lhs == sum);
    for p in 0..d {
        let r = cylinder_symmetry_check(desc, p)?;
        push("cylinder-reflection", format!("p={p}"), r.reflection);
        if let Some([x, y]) = r.self_symmetry {
            push("cylinder-self", format!("absolute p={p}"), x);
            push("cylinder-self", format!("relative p={p}"), y);
        }
        if let Some(x) = r.doubled {
            push("cylinder-doubled", format!("p={p}"), x);
        }
        if 2 * p + 1 == d {
            push("middle-self-dual", format!("p={p}"), ga.coeff(p) == gr.coeff(p));
        }
    }
    if let crate::coxeter::GroupName::Hemisphere(dd) = desc.name {
        let rep = doubling_check(dd, order)?;
        push("doubling rank forms", format!("d={dd}"), rep.rank_forms_match);
        push("doubling sphere", format!("d={dd} l<={order}"), rep.sphere_match);
        // z^d g_r(1/z) = z/(z+σ)[((1+z)/(1−σ))^d + σ/z]
        let base = ZPolynomial::linear(one(), one()).scale(&RationalFunction::inverse_product(&[1]));
        let pw = (1..d).fold(base.clone(), |acc, _| acc.mul(&base));
        let num = pw.shift(1).add(&ZPolynomial::constant(s.clone(), 0));
        let rhs = num.div_exact(&z_plus_sigma())?;
        push("hemisphere relative", format!("d={dd}"), gr_full.reciprocal() == rhs);
        let rhs_a = pw.sub(&ZPolynomial::constant(one(), 0)).div_exact(&z_plus_sigma())?;
        push("hemisphere absolute", format!("d={dd}"), ga == rhs_a);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{lookup_str, GroupName};

    #[test]
    fn hemisphere_three_middle() {
        let h = GroupDescriptor::hemisphere(3).unwrap();
        let g = gce_single_rank(&h, BoundaryCondition::Absolute, 1).unwrap();
        let s = g.series(5).unwrap();
        for (l, x) in s.iter().enumerate() {
            assert_eq!(*x, int(((l + 1) * (l + 3)) as i64));
        }
        assert_eq!(degeneracy(&h, BoundaryCondition::Absolute, 1, 1).unwrap(), int(8));
        assert_eq!(sphere_degeneracy(3, 1, 0), int(6));
    }

    #[test]
    fn rank_errors() {
        let h = GroupDescriptor::hemisphere(3).unwrap();
        assert!(matches!(gce_single_rank(&h, BoundaryCondition::Absolute, 3), Err(Error::RankError { .. })));
    }

    #[test]
    fn zero_form_a4() {
        let g = lookup_str("3-3-3").unwrap();
        let hd = zeroform_series(&g, BoundaryCondition::Relative).unwrap();
        assert_eq!(hd.sigma_power(), 10);
        let hn = zeroform_series(&g, BoundaryCondition::Absolute).unwrap();
        assert_eq!(hn, RationalFunction::inverse_product(&[3, 4, 5]));
    }

    #[test]
    fn identities_hemisphere_and_a4() {
        for desc in [GroupDescriptor::hemisphere(3).unwrap(), catalog(GroupName::S333)] {
            for c in identity_suite(&desc, 20).unwrap() {
                assert!(c.passed, "{} {} {}", c.group, c.name, c.detail);
            }
        }
    }

    #[test]
    fn cylinder_example() {
        let g = catalog(GroupName::S334);
        let r = cylinder_symmetry_check(&g, 0).unwrap();
        assert!(r.reflection);
        assert_eq!(r.doubled, Some(true));
        assert!(r.self_symmetry.is_none());
    }

    fn catalog(n: GroupName) -> GroupDescriptor {
        crate::coxeter::catalog_lookup(&n).unwrap()
    }
}
