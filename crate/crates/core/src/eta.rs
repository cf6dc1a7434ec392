//! Signature and Dirac eta invariants of doubled fundamental domains, from
//! cotangent and cosecant sums over rotation angle classes.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coxeter::{class_table as enumerate_classes, load_or_enumerate, AngleClass, GroupDescriptor, GroupName};
use crate::error::{Error, Result};
use crate::exactnum::{
    pairwise_sum, rat, recognize_quadratic_confirmed, trig_at_rational_angle, BigReal, QuadraticNumber, Rational,
    Recognition, TrigFn, DEFAULT_DENOMINATOR_BOUND,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EtaKind {
    Signature,
    Dirac,
}

impl std::str::FromStr for EtaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "signature" => Ok(EtaKind::Signature),
            "dirac" => Ok(EtaKind::Dirac),
            _ => Err(Error::Parse(format!("unknown eta kind {s:?}"))),
        }
    }
}

impl std::fmt::Display for EtaKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EtaKind::Signature => "signature",
            EtaKind::Dirac => "dirac",
        })
    }
}

/// Decimal rendering with its precision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decimal {
    pub digits: u32,
    pub value: String,
}

impl Decimal {
    fn of(x: &BigReal) -> Self {
        Decimal { digits: x.digits(), value: x.to_decimal_string(x.digits()) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassContribution {
    pub class: AngleClass,
    pub contribution: Decimal,
}

#[derive(Clone, Debug, Serialize)]
pub struct EtaResult {
    pub group: String,
    pub kind: EtaKind,
    pub numeric: Decimal,
    pub status: &'static str,
    pub recognized: Option<QuadraticNumber>,
    /// The same sum with each term weighted by the Pfaffian orientation sign.
    pub oriented_numeric: Decimal,
    pub class_breakdown: Vec<ClassContribution>,
    #[serde(skip)]
    pub value: BigReal,
}

impl EtaResult {
    pub fn recognition(&self) -> Recognition {
        match &self.recognized {
            Some(q) => Recognition::Match(q.clone()),
            None => Recognition::NoMatch,
        }
    }
}

fn trig(kind: EtaKind) -> TrigFn {
    match kind {
        EtaKind::Signature => TrigFn::Cot,
        EtaKind::Dirac => TrigFn::Cosec,
    }
}

/// `−1/|G⁺|` for the signature sum, `−1/(2|Γ|)` for the Dirac sum.
fn normalization(kind: EtaKind, rotation_order: u64) -> Rational {
    let n = BigInt::from(rotation_order);
    match kind {
        EtaKind::Signature => Rational::new((-1).into(), n),
        EtaKind::Dirac => Rational::new((-1).into(), n * 4),
    }
}

/// Per-class contributions (zero for classes with a unit eigenvalue).
fn contributions(classes: &[AngleClass], kind: EtaKind, digits: u32) -> Result<Vec<BigReal>> {
    let f = trig(kind);
    let work = digits + 10;
    classes
        .par_iter()
        .map(|c| {
            if c.has_unit_eigenvalue {
                return Ok(BigReal::zero(work));
            }
            let x = trig_at_rational_angle(f, c.a as i64, c.order as i64, work)?;
            let y = trig_at_rational_angle(f, c.b as i64, c.order as i64, work)?;
            Ok((&x * &y).mul_rational(&Rational::from_integer(c.class_size.into())))
        })
        .collect()
}

/// Normalized eta sum and its oriented counterpart.
pub fn eta_sums(classes: &[AngleClass], rotation_order: u64, kind: EtaKind, digits: u32) -> Result<(BigReal, BigReal, Vec<BigReal>)> {
    let norm = normalization(kind, rotation_order);
    let parts: Vec<BigReal> = contributions(classes, kind, digits)?.iter().map(|x| x.mul_rational(&norm)).collect();
    let oriented: Vec<BigReal> = parts
        .iter()
        .zip(classes)
        .map(|(x, c)| if c.oriented_sign < 0 { -x.clone() } else { x.clone() })
        .collect();
    let total = pairwise_sum(&parts, digits + 10).with_digits(digits);
    let signed = pairwise_sum(&oriented, digits + 10).with_digits(digits);
    Ok((total, signed, parts))
}

/// Rotation angle classes of a catalog polytope group.
pub fn class_table(desc: &GroupDescriptor, cache: Option<&Path>) -> Result<Vec<AngleClass>> {
    if !desc.name.is_polytope() {
        return Err(Error::UnknownGroup(format!("{} has no enumerated rotation classes", desc.label())));
    }
    enumerate_classes(&load_or_enumerate(desc, cache)?)
}

/// Roots tried during recognition, in order.
pub fn candidate_roots(kind: EtaKind) -> [u32; 2] {
    match kind {
        EtaKind::Signature => [5, 2],
        EtaKind::Dirac => [5, 2],
    }
}

/// Evaluate and recognize from precomputed classes.
pub fn eta_from_classes(
    label: &str,
    classes: &[AngleClass],
    rotation_order: u64,
    kind: EtaKind,
    digits: u32,
) -> Result<EtaResult> {
    let (value, oriented, parts) = eta_sums(classes, rotation_order, kind, digits)?;
    let bound = BigInt::from(DEFAULT_DENOMINATOR_BOUND);
    let mut recognized = None;
    for root in candidate_roots(kind) {
        let eval = |p: u32| eta_sums(classes, rotation_order, kind, p).map(|t| t.0);
        if let Recognition::Match(q) = recognize_quadratic_confirmed(eval, digits, root, &bound)? {
            recognized = Some(q);
            break;
        }
    }
    let class_breakdown = classes
        .iter()
        .zip(&parts)
        .map(|(c, x)| ClassContribution { class: c.clone(), contribution: Decimal::of(&x.with_digits(digits)) })
        .collect();
    Ok(EtaResult {
        group: label.to_string(),
        kind,
        numeric: Decimal::of(&value),
        status: if recognized.is_some() { "match" } else { "no_match" },
        recognized,
        oriented_numeric: Decimal::of(&oriented),
        class_breakdown,
        value,
    })
}

pub fn eta_invariant(desc: &GroupDescriptor, kind: EtaKind, digits: u32, cache: Option<&Path>) -> Result<EtaResult> {
    let classes = class_table(desc, cache)?;
    eta_from_classes(&desc.label(), &classes, desc.rotation_order(), kind, digits)
}

pub fn eta_signature(desc: &GroupDescriptor, digits: u32, cache: Option<&Path>) -> Result<EtaResult> {
    eta_invariant(desc, EtaKind::Signature, digits, cache)
}

pub fn eta_dirac(desc: &GroupDescriptor, digits: u32, cache: Option<&Path>) -> Result<EtaResult> {
    eta_invariant(desc, EtaKind::Dirac, digits, cache)
}

/// Angle classes of the cyclic rotation group of order q about a 2-flat.
pub fn lune_classes(q: u32) -> Vec<AngleClass> {
    (0..q)
        .map(|k| AngleClass {
            order: q,
            a: k,
            b: 0,
            oriented_sign: 0,
            class_size: 1,
            // angle pair (2πk/q, 0): the second plane is fixed
            has_unit_eigenvalue: true,
        })
        .collect()
}

/// Eta of a lune: every element fixes the 2-flat, so the sum is empty.
pub fn lune_eta_check(q: u32) -> Result<Rational> {
    if q < 2 {
        return Err(Error::DomainError("lune order must be at least 2".into()));
    }
    let classes = lune_classes(q);
    if classes.iter().any(|c| !c.has_unit_eigenvalue) {
        return Err(Error::SanityFailure("lune element without a fixed direction".into()));
    }
    let (v, _, _) = eta_sums(&classes, q as u64, EtaKind::Signature, 40)?;
    if !v.is_zero() {
        return Err(Error::SanityFailure("empty eta sum is nonzero".into()));
    }
    Ok(Rational::zero())
}

/// Reference values of the two tables, as exact quadratic numbers.
pub fn reference_value(name: &GroupName, kind: EtaKind) -> Option<QuadraticNumber> {
    let q = |a: Rational, b: Rational, k: u32| QuadraticNumber::new(a, b, k).ok();
    match (kind, name) {
        (EtaKind::Signature, GroupName::S333) => q(rat(0, 1), rat(-2, 25), 5),
        (EtaKind::Signature, GroupName::S334) => q(rat(-5, 16), rat(0, 1), 5),
        (EtaKind::Signature, GroupName::S343) => q(rat(-29, 48), rat(0, 1), 5),
        (EtaKind::Signature, GroupName::S335) => q(rat(-2341, 5400), rat(-118, 375), 5),
        (EtaKind::Dirac, GroupName::S333) => q(rat(0, 1), rat(-1, 25), 5),
        (EtaKind::Dirac, GroupName::S334) => q(rat(-89, 768), rat(-9, 64), 2),
        (EtaKind::Dirac, GroupName::S343) => q(rat(-1867, 1728), rat(-9, 16), 2),
        (EtaKind::Dirac, GroupName::S335) => q(rat(-37291, 7200), rat(277, 375), 5),
        _ => None,
    }
}
