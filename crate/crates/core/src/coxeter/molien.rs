use std::collections::BTreeMap;

use num_traits::Zero;

use super::matrix::{CharPoly, GroupElement};
use crate::error::{Error, Result};
use crate::exactnum::{QuadraticNumber, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    Trivial,
    Determinant,
}

/// Elements grouped by characteristic polynomial, with determinant and multiplicity.
pub fn char_poly_classes(elements: &[GroupElement]) -> Vec<(CharPoly, i8, u64)> {
    let mut m: BTreeMap<(CharPoly, i8), u64> = BTreeMap::new();
    for g in elements {
        *m.entry((CharPoly::of(&g.matrix), g.det)).or_insert(0) += 1;
    }
    m.into_iter().map(|((cp, det), n)| (cp, det, n)).collect()
}

/// Series of `1/det(1 − σA)` through σ^L in ℚ(√5).
pub fn inverse_det_series(cp: &CharPoly, order: usize) -> Result<Vec<QuadraticNumber>> {
    // det(1 − σA) = 1 − c1σ + c2σ² − c3σ³ + c4σ⁴
    let c: Vec<QuadraticNumber> = (1..=4).map(|k| cp.coeff(k)).collect();
    let mut s: Vec<QuadraticNumber> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut v = if n == 0 { cp.coeff(0) } else { QuadraticNumber::zero(5)? };
        for k in 1..=4.min(n) {
            let t = c[k - 1].try_mul(&s[n - k])?;
            v = if k % 2 == 1 { v.try_add(&t)? } else { v.try_sub(&t)? };
        }
        s.push(v);
    }
    Ok(s)
}

/// Rational part of a class-summed quantity; a surviving surd is a bug.
pub fn rational_part(q: &QuadraticNumber) -> Result<Rational> {
    if !q.b.is_zero() {
        return Err(Error::SanityFailure(format!("group average left a surd: {q}")));
    }
    Ok(q.a.clone())
}

/// `(1/|Γ|) Σ_A χ(A) / det(1 − σA)` through σ^L.
pub fn molien_series(elements: &[GroupElement], chi: Character, order: usize) -> Result<Vec<Rational>> {
    let mut acc = vec![QuadraticNumber::zero(5)?; order + 1];
    for (cp, det, n) in char_poly_classes(elements) {
        let w = Rational::from_integer(n.into())
            * Rational::from_integer(match chi {
                Character::Trivial => 1.into(),
                Character::Determinant => (det as i64).into(),
            });
        for (a, s) in acc.iter_mut().zip(inverse_det_series(&cp, order)?) {
            *a = a.try_add(&s.scale(&w))?;
        }
    }
    let size = Rational::from_integer(elements.len().into());
    acc.iter().map(|q| rational_part(q).map(|r| r / &size)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::catalog::{catalog_lookup, GroupName};
    use crate::coxeter::matrix::{enumerate_group, trivial_group_elements};
    use crate::ratfun::RationalFunction;

    #[test]
    fn trivial_group() {
        let s = molien_series(&trivial_group_elements(), Character::Trivial, 6).unwrap();
        let expect = RationalFunction::inverse_product(&[1, 1, 1, 1]).series(6).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn a4_degrees() {
        let d = catalog_lookup(&GroupName::S333).unwrap();
        let els = enumerate_group(&d).unwrap();
        let s = molien_series(&els, Character::Trivial, 40).unwrap();
        assert_eq!(s, RationalFunction::inverse_product(&d.full_degrees).series(40).unwrap());
    }

    #[test]
    fn b4_relative_invariants() {
        // determinant character: σ^{Σ m_full}/Π(1 − σ^{d_i}) with Σ m over full degrees
        let d = catalog_lookup(&GroupName::S334).unwrap();
        let els = enumerate_group(&d).unwrap();
        let s = molien_series(&els, Character::Determinant, 40).unwrap();
        let lead: u32 = d.full_degrees.iter().map(|x| x - 1).sum();
        let f = RationalFunction::inverse_product(&d.full_degrees).mul_sigma_power(lead as i64);
        assert_eq!(lead, 16);
        assert_eq!(s, f.series(40).unwrap());
    }
}
