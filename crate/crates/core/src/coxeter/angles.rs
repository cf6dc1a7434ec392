use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::{transpose, CharPoly, GroupElement, Mat4, Z5};
use crate::error::{Error, Result};
use crate::exactnum::{QuadraticNumber, Rational};
use crate::ratfun::{cyclotomic, Poly};

/// Rotation angles `α = 2πa/m`, `β = 2πb/m` of a 4×4 rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementAngles {
    pub m: u32,
    pub a: u32,
    pub b: u32,
    /// Sign of the Pfaffian of the skew part; 0 when it vanishes.
    pub oriented_sign: i8,
    pub has_unit_eigenvalue: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngleClass {
    pub order: u32,
    pub a: u32,
    pub b: u32,
    pub oriented_sign: i8,
    pub class_size: u64,
    pub has_unit_eigenvalue: bool,
}

impl AngleClass {
    /// `a/m`, the angle as a fraction of a full turn.
    pub fn alpha_turns(&self) -> Rational {
        Rational::new(self.a.into(), self.order.into())
    }

    pub fn beta_turns(&self) -> Rational {
        Rational::new(self.b.into(), self.order.into())
    }
}

/// Memo of resolved `(m, trace, c2)` keys.
#[derive(Default)]
pub struct AngleResolver {
    memo: HashMap<(u32, Z5, Z5), (u32, u32)>,
}

/// Reduce `p` modulo Φ_m.
fn reduce(p: &Poly, phi: &Poly) -> Poly {
    p.div_rem(phi).expect("cyclotomic is nonzero").1
}

fn zeta_power(k: u32, m: u32) -> Poly {
    Poly::monomial(Rational::from_integer(1.into()), (k % m) as usize)
}

/// `ζ^k + ζ^{−k}` in ℚ[x]/Φ_m.
fn two_cos(k: u32, m: u32) -> Poly {
    &zeta_power(k, m) + &zeta_power(m - k % m, m)
}

/// Embed `a + b√5` into ℚ(ζ_m) via the quadratic Gauss sum, if possible.
fn embed(q: &QuadraticNumber, m: u32) -> Option<Poly> {
    let a = Poly::constant(q.a.clone());
    if q.b.is_zero() {
        return Some(a);
    }
    if !m.is_multiple_of(5) {
        return None;
    }
    let f = m / 5;
    let s5 = &(&(&zeta_power(f, m) - &zeta_power(2 * f, m)) - &zeta_power(3 * f, m)) + &zeta_power(4 * f, m);
    Some(&a + &s5.scale(&q.b))
}

/// Exact test that `2cosα + 2cosβ = c1` and `2 + 4cosα cosβ = c2`.
fn exact_match(a: u32, b: u32, m: u32, c1: &QuadraticNumber, c2: &QuadraticNumber) -> bool {
    let phi = cyclotomic(m as usize);
    let (Some(e1), Some(e2)) = (embed(c1, m), embed(c2, m)) else {
        return false;
    };
    let xa = two_cos(a, m);
    let xb = two_cos(b, m);
    let lhs1 = &xa + &xb;
    let lhs2 = &Poly::constant(Rational::from_integer(2.into())) + &(&xa * &xb);
    reduce(&(&lhs1 - &e1), &phi).is_zero() && reduce(&(&lhs2 - &e2), &phi).is_zero()
}

impl AngleResolver {
    pub fn new() -> Self {
        Self::default()
    }

    fn resolve(&mut self, m: u32, cp: &CharPoly) -> Result<(u32, u32)> {
        let key = (m, cp.scaled[0], cp.scaled[1]);
        if let Some(v) = self.memo.get(&key) {
            return Ok(*v);
        }
        let c1 = cp.coeff(1);
        let c2 = cp.coeff(2);
        let f1 = cp.scaled[0].to_f64() / 8.0;
        let f2 = cp.scaled[1].to_f64() / 64.0;
        let tau = std::f64::consts::TAU;
        let mut found = None;
        for a in 0..=m / 2 {
            for b in a..=m / 2 {
                // the rotation order must be exactly m
                if (m / m.gcd(&a)).lcm(&(m / m.gcd(&b))) != m {
                    continue;
                }
                let xa = 2.0 * (tau * a as f64 / m as f64).cos();
                let xb = 2.0 * (tau * b as f64 / m as f64).cos();
                if (xa + xb - f1).abs() > 1e-6 || (2.0 + xa * xb - f2).abs() > 1e-6 {
                    continue;
                }
                if exact_match(a, b, m, &c1, &c2) {
                    if found.is_some() {
                        return Err(Error::AngleResolutionFailed(m));
                    }
                    found = Some((a, b));
                }
            }
        }
        let v = found.ok_or(Error::AngleResolutionFailed(m))?;
        self.memo.insert(key, v);
        Ok(v)
    }

    pub fn element_angles(&mut self, g: &GroupElement) -> Result<ElementAngles> {
        if g.det != 1 {
            return Err(Error::DomainError("angles need a rotation".into()));
        }
        let cp = CharPoly::of(&g.matrix);
        let (a, b) = self.resolve(g.order, &cp)?;
        let unit = cp.has_unit_eigenvalue();
        if unit != (a == 0) {
            return Err(Error::AngleResolutionFailed(g.order));
        }
        Ok(ElementAngles { m: g.order, a, b, oriented_sign: pfaffian_sign(&g.matrix), has_unit_eigenvalue: unit })
    }
}

pub fn element_angles(g: &GroupElement) -> Result<ElementAngles> {
    AngleResolver::new().element_angles(g)
}

/// Sign of Pf((g − gᵀ)/2).
pub fn pfaffian_sign(g: &Mat4) -> i8 {
    let t = transpose(g);
    let s = |i: usize, j: usize| g[i][j].scaled() - t[i][j].scaled();
    let pf = s(0, 1) * s(2, 3) - s(0, 2) * s(1, 3) + s(0, 3) * s(1, 2);
    pf.signum()
}

/// Rotation classes keyed by angle pair and Pfaffian sign.
pub fn class_table(elements: &[GroupElement]) -> Result<Vec<AngleClass>> {
    let mut resolver = AngleResolver::new();
    let mut counts: BTreeMap<(Rational, Rational, i8), (ElementAngles, u64)> = BTreeMap::new();
    for g in elements.iter().filter(|g| g.det == 1) {
        let ang = resolver.element_angles(g)?;
        let key = (
            Rational::new(ang.a.into(), ang.m.into()),
            Rational::new(ang.b.into(), ang.m.into()),
            -ang.oriented_sign,
        );
        counts.entry(key).or_insert((ang, 0)).1 += 1;
    }
    Ok(counts
        .into_values()
        .map(|(ang, n)| AngleClass {
            order: ang.m,
            a: ang.a,
            b: ang.b,
            oriented_sign: ang.oriented_sign,
            class_size: n,
            has_unit_eigenvalue: ang.has_unit_eigenvalue,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::catalog::{catalog_lookup, GroupName};
    use crate::coxeter::matrix::{enumerate_group, identity, Entry};

    #[test]
    fn identity_angles() {
        let g = GroupElement { matrix: identity(), det: 1, order: 1 };
        let a = element_angles(&g).unwrap();
        assert_eq!((a.m, a.a, a.b, a.has_unit_eigenvalue), (1, 0, 0, true));
    }

    #[test]
    fn quarter_turns() {
        let z = Entry::ZERO;
        let p = Entry { a: 8, b: 0 };
        let n = Entry { a: -8, b: 0 };
        let m = [[z, n, z, z], [p, z, z, z], [z, z, z, n], [z, z, p, z]];
        let g = GroupElement::from_matrix(m).unwrap();
        let a = element_angles(&g).unwrap();
        assert_eq!((a.m, a.a, a.b, a.has_unit_eigenvalue), (4, 1, 1, false));
        assert_eq!(a.oriented_sign, 1);
    }

    #[test]
    fn b4_traces_and_sizes() {
        let d = catalog_lookup(&GroupName::S334).unwrap();
        let els = enumerate_group(&d).unwrap();
        let mut r = AngleResolver::new();
        for g in els.iter().filter(|g| g.det == 1) {
            let ang = r.element_angles(g).unwrap();
            let t = CharPoly::of(&g.matrix).trace();
            let tau = std::f64::consts::TAU;
            let x = 2.0 * ((tau * ang.a as f64 / ang.m as f64).cos() + (tau * ang.b as f64 / ang.m as f64).cos());
            assert!((x - t.to_bigreal(30).to_f64()).abs() < 1e-12);
        }
        let table = class_table(&els).unwrap();
        assert_eq!(table.iter().map(|c| c.class_size).sum::<u64>(), 192);
        assert_eq!(table[0].class_size, 1);
        assert_eq!((table[0].a, table[0].b), (0, 0));
    }
}
