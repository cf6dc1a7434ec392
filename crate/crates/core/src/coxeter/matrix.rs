use std::collections::{HashMap, VecDeque};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{ToPrimitive, Zero};

use super::catalog::{GroupDescriptor, GroupName};
use crate::error::{Error, Result};
use crate::exactnum::{rat, QuadraticNumber, Rational};

/// Integer of ℤ[√5]: `a + b√5`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z5 {
    pub a: i128,
    pub b: i128,
}

impl Z5 {
    pub const ZERO: Z5 = Z5 { a: 0, b: 0 };

    pub fn new(a: i128, b: i128) -> Self {
        Z5 { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign of `a + b√5`.
    pub fn signum(&self) -> i8 {
        let sa = self.a.signum() as i8;
        let sb = self.b.signum() as i8;
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let lhs = self.a * self.a;
        let rhs = 5 * self.b * self.b;
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// `(a + b√5) / den` as an exact quadratic number.
    pub fn over(&self, den: i128) -> QuadraticNumber {
        let r = |x: i128| Rational::new(x.into(), den.into());
        QuadraticNumber { a: r(self.a), b: r(self.b), root: 5 }
    }

    pub fn to_f64(&self) -> f64 {
        self.a as f64 + self.b as f64 * 5f64.sqrt()
    }
}

impl Add for Z5 {
    type Output = Z5;
    fn add(self, o: Z5) -> Z5 {
        Z5::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Z5 {
    type Output = Z5;
    fn sub(self, o: Z5) -> Z5 {
        Z5::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Z5 {
    type Output = Z5;
    fn neg(self) -> Z5 {
        Z5::new(-self.a, -self.b)
    }
}

impl Mul for Z5 {
    type Output = Z5;
    fn mul(self, o: Z5) -> Z5 {
        Z5::new(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

/// Matrix entry `(a + b√5) / 8`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub a: i64,
    pub b: i64,
}

pub const ENTRY_DEN: i64 = 8;

impl Entry {
    pub const ZERO: Entry = Entry { a: 0, b: 0 };
    pub const ONE: Entry = Entry { a: 8, b: 0 };

    pub fn scaled(&self) -> Z5 {
        Z5::new(self.a as i128, self.b as i128)
    }

    pub fn to_quadratic(&self) -> QuadraticNumber {
        QuadraticNumber { a: rat(self.a, ENTRY_DEN), b: rat(self.b, ENTRY_DEN), root: 5 }
    }

    pub fn from_quadratic(q: &QuadraticNumber) -> Result<Entry> {
        let conv = |x: &Rational| -> Result<i64> {
            let y = x * Rational::from_integer(ENTRY_DEN.into());
            if !y.is_integer() {
                return Err(Error::SanityFailure(format!("entry {x} outside (1/8)Z[sqrt5]")));
            }
            y.to_integer().to_i64().ok_or_else(|| Error::SanityFailure("entry too large".into()))
        };
        if q.root != 5 && !q.b.is_zero() {
            return Err(Error::RootMismatch(q.root, 5));
        }
        Ok(Entry { a: conv(&q.a)?, b: conv(&q.b)? })
    }
}

pub type Mat4 = [[Entry; 4]; 4];

pub fn identity() -> Mat4 {
    let mut m = [[Entry::ZERO; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Entry::ONE;
    }
    m
}

pub fn mat_mul(x: &Mat4, y: &Mat4) -> Result<Mat4> {
    let mut out = [[Entry::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let (mut a, mut b) = (0i64, 0i64);
            for k in 0..4 {
                let (p, q) = (x[i][k], y[k][j]);
                a += p.a * q.a + 5 * p.b * q.b;
                b += p.a * q.b + p.b * q.a;
            }
            if a % ENTRY_DEN != 0 || b % ENTRY_DEN != 0 {
                return Err(Error::SanityFailure("product left (1/8)Z[sqrt5]".into()));
            }
            out[i][j] = Entry { a: a / ENTRY_DEN, b: b / ENTRY_DEN };
        }
    }
    Ok(out)
}

pub fn transpose(x: &Mat4) -> Mat4 {
    let mut t = *x;
    for (i, row) in x.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            t[j][i] = *e;
        }
    }
    t
}

pub fn is_orthogonal(x: &Mat4) -> bool {
    matches!(mat_mul(&transpose(x), x), Ok(p) if p == identity())
}

fn scaled(x: &Mat4) -> [[Z5; 4]; 4] {
    let mut s = [[Z5::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            s[i][j] = x[i][j].scaled();
        }
    }
    s
}

fn sub_det(m: &[[Z5; 4]; 4], rows: &[usize], cols: &[usize]) -> Z5 {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]];
    }
    let mut acc = Z5::ZERO;
    for c in 0..cols.len() {
        let rest: Vec<usize> = cols.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, &v)| v).collect();
        let term = m[rows[0]][cols[c]] * sub_det(m, &rows[1..], &rest);
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Characteristic polynomial `x⁴ − c1x³ + c2x² − c3x + c4` of the matrix,
/// stored as `c_k · 8^k` in ℤ[√5].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    pub scaled: [Z5; 4],
}

impl CharPoly {
    pub fn of(x: &Mat4) -> CharPoly {
        let m = scaled(x);
        let mut c = [Z5::ZERO; 4];
        for mask in 1u32..16 {
            let idx: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
            let k = idx.len();
            c[k - 1] = c[k - 1] + sub_det(&m, &idx, &idx);
        }
        CharPoly { scaled: c }
    }

    /// Exact coefficient `c_k`, k = 0…4.
    pub fn coeff(&self, k: usize) -> QuadraticNumber {
        if k == 0 {
            return Z5::new(1, 0).over(1);
        }
        self.scaled[k - 1].over(8i128.pow(k as u32))
    }

    pub fn trace(&self) -> QuadraticNumber {
        self.coeff(1)
    }

    pub fn det(&self) -> QuadraticNumber {
        self.coeff(4)
    }

    /// `det(x − I) = 0`, i.e. 1 is an eigenvalue.
    pub fn has_unit_eigenvalue(&self) -> bool {
        // 8⁴·p(1) = 8⁴ − 8³c1' + 8²c2' − 8c3' + c4' with c_k' = 8^k c_k
        let s = self.scaled;
        let v = Z5::new(4096, 0) - Z5::new(512, 0) * s[0] + Z5::new(64, 0) * s[1] - Z5::new(8, 0) * s[2] + s[3];
        v.is_zero()
    }
}

/// Orthogonal group element with cached determinant and order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub matrix: Mat4,
    pub det: i8,
    pub order: u32,
}

impl GroupElement {
    pub fn from_matrix(matrix: Mat4) -> Result<GroupElement> {
        let det = CharPoly::of(&matrix).det();
        let det = if det == Z5::new(1, 0).over(1) {
            1
        } else if det == Z5::new(-1, 0).over(1) {
            -1
        } else {
            return Err(Error::SanityFailure(format!("determinant {det} is not ±1")));
        };
        let order = element_order(&matrix)?;
        Ok(GroupElement { matrix, det, order })
    }

    pub fn quadratic_entries(&self) -> Vec<Vec<QuadraticNumber>> {
        self.matrix.iter().map(|r| r.iter().map(Entry::to_quadratic).collect()).collect()
    }
}

pub fn element_order(x: &Mat4) -> Result<u32> {
    let id = identity();
    let mut p = *x;
    for k in 1..=120u32 {
        if p == id {
            return Ok(k);
        }
        p = mat_mul(&p, x)?;
    }
    Err(Error::SanityFailure("element order above 120".into()))
}

type Root = [QuadraticNumber; 4];

fn q5(a: i64, b: i64, den: i64) -> QuadraticNumber {
    QuadraticNumber { a: rat(a, den), b: rat(b, den), root: 5 }
}

/// Reflection `I − 2 r rᵀ / (r·r)`.
pub fn reflection(r: &Root) -> Result<Mat4> {
    let mut nn = q5(0, 0, 1);
    for x in r {
        nn = nn.try_add(&x.try_mul(x)?)?;
    }
    let two_over = q5(2, 0, 1).try_div(&nn)?;
    let mut m = identity();
    for i in 0..4 {
        for j in 0..4 {
            let t = r[i].try_mul(&r[j])?.try_mul(&two_over)?;
            let v = m[i][j].to_quadratic().try_sub(&t)?;
            m[i][j] = Entry::from_quadratic(&v)?;
        }
    }
    Ok(m)
}

fn rational_root(v: [i64; 4], den: i64) -> Root {
    v.map(|x| q5(x, 0, den))
}

/// Simple roots for the four polytope groups; the golden-ratio groups are
/// realized inside the 600-cell coordinates.
pub fn simple_roots(name: &GroupName) -> Result<Vec<Root>> {
    // φ/2 = (1+√5)/4, 1/(2φ) = (√5−1)/4
    let hp = || q5(1, 1, 4);
    let hi = || q5(-1, 1, 4);
    let h = || q5(1, 0, 2);
    let z = || q5(0, 0, 1);
    let n = |x: QuadraticNumber| x.neg();
    let r1 = [n(hp()), z(), n(hi()), h()];
    let r2 = [hp(), hi(), n(h()), z()];
    let r3 = [z(), n(hi()), hp(), h()];
    Ok(match name {
        GroupName::S333 => vec![r1, r2, r3, [n(hi()), hp(), z(), n(h())]],
        GroupName::S335 => vec![r1, r2, r3, [n(hi()), z(), n(h()), n(hp())]],
        GroupName::S334 => vec![
            rational_root([1, -1, 0, 0], 1),
            rational_root([0, 1, -1, 0], 1),
            rational_root([0, 0, 1, -1], 1),
            rational_root([0, 0, 0, 1], 1),
        ],
        GroupName::S343 => vec![
            rational_root([0, 1, -1, 0], 1),
            rational_root([0, 0, 1, -1], 1),
            rational_root([0, 0, 0, 1], 1),
            rational_root([1, -1, -1, -1], 2),
        ],
        other => return Err(Error::UnknownGroup(format!("{} has no matrix realization", other.label()))),
    })
}

/// Breadth-first closure of the simple reflections.
pub fn enumerate_group(desc: &GroupDescriptor) -> Result<Vec<GroupElement>> {
    let gens: Vec<Mat4> = simple_roots(&desc.name)?.iter().map(reflection).collect::<Result<_>>()?;
    closure(&gens, desc.order as usize)
}

pub fn closure(gens: &[Mat4], expected: usize) -> Result<Vec<GroupElement>> {
    let limit = 2 * expected.max(1);
    let id = identity();
    let mut seen: HashMap<Mat4, i8> = HashMap::new();
    let mut order: Vec<Mat4> = vec![id];
    seen.insert(id, 1);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        let det = seen[&m];
        for g in gens {
            let p = mat_mul(&m, g)?;
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(p) {
                e.insert(-det);
                order.push(p);
                if order.len() > limit {
                    return Err(Error::EnumerationDiverged(limit));
                }
                queue.push_back(p);
            }
        }
    }
    order
        .into_iter()
        .map(|m| Ok(GroupElement { matrix: m, det: seen[&m], order: element_order(&m)? }))
        .collect()
}

/// The single-reflection group of the 3-hemisphere.
pub fn hemisphere3_elements() -> Vec<GroupElement> {
    let mut r = identity();
    r[3][3] = Entry { a: -8, b: 0 };
    vec![
        GroupElement { matrix: identity(), det: 1, order: 1 },
        GroupElement { matrix: r, det: -1, order: 2 },
    ]
}

pub fn trivial_group_elements() -> Vec<GroupElement> {
    vec![GroupElement { matrix: identity(), det: 1, order: 1 }]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::catalog::catalog_lookup;

    #[test]
    fn small_groups_close() {
        for name in [GroupName::S333, GroupName::S334] {
            let d = catalog_lookup(&name).unwrap();
            let els = enumerate_group(&d).unwrap();
            assert_eq!(els.len() as u64, d.order);
            assert_eq!(els.iter().filter(|e| e.det == 1).count() as u64, d.order / 2);
            assert!(els.iter().all(|e| is_orthogonal(&e.matrix)));
        }
    }

    #[test]
    fn inverses_present() {
        let d = catalog_lookup(&GroupName::S334).unwrap();
        let els = enumerate_group(&d).unwrap();
        let set: std::collections::HashSet<Mat4> = els.iter().map(|e| e.matrix).collect();
        assert!(set.contains(&identity()));
        assert!(els.iter().all(|e| set.contains(&transpose(&e.matrix))));
    }

    #[test]
    fn det_tracking_matches_char_poly() {
        let d = catalog_lookup(&GroupName::S333).unwrap();
        for e in enumerate_group(&d).unwrap() {
            assert_eq!(GroupElement::from_matrix(e.matrix).unwrap().det, e.det);
        }
    }

    #[test]
    fn divergence_guard() {
        let gens: Vec<Mat4> = simple_roots(&GroupName::S334).unwrap().iter().map(|r| reflection(r).unwrap()).collect();
        assert_eq!(closure(&gens, 100), Err(Error::EnumerationDiverged(200)));
    }
}
