use std::collections::HashSet;

use tesspec::coxeter::angles::AngleResolver;
use tesspec::coxeter::matrix::{is_orthogonal, mat_mul, transpose, Mat4};
use tesspec::coxeter::{catalog_lookup, class_table, enumerate_group, molien_series, Character, GroupName};
use tesspec::ratfun::RationalFunction;

#[test]
fn orders_and_rotation_index() {
    for name in GroupName::polytopes() {
        let d = catalog_lookup(&name).unwrap();
        let els = enumerate_group(&d).unwrap();
        assert_eq!(els.len() as u64, d.order, "{}", name.label());
        assert_eq!(d.full_degrees.iter().map(|&x| x as u64).product::<u64>(), d.order);
        let rot = els.iter().filter(|g| g.det == 1).count() as u64;
        assert_eq!(2 * rot, d.order);
        let set: HashSet<Mat4> = els.iter().map(|g| g.matrix).collect();
        assert_eq!(set.len(), els.len());
        for g in els.iter().step_by(97) {
            assert!(is_orthogonal(&g.matrix));
            assert!(set.contains(&transpose(&g.matrix)));
        }
    }
}

#[test]
fn molien_matches_degrees() {
    for name in GroupName::polytopes() {
        let d = catalog_lookup(&name).unwrap();
        let els = enumerate_group(&d).unwrap();
        let s = molien_series(&els, Character::Trivial, 40).unwrap();
        let oracle = RationalFunction::inverse_product(&d.full_degrees).series(40).unwrap();
        assert_eq!(s, oracle, "{}", name.label());
    }
}

#[test]
fn class_tables_sum_to_rotation_order() {
    for name in GroupName::polytopes() {
        let d = catalog_lookup(&name).unwrap();
        let els = enumerate_group(&d).unwrap();
        let t = class_table(&els).unwrap();
        assert_eq!(t.iter().map(|c| c.class_size).sum::<u64>(), d.order / 2);
        assert!(t.iter().all(|c| c.has_unit_eigenvalue == (c.a == 0)));
        let id: Vec<_> = t.iter().filter(|c| c.order == 1).collect();
        assert_eq!(id.len(), 1);
        assert_eq!(id[0].class_size, 1);
    }
}

#[test]
fn angles_are_conjugation_invariant() {
    let d = catalog_lookup(&GroupName::S335).unwrap();
    let els = enumerate_group(&d).unwrap();
    let mut r = AngleResolver::new();
    for (i, g) in els.iter().enumerate().filter(|(_, g)| g.det == 1).step_by(37).take(60) {
        let h = &els[(i * 7919) % els.len()];
        let c = mat_mul(&mat_mul(&h.matrix, &g.matrix).unwrap(), &transpose(&h.matrix)).unwrap();
        let cg = tesspec::coxeter::GroupElement::from_matrix(c).unwrap();
        let a = r.element_angles(g).unwrap();
        let b = r.element_angles(&cg).unwrap();
        assert_eq!((a.m, a.a, a.b), (b.m, b.a, b.b));
    }
}
