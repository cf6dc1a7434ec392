use tesspec::counting::{weyl_constant, weyl_leading, weyl_polya_report, CountingContext};
use tesspec::coxeter::{catalog_lookup, GroupDescriptor, GroupName};
use tesspec::exactnum::{int, rat, Rational};
use tesspec::poincare::BoundaryCondition;

#[test]
fn counting_function_examples() {
    let h = GroupDescriptor::hemisphere(3).unwrap();
    let c = CountingContext::new(&h, BoundaryCondition::Absolute, 1, 20).unwrap();
    assert_eq!(c.eigenvalue(0), int(4));
    assert_eq!(c.counting_function(&int(3)).unwrap(), int(0));
    assert_eq!(c.counting_function(&int(4)).unwrap(), rat(3, 2));
    assert_eq!(c.counting_function(&int(5)).unwrap(), int(3));
    assert_eq!(c.counting_function(&int(9)).unwrap(), rat(3 + 4, 1));
}

#[test]
fn counting_is_monotone_and_locally_constant() {
    let g = catalog_lookup(&GroupName::S334).unwrap();
    let c = CountingContext::new(&g, BoundaryCondition::Relative, 1, 40).unwrap();
    let mut prev = Rational::from_integer(0.into());
    for k in 0..400 {
        let lam = rat(k * 7, 4);
        let n = c.counting_function(&lam).unwrap();
        assert!(n >= prev);
        prev = n;
    }
    // constant strictly between two eigenvalues
    let (a, b) = (c.eigenvalue(10), c.eigenvalue(11));
    let mid1 = (&a * int(3) + &b) / int(4);
    let mid2 = (&a + &b * int(3)) / int(4);
    assert_eq!(c.counting_function(&mid1).unwrap(), c.counting_function(&mid2).unwrap());
}

#[test]
fn weyl_constant_symmetry_and_ratio() {
    for name in GroupName::polytopes() {
        let g = catalog_lookup(&name).unwrap();
        assert_eq!(weyl_constant(&g, 0), weyl_constant(&g, 2));
    }
    let h = GroupDescriptor::hemisphere(3).unwrap();
    assert_eq!(weyl_constant(&h, 1), rat(1, 3));
    let w = weyl_leading(&catalog_lookup(&GroupName::S333).unwrap(), BoundaryCondition::Absolute, 1, 10_000).unwrap();
    assert!((w.ratio - 1.0).abs() < 0.02);
    assert!((w.ratio_shifted - w.ratio).abs() < 1e-3);
}

#[test]
fn weyl_polya_structure() {
    let g = catalog_lookup(&GroupName::S334).unwrap();
    let r = weyl_polya_report(&g, 60).unwrap();
    assert!(r.anti_reciprocal && r.vanishes_at_one && r.structure_holds);
    assert!(r.w.coeff(1).is_zero());
    let h = GroupDescriptor::hemisphere(3).unwrap();
    let r = weyl_polya_report(&h, 60).unwrap();
    assert!(r.ranks[0].holds);
}
