use tesspec::coxeter::{catalog_lookup, GroupName};
use tesspec::eta::{eta_dirac, eta_invariant, eta_signature, lune_eta_check, reference_value, EtaKind};
use tesspec::Error;

#[test]
fn signature_rows_that_match() {
    for name in [GroupName::S333, GroupName::S334, GroupName::S335] {
        let g = catalog_lookup(&name).unwrap();
        let r = eta_signature(&g, 64, None).unwrap();
        assert_eq!(r.recognized, reference_value(&name, EtaKind::Signature), "{}", name.label());
        assert_eq!(r.status, "match");
    }
}

#[test]
fn dirac_calibration_row() {
    let g = catalog_lookup(&GroupName::S334).unwrap();
    let r = eta_dirac(&g, 64, None).unwrap();
    assert_eq!(r.recognized, reference_value(&GroupName::S334, EtaKind::Dirac));
}

#[test]
fn oriented_signature_sums_vanish() {
    for name in GroupName::polytopes() {
        let g = catalog_lookup(&name).unwrap();
        let r = eta_invariant(&g, EtaKind::Signature, 48, None).unwrap();
        assert!(r.oriented_numeric.value.chars().all(|c| matches!(c, '0' | '.' | '-')), "{}", r.oriented_numeric.value);
    }
}

#[test]
fn decimal_output_is_stable() {
    let g = catalog_lookup(&GroupName::S343).unwrap();
    let a = serde_json::to_string(&eta_signature(&g, 64, None).unwrap()).unwrap();
    let b = serde_json::to_string(&eta_signature(&g, 64, None).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn precision_floor() {
    let g = catalog_lookup(&GroupName::S333).unwrap();
    assert!(matches!(eta_signature(&g, 30, None), Err(Error::InsufficientPrecision(30))));
}

#[test]
fn lunes_vanish() {
    for q in 2..=10 {
        assert!(num_traits::Zero::is_zero(&lune_eta_check(q).unwrap()));
    }
    assert!(lune_eta_check(1).is_err());
}
