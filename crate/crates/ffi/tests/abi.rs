use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::Path;
use std::process::Command;
use std::ptr;

use tesspec_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { tesspec_string_free(s) };
    out
}

fn group(name: &str) -> *mut TesspecGroup {
    let n = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tesspec_group_new(n.as_ptr(), &mut g) }, TesspecStatus::Ok);
    g
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(tesspec_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn group_handle_roundtrip() {
    let g = group("3-3-3");
    assert_eq!(unsafe { tesspec_group_dimension(g) }, 3);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tesspec_group_order(g, &mut s) }, TesspecStatus::Ok);
    assert_eq!(take(s), "120");
    unsafe { tesspec_group_free(g) };
    unsafe { tesspec_group_free(ptr::null_mut()) };
}

#[test]
fn middle_zeta_at_zero() {
    let g = group("3-3-3");
    let s0 = CString::new("0").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { tesspec_zeta(g, 1, TesspecBoundary::Absolute, s0.as_ptr(), &mut out) };
    assert_eq!(st, TesspecStatus::Ok);
    assert_eq!(take(out), "1/2");
    unsafe { tesspec_group_free(g) };
}

#[test]
fn hemisphere_casimir_and_degeneracies() {
    let g = group("hemisphere-3");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tesspec_casimir(g, 1, &mut out) }, TesspecStatus::Ok);
    assert_eq!(take(out), "11/240");
    assert_eq!(unsafe { tesspec_degeneracies_json(g, 1, TesspecBoundary::Absolute, 2, &mut out) }, TesspecStatus::Ok);
    assert_eq!(take(out), r#"["3","8","15"]"#);
    unsafe { tesspec_group_free(g) };
}

#[test]
fn custom_group_and_weyl() {
    let degs = [1u32, 1, 1];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tesspec_group_custom(degs.as_ptr(), 3, &mut g) }, TesspecStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tesspec_weyl_constant(g, 1, &mut out) }, TesspecStatus::Ok);
    // hemisphere(3), p=1: C(2,1)/3! = 1/3
    assert_eq!(take(out), "1/3");
    unsafe { tesspec_group_free(g) };
}

#[test]
fn counting_between_levels() {
    let g = group("hemisphere-3");
    let lam = CString::new("10").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tesspec_counting(g, 1, TesspecBoundary::Absolute, lam.as_ptr(), &mut out) }, TesspecStatus::Ok);
    // λ_0 = 4, λ_1 = 9 below 10, λ_2 = 16 above: 3 + 8
    assert_eq!(take(out), "11");
    unsafe { tesspec_group_free(g) };
}

#[test]
fn errors_set_codes_and_message() {
    let bad = CString::new("7-7-7").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tesspec_group_new(bad.as_ptr(), &mut g) }, TesspecStatus::UnknownGroup);
    assert!(g.is_null());
    let msg = take(tesspec_last_error());
    assert!(msg.contains("7-7-7"), "{msg}");

    assert_eq!(unsafe { tesspec_group_new(ptr::null(), &mut g) }, TesspecStatus::NullPointer);

    let g = group("3-3-3");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tesspec_casimir(g, 7, &mut out) }, TesspecStatus::RankError);
    let s = CString::new("x/y").unwrap();
    assert_eq!(
        unsafe { tesspec_zeta(g, 1, TesspecBoundary::Absolute, s.as_ptr(), &mut out) },
        TesspecStatus::InvalidArgument
    );
    assert_eq!(unsafe { tesspec_eta_json(g, TesspecEtaKind::Signature, 20, ptr::null(), &mut out) }, TesspecStatus::PrecisionError);
    assert_eq!(unsafe { tesspec_casimir(g, 1, ptr::null_mut()) }, TesspecStatus::NullPointer);

    // a success clears the message
    assert_eq!(unsafe { tesspec_casimir(g, 1, &mut out) }, TesspecStatus::Ok);
    take(out);
    assert!(tesspec_last_error().is_null());
    unsafe { tesspec_group_free(g) };
}

#[test]
fn eta_json_recognized() {
    let g = group("3-3-4");
    let dir = tempfile_dir();
    let c = CString::new(dir.to_str().unwrap()).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tesspec_eta_json(g, TesspecEtaKind::Signature, 64, c.as_ptr(), &mut out) }, TesspecStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["recognized"]["a"], "-5/16");
    assert_eq!(v["recognized"]["b"], "0");
    unsafe { tesspec_group_free(g) };
}

fn tempfile_dir() -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("tesspec-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include").join("tesspec.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["tesspec_group_new", "tesspec_string_free", "tesspec_last_error", "tesspec_eta_json"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let Ok(_) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping syntax check");
        return;
    };
    let src = tempfile_dir().join("use_header.c");
    std::fs::write(
        &src,
        "#include \"tesspec.h\"\nint main(void){TesspecGroup*g=0;TesspecStatus s=tesspec_group_new(\"3-3-3\",&g);tesspec_group_free(g);return s==TESSPEC_STATUS_OK?0:1;}\n",
    )
    .unwrap();
    let st = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header.parent().unwrap())
        .arg(&src)
        .status()
        .unwrap();
    assert!(st.success());
}
