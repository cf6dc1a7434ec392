//! C ABI over the tesspec library.
//!
//! Groups are opaque handles. Every fallible call returns a `TesspecStatus`
//! and writes its result through an out-pointer; strings handed out are
//! owned by the caller and released with `tesspec_string_free`. The message
//! for the most recent failure on the calling thread is available from
//! `tesspec_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use tesspec::coxeter::{cache_dir, lookup_str, GroupDescriptor};
use tesspec::counting::{eigenvalue, weyl_constant, CountingContext};
use tesspec::eta::{eta_invariant, EtaKind};
use tesspec::exactnum::{parse_rational, rational_to_string};
use tesspec::poincare::{degeneracies, BoundaryCondition};
use tesspec::spectral::{casimir_energy, heat_coefficients_bc, modified_zeta_value, zeta_ce_value};
use tesspec::Error;

/// Result codes.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TesspecStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    UnknownGroup = 4,
    RankError = 5,
    DomainError = 6,
    PrecisionError = 7,
    ComputationFailed = 8,
    Io = 9,
    Panic = 10,
}

/// Boundary condition selector.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TesspecBoundary {
    Absolute = 0,
    Relative = 1,
}

/// Eta invariant selector.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TesspecEtaKind {
    Signature = 0,
    Dirac = 1,
}

/// Opaque group handle.
pub struct TesspecGroup {
    desc: GroupDescriptor,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TesspecStatus {
    match e {
        Error::UnknownGroup(_) => TesspecStatus::UnknownGroup,
        Error::RankError { .. } => TesspecStatus::RankError,
        Error::DomainError(_) | Error::IndexError { .. } => TesspecStatus::DomainError,
        Error::InsufficientPrecision(_) => TesspecStatus::PrecisionError,
        Error::Parse(_) => TesspecStatus::InvalidArgument,
        Error::Io(_) | Error::CacheCorrupt(_) | Error::CacheVersion(_) => TesspecStatus::Io,
        _ => TesspecStatus::ComputationFailed,
    }
}

struct Fail(TesspecStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TesspecStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TesspecStatus::Ok
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic".into());
            TesspecStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(TesspecStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(TesspecStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn group_arg<'a>(g: *const TesspecGroup) -> Result<&'a GroupDescriptor, Fail> {
    g.as_ref().map(|g| &g.desc).ok_or_else(|| Fail(TesspecStatus::NullPointer, "group handle is null".into()))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(TesspecStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| Fail(TesspecStatus::ComputationFailed, "interior nul".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), Fail> {
    if out.is_null() {
        Err(Fail(TesspecStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn bc_of(b: TesspecBoundary) -> BoundaryCondition {
    match b {
        TesspecBoundary::Absolute => BoundaryCondition::Absolute,
        TesspecBoundary::Relative => BoundaryCondition::Relative,
    }
}

fn rank_ok(desc: &GroupDescriptor, p: u32) -> Result<usize, Fail> {
    if p >= desc.d() {
        return Err(Fail(TesspecStatus::RankError, format!("rank {p} invalid for d = {}", desc.d())));
    }
    Ok(p as usize)
}

fn json(v: &impl serde::Serialize) -> Result<String, Fail> {
    serde_json::to_string(v).map_err(|e| Fail(TesspecStatus::ComputationFailed, e.to_string()))
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn tesspec_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the last failed call on this thread, or null. Free with
/// `tesspec_string_free`.
#[no_mangle]
pub extern "C" fn tesspec_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map(|c| c.clone().into_raw()).unwrap_or(ptr::null_mut()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn tesspec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Looks up a catalog group by name ("3-3-3", "hemisphere-5", ...).
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tesspec_group_new(name: *const c_char, out: *mut *mut TesspecGroup) -> TesspecStatus {
    guard(|| {
        check_out(out)?;
        let desc = lookup_str(str_arg(name, "name")?)?;
        *out = Box::into_raw(Box::new(TesspecGroup { desc }));
        Ok(())
    })
}

/// Builds a degree-driven group from `len` reduced degrees.
///
/// # Safety
/// `degrees` must point to `len` readable values and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn tesspec_group_custom(
    degrees: *const u32,
    len: usize,
    out: *mut *mut TesspecGroup,
) -> TesspecStatus {
    guard(|| {
        check_out(out)?;
        if degrees.is_null() || len == 0 {
            return Err(Fail(TesspecStatus::InvalidArgument, "empty degree list".into()));
        }
        let degs = std::slice::from_raw_parts(degrees, len);
        let desc = GroupDescriptor::custom(degs)?;
        *out = Box::into_raw(Box::new(TesspecGroup { desc }));
        Ok(())
    })
}

/// Releases a group handle. Null is ignored.
///
/// # Safety
/// `g` must come from `tesspec_group_new` or `tesspec_group_custom`.
#[no_mangle]
pub unsafe extern "C" fn tesspec_group_free(g: *mut TesspecGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Sphere dimension d of the group, 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tesspec_group_dimension(g: *const TesspecGroup) -> u32 {
    g.as_ref().map(|g| g.desc.d()).unwrap_or(0)
}

/// Group order as a decimal string.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tesspec_group_order(g: *const TesspecGroup, out: *mut *mut c_char) -> TesspecStatus {
    guard(|| {
        let desc = group_arg(g)?;
        put_string(out, desc.order.to_string())
    })
}

/// Display label of the group.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tesspec_group_label(g: *const TesspecGroup, out: *mut *mut c_char) -> TesspecStatus {
    guard(|| {
        let desc = group_arg(g)?;
        put_string(out, desc.label())
    })
}

/// Coexact zeta value at `s` (a rational string such as "0", "-1", "-1/2").
/// At middle rank of odd d the boundary condition is ignored.
///
/// # Safety
/// Pointers must be valid; `s` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn tesspec_zeta(
    g: *const TesspecGroup,
    p: u32,
    bc: TesspecBoundary,
    s: *const c_char,
    out: *mut *mut c_char,
) -> TesspecStatus {
    guard(|| {
        let desc = group_arg(g)?;
        let p = rank_ok(desc, p)?;
        let s = parse_rational(str_arg(s, "s")?)?;
        let d = desc.d() as usize;
        let v = if d % 2 == 1 && 2 * p + 1 == d {
            zeta_ce_value(desc, p, &s)?
        } else {
            modified_zeta_value(desc, p, bc_of(bc), &s)?
        };
        put_string(out, rational_to_string(&v))
    })
}

/// Middle-rank Casimir energy.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn tesspec_casimir(g: *const TesspecGroup, p: u32, out: *mut *mut c_char) -> TesspecStatus {
    guard(|| {
        let desc = group_arg(g)?;
        let p = rank_ok(desc, p)?;
        put_string(out, rational_to_string(&casimir_energy(desc, p)?))
    })
}

/// Heat-kernel coefficients as a JSON array of {k, coefficient, sqrt_pi}.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn tesspec_heat_coefficients_json(
    g: *const TesspecGroup,
    p: u32,
    bc: TesspecBoundary,
    out: *mut *mut c_char,
) -> TesspecStatus {
    guard(|| {
        let desc = group_arg(g)?;
        let p = rank_ok(desc, p)?;
        put_string(out, json(&heat_coefficients_bc(desc, bc_of(bc), p)?)?)
    })
}

/// Degeneracies at levels 0..=lmax as a JSON array of rational strings.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn tesspec_degeneracies_json(
    g: *const TesspecGroup,
    p: u32,
    bc: TesspecBoundary,
    lmax: u32,
    out: *mut *mut c_char,
) -> TesspecStatus {
    guard(|| {
        let desc = group_arg(g)?;
        let p = rank_ok(desc, p)?;
        let v: Vec<String> = degeneracies(desc, bc_of(bc), p, lmax as usize)?.iter().map(rational_to_string).collect();
        put_string(out, json(&v)?)
    })
}

/// Counting function N(λ) with the half-weight convention at eigenvalues.
///
/// # Safety
/// Pointers must be valid; `lambda` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn tesspec_counting(
    g: *const TesspecGroup,
    p: u32,
    bc: TesspecBoundary,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> TesspecStatus {
    guard(|| {
        let desc = group_arg(g)?;
        let p = rank_ok(desc, p)?;
        let lam = parse_rational(str_arg(lambda, "lambda")?)?;
        let d = desc.d() as usize;
        let mut lmax = 8usize;
        while eigenvalue(d, p, lmax as u64) <= lam {
            lmax *= 2;
        }
        let ctx = CountingContext::new(desc, bc_of(bc), p, lmax)?;
        put_string(out, rational_to_string(&ctx.counting_function(&lam)?))
    })
}

/// Exact Weyl constant of the counting function, as a rational string.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn tesspec_weyl_constant(g: *const TesspecGroup, p: u32, out: *mut *mut c_char) -> TesspecStatus {
    guard(|| {
        let desc = group_arg(g)?;
        let p = rank_ok(desc, p)?;
        put_string(out, rational_to_string(&weyl_constant(desc, p)))
    })
}

/// Eta invariant as JSON. `cache` may be null to use $TESSPEC_CACHE_DIR.
///
/// # Safety
/// Pointers must be valid; `cache` null or nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn tesspec_eta_json(
    g: *const TesspecGroup,
    kind: TesspecEtaKind,
    digits: u32,
    cache: *const c_char,
    out: *mut *mut c_char,
) -> TesspecStatus {
    guard(|| {
        let desc = group_arg(g)?;
        let explicit = if cache.is_null() { None } else { Some(PathBuf::from(str_arg(cache, "cache")?)) };
        let dir = cache_dir(explicit.as_deref());
        let kind = match kind {
            TesspecEtaKind::Signature => EtaKind::Signature,
            TesspecEtaKind::Dirac => EtaKind::Dirac,
        };
        put_string(out, json(&eta_invariant(desc, kind, digits, dir.as_deref())?)?)
    })
}
