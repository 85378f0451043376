//! C ABI for the ipgp engine.
//!
//! Polynomials and root reports cross the boundary as opaque handles that
//! the caller releases with the matching `*_free` function. Fallible calls
//! return an [`IpgpStatus`]; the message for the most recent failure on the
//! calling thread is available from [`ipgp_last_error`]. Strings returned
//! by this library are released with [`ipgp_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;

use ipgp::error::{Error, RootError};
use ipgp::oracle::{census, census_to_poly};
use ipgp::roots::{count_real_roots, find_roots_with, RootConfig, RootReport};
use ipgp::{build_gp, independence_polynomial, GpParams, IntPoly};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IpgpStatus {
    Ok = 0,
    InvalidParams = 1,
    NullPointer = 2,
    OracleCapExceeded = 3,
    NoConvergence = 4,
    Parse = 5,
    OutOfRange = 6,
    Internal = 7,
}

/// Opaque integer polynomial.
pub struct IpgpPoly(IntPoly);

/// Opaque root report.
pub struct IpgpRootReport(RootReport);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IpgpRoot {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: IpgpStatus, msg: impl Into<String>) -> IpgpStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> IpgpStatus {
    match e {
        Error::Params(_) | Error::Transfer(_) => IpgpStatus::InvalidParams,
        Error::Poly(_) => IpgpStatus::Parse,
        Error::Oracle(_) => IpgpStatus::OracleCapExceeded,
        Error::Roots(RootError::Degenerate(_)) => IpgpStatus::InvalidParams,
        Error::Roots(_) => IpgpStatus::NoConvergence,
    }
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> IpgpStatus) -> IpgpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(IpgpStatus::Internal, "internal panic"),
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message describing the last failed call on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ipgp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ipgp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `out` must be valid for a pointer write.
unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Computes `Ind(GP(n,k), x)` with the transfer matrix.
///
/// # Safety
/// `out` must be NULL or valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ipgp_independence_polynomial(
    n: i64,
    k: i64,
    out: *mut *mut IpgpPoly,
) -> IpgpStatus {
    if out.is_null() {
        return fail(IpgpStatus::NullPointer, "out is NULL");
    }
    guard(|| {
        let result = GpParams::new(n, k)
            .map_err(Error::from)
            .and_then(|p| independence_polynomial(p).map_err(Error::from));
        match result {
            Ok(p) => {
                store(out, IpgpPoly(p));
                IpgpStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Computes `Ind(GP(n,k), x)` by brute-force enumeration (at most 30
/// vertices).
///
/// # Safety
/// `out` must be NULL or valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ipgp_census_polynomial(
    n: i64,
    k: i64,
    out: *mut *mut IpgpPoly,
) -> IpgpStatus {
    if out.is_null() {
        return fail(IpgpStatus::NullPointer, "out is NULL");
    }
    guard(|| {
        let result = GpParams::new(n, k)
            .map_err(Error::from)
            .and_then(|p| census(&build_gp(p)).map_err(Error::from));
        match result {
            Ok(c) => {
                store(out, IpgpPoly(census_to_poly(&c)));
                IpgpStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Parses `{"coeffs": ["1", "10", ...]}`.
///
/// # Safety
/// `json` must be NULL or a NUL-terminated string; `out` must be NULL or
/// valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ipgp_poly_from_json(
    json: *const c_char,
    out: *mut *mut IpgpPoly,
) -> IpgpStatus {
    if json.is_null() || out.is_null() {
        return fail(IpgpStatus::NullPointer, "json or out is NULL");
    }
    let Ok(text) = CStr::from_ptr(json).to_str() else {
        return fail(IpgpStatus::Parse, "input is not UTF-8");
    };
    match serde_json::from_str::<IntPoly>(text) {
        Ok(p) => {
            store(out, IpgpPoly(p));
            IpgpStatus::Ok
        }
        Err(e) => fail(IpgpStatus::Parse, e.to_string()),
    }
}

/// Serializes as `{"coeffs": [...]}`; NULL if `poly` is NULL.
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ipgp_poly_to_json(poly: *const IpgpPoly) -> *mut c_char {
    match poly.as_ref() {
        Some(p) => into_c_string(serde_json::to_string(&p.0).unwrap_or_default()),
        None => ptr::null_mut(),
    }
}

/// Degree, or -1 for the zero polynomial or a NULL handle.
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ipgp_poly_degree(poly: *const IpgpPoly) -> i64 {
    poly.as_ref()
        .and_then(|p| p.0.degree())
        .map_or(-1, |d| d as i64)
}

/// Coefficient of `x^index` as a decimal string (zero past the degree);
/// NULL if `poly` is NULL.
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ipgp_poly_coeff(poly: *const IpgpPoly, index: usize) -> *mut c_char {
    match poly.as_ref() {
        Some(p) => into_c_string(p.0.coeff(index).to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// Both arguments must be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn ipgp_poly_equal(a: *const IpgpPoly, b: *const IpgpPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// # Safety
/// `poly` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ipgp_poly_free(poly: *mut IpgpPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Real roots counted with multiplicity, exactly.
///
/// # Safety
/// `poly` must be NULL or a live handle; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ipgp_count_real_roots(
    poly: *const IpgpPoly,
    out: *mut usize,
) -> IpgpStatus {
    let (Some(p), false) = (poly.as_ref(), out.is_null()) else {
        return fail(IpgpStatus::NullPointer, "poly or out is NULL");
    };
    if p.0.is_zero() {
        return fail(IpgpStatus::InvalidParams, "zero polynomial");
    }
    guard(|| {
        *out = count_real_roots(&p.0);
        IpgpStatus::Ok
    })
}

/// Locates all complex roots. `precision_bits` of 0 selects the default.
///
/// # Safety
/// `poly` must be NULL or a live handle; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ipgp_find_roots(
    poly: *const IpgpPoly,
    precision_bits: u32,
    out: *mut *mut IpgpRootReport,
) -> IpgpStatus {
    let (Some(p), false) = (poly.as_ref(), out.is_null()) else {
        return fail(IpgpStatus::NullPointer, "poly or out is NULL");
    };
    guard(|| {
        let config = if precision_bits == 0 {
            RootConfig::default()
        } else {
            RootConfig::with_precision(precision_bits)
        };
        match find_roots_with(&p.0, &config) {
            Ok(r) => {
                store(out, IpgpRootReport(r));
                IpgpStatus::Ok
            }
            Err(e) => {
                let e = Error::from(e);
                fail(status_of(&e), e.to_string())
            }
        }
    })
}

/// Number of roots (the degree); 0 for NULL.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ipgp_report_degree(report: *const IpgpRootReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.degree)
}

/// # Safety
/// `report` must be NULL or a live handle; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ipgp_report_root(
    report: *const IpgpRootReport,
    index: usize,
    out: *mut IpgpRoot,
) -> IpgpStatus {
    let (Some(r), false) = (report.as_ref(), out.is_null()) else {
        return fail(IpgpStatus::NullPointer, "report or out is NULL");
    };
    match r.0.roots.get(index) {
        Some(root) => {
            *out = IpgpRoot {
                re: root.re,
                im: root.im,
                residual: root.residual,
            };
            IpgpStatus::Ok
        }
        None => fail(
            IpgpStatus::OutOfRange,
            format!("root index {index} out of range for degree {}", r.0.degree),
        ),
    }
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ipgp_report_exact_real_count(report: *const IpgpRootReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.exact_real_count)
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ipgp_report_is_real_rooted(report: *const IpgpRootReport) -> bool {
    report.as_ref().is_some_and(|r| r.0.is_real_rooted)
}

/// NaN for NULL.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ipgp_report_max_residual(report: *const IpgpRootReport) -> f64 {
    report.as_ref().map_or(f64::NAN, |r| r.0.max_residual)
}

/// # Safety
/// `report` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ipgp_report_free(report: *mut IpgpRootReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ipgp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
