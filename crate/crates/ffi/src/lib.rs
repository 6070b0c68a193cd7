//! C ABI over the torsion-galois library.
//!
//! Curves and polynomials cross the boundary as opaque handles. Every
//! fallible call returns a [`TgStatus`]; on failure the message is kept in a
//! thread-local slot readable with [`tg_last_error`]. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`tg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use torsion_galois::cli::AnyPoly;
use torsion_galois::curve::{AnyCurve, LinearFunction, WeierstrassCurve};
use torsion_galois::divpoly::{psi, psi_tilde};
use torsion_galois::galois::{classify_mod3, minus_id_probe, MinusIdProbeResult};
use torsion_galois::scalar::Scalar;
use torsion_galois::torsionchar::{charpoly, charpoly_n2, Method};
use torsion_galois::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    SingularCurve = 4,
    InadmissibleU = 5,
    NotPrime = 6,
    /// Exact arithmetic failed (inexact division, not squarefree).
    Arithmetic = 7,
    /// A requested consistency check did not hold.
    CheckFailed = 8,
    Internal = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TgMethod {
    Matrix = 0,
    Resultant = 1,
    /// Both routes; fails with `CheckFailed` unless they agree.
    Both = 2,
}

/// A curve over Q or Q[t].
pub struct TgCurve(AnyCurve);

/// A polynomial over Q or Q[t].
pub struct TgPoly(AnyPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TgStatus {
    match e {
        Error::InvalidArgument(_) | Error::BadReduction(_) | Error::NotIntegral(_) => TgStatus::InvalidArgument,
        Error::Parse(_) | Error::Io(_) => TgStatus::Parse,
        Error::SingularCurve => TgStatus::SingularCurve,
        Error::InadmissibleU(_) => TgStatus::InadmissibleU,
        Error::NotPrime(_) => TgStatus::NotPrime,
        Error::InexactDivision { .. } | Error::NotSquarefree => TgStatus::Arithmetic,
        Error::Inconsistent(_) => TgStatus::CheckFailed,
        Error::NonConvergence { .. } | Error::Internal(_) => TgStatus::Internal,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (TgStatus, String)>) -> TgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside torsion-galois");
            TgStatus::Panic
        }
    }
}

fn lib<T>(r: torsion_galois::Result<T>) -> Result<T, (TgStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (TgStatus, String) {
    (TgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (TgStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (TgStatus::Parse, format!("{what} is not UTF-8")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn tg_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"a1,a2,a3,a4,a6"`; coefficients may be polynomials in `t`.
///
/// # Safety
/// `coeffs` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_curve_parse(coeffs: *const c_char, out: *mut *mut TgCurve) -> TgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let curve = lib(AnyCurve::parse(read_str(coeffs, "coeffs")?))?;
        *out = Box::into_raw(Box::new(TgCurve(curve)));
        Ok(())
    })
}

/// # Safety
/// `curve` must come from [`tg_curve_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tg_curve_free(curve: *mut TgCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// # Safety
/// `poly` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tg_poly_free(poly: *mut TgPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

unsafe fn curve_ref<'a>(curve: *const TgCurve) -> Result<&'a AnyCurve, (TgStatus, String)> {
    curve.as_ref().map(|c| &c.0).ok_or_else(|| null("curve"))
}

unsafe fn put_poly(out: *mut *mut TgPoly, p: AnyPoly) {
    *out = Box::into_raw(Box::new(TgPoly(p)));
}

/// Division polynomial cofactor (`psi_n`, or `psi_n / psi_2` for even `n`),
/// or the primitive part when `primitive` is set.
///
/// # Safety
/// `curve` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_divpoly(curve: *const TgCurve, n: u32, primitive: bool, out: *mut *mut TgPoly) -> TgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let n = n as usize;
        let poly = match curve_ref(curve)? {
            AnyCurve::Q(c) => AnyPoly::Q(if primitive { lib(psi_tilde(c, n))? } else { lib(psi(c, n))?.cofactor }),
            AnyCurve::Qt(c) => AnyPoly::Qt(if primitive { lib(psi_tilde(c, n))? } else { lib(psi(c, n))?.cofactor }),
        };
        put_poly(out, poly);
        Ok(())
    })
}

fn charpoly_any<R: Scalar>(
    curve: &WeierstrassCurve<R>,
    u: Option<&LinearFunction>,
    n: usize,
    method: TgMethod,
) -> Result<torsion_galois::polyring::Poly<R>, (TgStatus, String)> {
    if n == 2 {
        if u.is_some_and(|u| *u != LinearFunction::from_i64(0, 1, 0)) {
            return Err((TgStatus::InvalidArgument, "n = 2 supports only u = x".into()));
        }
        return Ok(charpoly_n2(curve).chi);
    }
    let y = LinearFunction::y();
    let u = u.unwrap_or(&y);
    match method {
        TgMethod::Matrix => Ok(lib(charpoly(curve, u, n, Method::Matrix))?.chi),
        TgMethod::Resultant => Ok(lib(charpoly(curve, u, n, Method::Resultant))?.chi),
        TgMethod::Both => {
            let m = lib(charpoly(curve, u, n, Method::Matrix))?.chi;
            let r = lib(charpoly(curve, u, n, Method::Resultant))?.chi;
            if m != r {
                return Err((TgStatus::CheckFailed, "matrix and resultant routes disagree".into()));
            }
            Ok(m)
        }
    }
}

/// Characteristic polynomial of `u = a y + b x + c` (given as `"a,b,c"`, or
/// null for `y`) on the points of exact order `n`.
///
/// # Safety
/// `curve` must be a live handle, `u` null or NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn tg_charpoly(
    curve: *const TgCurve,
    u: *const c_char,
    n: u32,
    method: TgMethod,
    out: *mut *mut TgPoly,
) -> TgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let u = if u.is_null() {
            None
        } else {
            Some(lib(LinearFunction::parse(read_str(u, "u")?))?)
        };
        let n = n as usize;
        let poly = match curve_ref(curve)? {
            AnyCurve::Q(c) => AnyPoly::Q(charpoly_any(c, u.as_ref(), n, method)?),
            AnyCurve::Qt(c) => AnyPoly::Qt(charpoly_any(c, u.as_ref(), n, method)?),
        };
        put_poly(out, poly);
        Ok(())
    })
}

/// Degree of a polynomial; `-1` for zero or a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tg_poly_degree(poly: *const TgPoly) -> i64 {
    let Some(p) = poly.as_ref() else { return -1 };
    let d = match &p.0 {
        AnyPoly::Q(f) => f.degree(),
        AnyPoly::Qt(f) => f.degree(),
        AnyPoly::Fp(f) => f.degree(),
    };
    d.map_or(-1, |d| d as i64)
}

/// Polynomial JSON `{"ring", "coeffs"}`, ascending. Free with [`tg_string_free`].
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_poly_to_json(poly: *const TgPoly, out: *mut *mut c_char) -> TgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = poly.as_ref().ok_or_else(|| null("poly"))?;
        *out = to_c_string(p.0.to_json().to_string());
        Ok(())
    })
}

/// Mod-3 image classification as JSON `{label, qualifier, evidence}`.
///
/// # Safety
/// `curve` must be a live handle over Q and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_classify_mod3(curve: *const TgCurve, probe_bound: u64, out: *mut *mut c_char) -> TgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let AnyCurve::Q(c) = curve_ref(curve)? else {
            return Err((TgStatus::InvalidArgument, "classification needs a curve over Q".into()));
        };
        let result = lib(classify_mod3(c, probe_bound))?;
        let text = serde_json::to_string(&result).map_err(|e| (TgStatus::Internal, e.to_string()))?;
        *out = to_c_string(text);
        Ok(())
    })
}

/// Frobenius probe for `-id` mod `ell`. Writes the witness prime, or 0 when
/// none exists up to `bound`.
///
/// # Safety
/// `curve` must be a live handle over Q and `out_prime` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_minus_id(curve: *const TgCurve, ell: u64, bound: u64, out_prime: *mut u64) -> TgStatus {
    guard(|| {
        if out_prime.is_null() {
            return Err(null("out_prime"));
        }
        let AnyCurve::Q(c) = curve_ref(curve)? else {
            return Err((TgStatus::InvalidArgument, "the probe needs a curve over Q".into()));
        };
        *out_prime = match lib(minus_id_probe(c, ell, bound))? {
            MinusIdProbeResult::Found { prime, .. } => prime,
            MinusIdProbeResult::NotFoundUpTo { .. } => 0,
        };
        Ok(())
    })
}
