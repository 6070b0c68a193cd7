use std::ffi::{c_char, CStr, CString};
use std::ptr;

use serde_json::Value;
use torsion_galois_ffi::*;

fn curve(coeffs: &str) -> *mut TgCurve {
    let coeffs = CString::new(coeffs).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { tg_curve_parse(coeffs.as_ptr(), &mut out) };
    assert_eq!(status, TgStatus::Ok, "{}", last_error());
    out
}

fn last_error() -> String {
    let p = tg_last_error();
    if p.is_null() {
        return String::new();
    }
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { tg_string_free(p) };
    s
}

fn poly_json(p: *const TgPoly) -> Value {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tg_poly_to_json(p, &mut out) }, TgStatus::Ok);
    serde_json::from_str(&take_string(out)).unwrap()
}

#[test]
fn divpoly_and_degree() {
    let e = curve("0,0,0,1,1");
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { tg_divpoly(e, 3, false, &mut p) }, TgStatus::Ok);
    assert_eq!(unsafe { tg_poly_degree(p) }, 4);
    let v = poly_json(p);
    assert_eq!(v["ring"], "Q");
    assert_eq!(v["coeffs"], serde_json::json!(["-1", "12", "6", "0", "3"]));
    unsafe {
        tg_poly_free(p);
        tg_curve_free(e);
    }
}

#[test]
fn charpoly_both_routes() {
    let e = curve("1,0,0,0,-4/13");
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { tg_charpoly(e, ptr::null(), 3, TgMethod::Both, &mut p) }, TgStatus::Ok);
    let v = poly_json(p);
    assert_eq!(v["coeffs"][0], "-6912/28561");
    assert_eq!(v["coeffs"][8], "1");
    unsafe { tg_poly_free(p) };

    let u = CString::new("1,1,0").unwrap();
    let (mut m, mut r) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { tg_charpoly(e, u.as_ptr(), 4, TgMethod::Matrix, &mut m) }, TgStatus::Ok);
    assert_eq!(unsafe { tg_charpoly(e, u.as_ptr(), 4, TgMethod::Resultant, &mut r) }, TgStatus::Ok);
    assert_eq!(poly_json(m), poly_json(r));
    assert_eq!(unsafe { tg_poly_degree(m) }, 12);
    unsafe {
        tg_poly_free(m);
        tg_poly_free(r);
        tg_curve_free(e);
    }
}

#[test]
fn family_over_qt() {
    let e = curve("1,0,0,0,t");
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { tg_charpoly(e, ptr::null(), 3, TgMethod::Matrix, &mut p) }, TgStatus::Ok);
    assert_eq!(poly_json(p)["ring"], "Qt");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tg_classify_mod3(e, 10, &mut out) }, TgStatus::InvalidArgument);
    assert!(out.is_null());
    unsafe {
        tg_poly_free(p);
        tg_curve_free(e);
    }
}

#[test]
fn classify_and_probe() {
    let e = curve("0,0,0,1,1");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tg_classify_mod3(e, 100_000, &mut out) }, TgStatus::Ok);
    let v: Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["label"], "GL2F3");
    assert_eq!(v["qualifier"], "exact");

    let mut prime = 0u64;
    assert_eq!(unsafe { tg_minus_id(e, 3, 100_000, &mut prime) }, TgStatus::Ok);
    assert!(prime > 0 && prime % 3 == 1);
    assert_eq!(unsafe { tg_minus_id(e, 9, 100, &mut prime) }, TgStatus::InvalidArgument);
    unsafe { tg_curve_free(e) };
}

#[test]
fn error_codes() {
    let mut c = ptr::null_mut();
    let bad = CString::new("1,2").unwrap();
    assert_eq!(unsafe { tg_curve_parse(bad.as_ptr(), &mut c) }, TgStatus::Parse);
    assert!(!last_error().is_empty());
    let singular = CString::new("0,0,0,0,0").unwrap();
    assert_eq!(unsafe { tg_curve_parse(singular.as_ptr(), &mut c) }, TgStatus::SingularCurve);
    assert_eq!(unsafe { tg_curve_parse(ptr::null(), &mut c) }, TgStatus::NullPointer);

    let e = curve("0,0,0,1,1");
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { tg_charpoly(e, ptr::null(), 3, TgMethod::Matrix, &mut p) },
        TgStatus::InadmissibleU
    );
    assert!(last_error().contains("inadmissible"));
    let x = CString::new("0,1,0").unwrap();
    assert_eq!(unsafe { tg_charpoly(e, x.as_ptr(), 2, TgMethod::Both, &mut p) }, TgStatus::Ok);
    assert_eq!(unsafe { tg_poly_degree(p) }, 3);
    unsafe { tg_poly_free(p) };
    let y = CString::new("1,0,0").unwrap();
    assert_eq!(
        unsafe { tg_charpoly(e, y.as_ptr(), 2, TgMethod::Both, &mut p) },
        TgStatus::InvalidArgument
    );
    assert_eq!(unsafe { tg_charpoly(ptr::null(), x.as_ptr(), 3, TgMethod::Both, &mut p) }, TgStatus::NullPointer);
    assert_eq!(unsafe { tg_poly_degree(ptr::null()) }, -1);
    unsafe {
        tg_curve_free(e);
        tg_curve_free(ptr::null_mut());
        tg_poly_free(ptr::null_mut());
        tg_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_exports() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/torsion_galois.h")).unwrap();
    for name in [
        "typedef struct TgCurve TgCurve;",
        "typedef struct TgPoly TgPoly;",
        "TG_STATUS_OK = 0",
        "TG_METHOD_BOTH = 2",
        "tg_last_error(void)",
        "tg_string_free(",
        "tg_curve_parse(",
        "tg_curve_free(",
        "tg_divpoly(",
        "tg_charpoly(",
        "tg_poly_degree(",
        "tg_poly_to_json(",
        "tg_poly_free(",
        "tg_classify_mod3(",
        "tg_minus_id(",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}
