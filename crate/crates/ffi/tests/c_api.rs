use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use contextuality_lab_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { clab_string_free(p) };
    s
}

fn last_error() -> String {
    let p = clab_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn parse(text: &str, mode: ClabMode) -> *mut ClabMultivector {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { clab_multivector_parse(cstr(text).as_ptr(), mode, &mut h) }, ClabStatus::Ok);
    h
}

#[test]
fn multivector_round_trip() {
    unsafe {
        let mut e1 = ptr::null_mut();
        let mut e2 = ptr::null_mut();
        assert_eq!(clab_multivector_basis(1, ClabMode::Exact, &mut e1), ClabStatus::Ok);
        assert_eq!(clab_multivector_basis(2, ClabMode::Exact, &mut e2), ClabStatus::Ok);

        let mut e12 = ptr::null_mut();
        assert_eq!(clab_multivector_product(e1, e2, &mut e12), ClabStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(clab_multivector_render(e12, &mut text), ClabStatus::Ok);
        assert_eq!(take_string(text), "e12");

        let mut sq = ptr::null_mut();
        assert_eq!(clab_multivector_product(e12, e12, &mut sq), ClabStatus::Ok);
        let mut s = 0.0;
        assert_eq!(clab_multivector_scalar_part(sq, &mut s), ClabStatus::Ok);
        assert_eq!(s, -1.0);

        let parsed = parse("1 + 2·e12 − e123", ClabMode::Exact);
        let one_plus = parse("1", ClabMode::Exact);
        let mut sum = ptr::null_mut();
        assert_eq!(clab_multivector_add(one_plus, sq, &mut sum), ClabStatus::Ok);
        let mut eq = true;
        assert_eq!(clab_multivector_equals(sum, parsed, 0.0, &mut eq), ClabStatus::Ok);
        assert!(!eq);
        assert_eq!(clab_multivector_equals(sum, parse("0", ClabMode::Exact), 0.0, &mut eq), ClabStatus::Ok);
        assert!(eq);

        for h in [e1, e2, e12, sq, parsed, one_plus, sum] {
            clab_multivector_free(h);
        }
        clab_multivector_free(ptr::null_mut());
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(clab_multivector_basis(4, ClabMode::Exact, &mut h), ClabStatus::InvalidArgument);
        assert!(h.is_null());
        assert!(last_error().contains("axis"));

        assert_eq!(clab_multivector_parse(cstr("e4").as_ptr(), ClabMode::Exact, &mut h), ClabStatus::Parse);
        assert_eq!(clab_multivector_parse(ptr::null(), ClabMode::Exact, &mut h), ClabStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(clab_multivector_parse(bad.as_ptr().cast(), ClabMode::Exact, &mut h), ClabStatus::InvalidUtf8);

        let exact = parse("e1", ClabMode::Exact);
        let approx = parse("e1", ClabMode::Approx);
        assert_eq!(clab_multivector_product(exact, approx, &mut h), ClabStatus::MixedMode);
        assert_eq!(clab_multivector_product(exact, ptr::null(), &mut h), ClabStatus::NullPointer);
        assert_eq!(clab_multivector_product(exact, exact, ptr::null_mut()), ClabStatus::NullPointer);
        clab_multivector_free(exact);
        clab_multivector_free(approx);
    }
}

#[test]
fn verify_chsh_and_search() {
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(clab_verify(cstr("pm").as_ptr(), ClabMode::Exact, 1, &mut json), ClabStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["summary"]["failed"], 0);
        assert_eq!(report["environment"]["seed"], 1);
        assert_eq!(clab_verify(cstr("bogus").as_ptr(), ClabMode::Exact, 1, &mut json), ClabStatus::InvalidArgument);

        let mut f = 0.0;
        assert_eq!(clab_chsh_f(std::f64::consts::PI / 3.0, &mut f), ClabStatus::Ok);
        assert!((f - 2.5).abs() <= 1e-12);
        assert_eq!(clab_chsh_f(4.0, &mut f), ClabStatus::InvalidArgument);

        assert_eq!(clab_search_identities(cstr("-e1").as_ptr(), &mut json), ClabStatus::Ok);
        let maps: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(maps.as_array().unwrap().len(), 4);
        assert_eq!(clab_search_identities(cstr("e3").as_ptr(), &mut json), ClabStatus::InvalidArgument);

        let v = CStr::from_ptr(clab_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/contextuality_lab.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["clab_multivector_parse", "clab_verify", "clab_string_free", "CLAB_STATUS_MIXED_MODE"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(status) = Command::new("cc")
        .args(["-std=c99", "-fsyntax-only", "-x", "c", "-include"])
        .arg(&header)
        .arg("/dev/null")
        .status()
    else {
        eprintln!("no C compiler found; skipping syntax check");
        return;
    };
    assert!(status.success());
}
