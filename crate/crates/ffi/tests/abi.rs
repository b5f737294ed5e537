use std::ffi::{c_char, CStr};
use std::ptr;

use chebyshev_expansions_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { cheb_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cheb_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn poly_round_trip() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { cheb_poly_new(c"hermite".as_ptr(), 3, &mut p) }, ChebStatus::Ok);
    let mut deg = 0;
    assert_eq!(unsafe { cheb_poly_degree(p, &mut deg) }, ChebStatus::Ok);
    assert_eq!(deg, 3);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cheb_poly_to_string(p, &mut s) }, ChebStatus::Ok);
    assert_eq!(take(s), "8*x^3 - 12*x");
    let coeffs: Vec<String> = (0..5)
        .map(|k| {
            let mut s = ptr::null_mut();
            assert_eq!(unsafe { cheb_poly_coefficient(p, k, &mut s) }, ChebStatus::Ok);
            take(s)
        })
        .collect();
    assert_eq!(coeffs, ["0", "-12", "0", "8", "0"]);
    unsafe { cheb_poly_free(p) };
}

#[test]
fn expansion_matches_cli_json() {
    let mut e = ptr::null_mut();
    let status = unsafe { cheb_expansion_new(c"bernoulli".as_ptr(), c"T".as_ptr(), 1, ChebSource::CrossValidated, &mut e) };
    assert_eq!(status, ChebStatus::Ok);
    let mut len = 0;
    assert_eq!(unsafe { cheb_expansion_len(e, &mut len) }, ChebStatus::Ok);
    assert_eq!(len, 2);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cheb_expansion_to_json(e, &mut s) }, ChebStatus::Ok);
    let golden = include_str!("../../core/tests/golden/expand_bernoulli_T_1.json");
    assert_eq!(take(s), golden.trim_end());
    assert_eq!(unsafe { cheb_expansion_coefficient(e, 2, &mut s) }, ChebStatus::OutOfRange);
    unsafe { cheb_expansion_free(e) };
}

#[test]
fn sources_agree() {
    let coefficients = |source| {
        let mut e = ptr::null_mut();
        assert_eq!(unsafe { cheb_expansion_new(c"euler".as_ptr(), c"U".as_ptr(), 9, source, &mut e) }, ChebStatus::Ok);
        let out: Vec<String> = (0..10)
            .map(|k| {
                let mut s = ptr::null_mut();
                assert_eq!(unsafe { cheb_expansion_coefficient(e, k, &mut s) }, ChebStatus::Ok);
                take(s)
            })
            .collect();
        unsafe { cheb_expansion_free(e) };
        out
    };
    let closed = coefficients(ChebSource::ClosedForm);
    assert_eq!(closed, coefficients(ChebSource::Projection));
    assert_eq!(closed, coefficients(ChebSource::TriangularSolve));
    assert_eq!(closed, coefficients(ChebSource::CrossValidated));
}

#[test]
fn cross_validate_and_moment() {
    assert_eq!(unsafe { cheb_cross_validate(c"hermite".as_ptr(), c"U".as_ptr(), 20) }, ChebStatus::Ok);
    assert_eq!(unsafe { cheb_cross_validate(c"hermite".as_ptr(), c"V".as_ptr(), 20) }, ChebStatus::InvalidArgument);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cheb_moment(0, c"minus".as_ptr(), 2, &mut s) }, ChebStatus::Ok);
    assert_eq!(take(s), "(1/2)*pi");
    assert_eq!(unsafe { cheb_moment(0, c"minus".as_ptr(), 3, &mut s) }, ChebStatus::Ok);
    assert_eq!(take(s), "0");
}

#[test]
fn verify_reports_counts() {
    let (mut passed, mut total, mut report) = (0, 0, ptr::null_mut());
    let status = unsafe { cheb_verify(c"orthogonality-T".as_ptr(), 12, &mut passed, &mut total, &mut report) };
    assert_eq!(status, ChebStatus::Ok);
    assert_eq!((passed, total), (169, 169));
    assert!(take(report).ends_with("orthogonality-T: 169/169 passed\n"));
    let status = unsafe { cheb_verify(c"nonsense".as_ptr(), 3, &mut passed, &mut total, ptr::null_mut()) };
    assert_eq!(status, ChebStatus::InvalidArgument);
    assert!(last_error().contains("nonsense"));
}

#[test]
fn argument_errors() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { cheb_poly_new(ptr::null(), 1, &mut p) }, ChebStatus::NullPointer);
    assert_eq!(unsafe { cheb_poly_new(c"legendre".as_ptr(), 1, &mut p) }, ChebStatus::InvalidArgument);
    assert!(last_error().contains("legendre"));
    assert_eq!(unsafe { cheb_poly_new(c"euler".as_ptr(), CHEB_MAX_DEGREE + 1, &mut p) }, ChebStatus::OutOfRange);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { cheb_poly_new(bad.as_ptr().cast(), 1, &mut p) }, ChebStatus::InvalidArgument);
    assert!(p.is_null());
    let mut deg = 0;
    assert_eq!(unsafe { cheb_poly_degree(ptr::null(), &mut deg) }, ChebStatus::NullPointer);
    unsafe {
        cheb_poly_free(ptr::null_mut());
        cheb_expansion_free(ptr::null_mut());
        cheb_string_free(ptr::null_mut());
    }
}

#[test]
fn success_clears_last_error() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { cheb_poly_new(c"legendre".as_ptr(), 1, &mut p) }, ChebStatus::InvalidArgument);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { cheb_poly_new(c"bernoulli".as_ptr(), 1, &mut p) }, ChebStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe { cheb_poly_free(p) };
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(cheb_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
