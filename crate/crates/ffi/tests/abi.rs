use std::ffi::CStr;
use std::ptr;

use genfrob_ffi::*;

fn tuple(parts: &[i64]) -> *mut GfTuple {
    let mut t = ptr::null_mut();
    let st = unsafe { gf_tuple_new(parts.as_ptr(), parts.len(), &mut t) };
    assert_eq!(st, GfStatus::Ok);
    assert!(!t.is_null());
    t
}

fn last_error() -> String {
    let p = gf_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn tuple_roundtrip() {
    let t = tuple(&[10, 15, 21]);
    let mut g = 0;
    unsafe {
        assert_eq!(gf_tuple_len(t), 3);
        assert_eq!(gf_tuple_gcd(t, &mut g), GfStatus::Ok);
        gf_tuple_free(t);
        gf_tuple_free(ptr::null_mut());
    }
    assert_eq!(g, 1);
}

#[test]
fn invalid_tuples_are_rejected() {
    let mut t = ptr::null_mut();
    unsafe {
        assert_eq!(gf_tuple_new([5i64].as_ptr(), 1, &mut t), GfStatus::InvalidInput);
        assert_eq!(gf_tuple_new([3i64, 0].as_ptr(), 2, &mut t), GfStatus::InvalidInput);
        assert_eq!(gf_tuple_new(ptr::null(), 2, &mut t), GfStatus::NullPointer);
    }
    assert!(t.is_null());
    assert!(last_error().contains("null"));
}

#[test]
fn denumerants() {
    let t = tuple(&[1, 2, 3]);
    let mut d = 0;
    unsafe {
        assert_eq!(gf_denumerant(t, 6, &mut d), GfStatus::Ok);
        assert_eq!(d, 7);
        assert_eq!(gf_denumerant(t, -1, &mut d), GfStatus::Ok);
        assert_eq!(d, 0);
        assert_eq!(gf_denumerant(t, 0, ptr::null_mut()), GfStatus::NullPointer);
        assert_eq!(gf_denumerant_two(12, 3, 4, &mut d), GfStatus::Ok);
        assert_eq!(d, 2);
        assert_eq!(gf_denumerant_two(12, 0, 4, &mut d), GfStatus::InvalidInput);
        gf_tuple_free(t);
    }
}

#[test]
fn series_table() {
    let t = tuple(&[3, 5]);
    let mut s = ptr::null_mut();
    let mut c = 0;
    unsafe {
        assert_eq!(gf_series_new(t, 15, &mut s), GfStatus::Ok);
        assert_eq!(gf_series_len(s), 16);
        let counts: Vec<u64> = (0..16)
            .map(|n| {
                assert_eq!(gf_series_get(s, n, &mut c), GfStatus::Ok);
                c
            })
            .collect();
        assert_eq!(counts, [1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 2]);
        assert_eq!(gf_series_get(s, 16, &mut c), GfStatus::OutOfRange);
        gf_series_free(s);
        gf_tuple_free(t);
    }
}

#[test]
fn frobenius_strategies_agree() {
    let t = tuple(&[10, 15, 21]);
    let mut m = GfMethod::BruteForce;
    unsafe {
        for (strategy, method) in [
            (GfStrategy::Brute, GfMethod::BruteForce),
            (GfStrategy::Closed, GfMethod::Theorem1),
            (GfStrategy::Auto, GfMethod::Theorem1),
        ] {
            let mut g = 0;
            assert_eq!(gf_gen_frobenius(t, 4, strategy, &mut g, &mut m), GfStatus::Ok);
            assert_eq!((g, m), (194, method));
        }
        let mut g = 0;
        assert_eq!(gf_gen_frobenius(t, 4, GfStrategy::Auto, &mut g, ptr::null_mut()), GfStatus::Ok);
        assert_eq!(g, 194);
        gf_tuple_free(t);
    }
}

#[test]
fn frobenius_errors() {
    let t = tuple(&[16, 23, 37]);
    let nc = tuple(&[4, 6]);
    let mut g = 0;
    unsafe {
        assert_eq!(gf_gen_frobenius(nc, 0, GfStrategy::Auto, &mut g, ptr::null_mut()), GfStatus::NotCoprime);
        assert!(last_error().contains("common divisor"));
        assert_eq!(gf_gen_frobenius(t, 0, GfStrategy::Closed, &mut g, ptr::null_mut()), GfStatus::NoApplicableCase);
        assert_eq!(gf_gen_frobenius_two(3, 5, -1, &mut g), GfStatus::Ok);
        assert_eq!(g, -2);
        assert_eq!(gf_gen_frobenius_two(3, 5, 2, &mut g), GfStatus::Ok);
        assert_eq!(g, 37);
        assert_eq!(gf_gen_frobenius_two(3, 6, 0, &mut g), GfStatus::NotCoprime);
        assert_eq!(gf_gen_frobenius_two(i64::MAX / 2, i64::MAX / 2 - 1, 3, &mut g), GfStatus::Overflow);
        gf_tuple_free(t);
        gf_tuple_free(nc);
    }
}

#[test]
fn reduce_strategy() {
    let t = tuple(&[4, 6, 7]);
    let (mut g, mut brute) = (0, 0);
    let mut m = GfMethod::BruteForce;
    unsafe {
        assert_eq!(gf_gen_frobenius(t, 2, GfStrategy::Reduce, &mut g, &mut m), GfStatus::Ok);
        assert_eq!(m, GfMethod::GcdReduction);
        assert_eq!(gf_gen_frobenius(t, 2, GfStrategy::Brute, &mut brute, ptr::null_mut()), GfStatus::Ok);
        gf_tuple_free(t);
    }
    assert_eq!(g, brute);
}

#[test]
fn closed_form_cases() {
    let t = tuple(&[1, 4, 9]);
    let mut cases = ptr::null_mut();
    let (mut pivot, mut d, mut sigma, mut g) = (0usize, 0i64, 0u64, 0i64);
    unsafe {
        assert_eq!(gf_cases_detect(t, &mut cases), GfStatus::Ok);
        assert_eq!(gf_cases_len(cases), 2);
        assert_eq!(gf_cases_info(cases, 0, &mut pivot, &mut d), GfStatus::Ok);
        assert_eq!((pivot, d), (2, 1));
        assert_eq!(gf_cases_row(cases, 0, 2, &mut sigma, &mut g), GfStatus::Ok);
        assert_eq!((sigma, g), (8, 17));
        assert_eq!(gf_cases_info(cases, 2, &mut pivot, &mut d), GfStatus::OutOfRange);
        gf_cases_free(cases);

        let pair = tuple(&[3, 5]);
        assert_eq!(gf_cases_detect(pair, &mut cases), GfStatus::WrongArity);
        gf_tuple_free(pair);

        let none = tuple(&[16, 23, 37]);
        assert_eq!(gf_cases_detect(none, &mut cases), GfStatus::Ok);
        assert_eq!(gf_cases_len(cases), 0);
        gf_cases_free(cases);
        gf_tuple_free(none);
        gf_tuple_free(t);
    }
}

#[test]
fn version_is_stable() {
    assert_eq!(gf_version(), 100);
}
