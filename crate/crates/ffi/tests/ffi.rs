use std::ffi::{CStr, CString};
use std::ptr;

use permod_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn builtin(name: &str) -> *mut PermodModel {
    let mut m = ptr::null_mut();
    let status = unsafe { permod_model_builtin(cstr(name).as_ptr(), &mut m) };
    assert_eq!(status, PermodStatus::Ok);
    m
}

fn last_error() -> String {
    let p = permod_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn builtin_model_verifies() {
    let m = builtin("fibonacci");
    let (mut p, mut h) = (1.0, 1.0);
    unsafe {
        assert_eq!(permod_model_num_labels(m), 2);
        assert_eq!(permod_model_verify(m, &mut p, &mut h), PermodStatus::Ok);
        permod_model_free(m);
    }
    assert!(p < 1e-9 && h < 1e-9);
    assert!(permod_last_error().is_null());
}

#[test]
fn unknown_builtin_sets_error() {
    let mut m = ptr::null_mut();
    let status = unsafe { permod_model_builtin(cstr("nope").as_ptr(), &mut m) };
    assert_eq!(status, PermodStatus::InvalidArgument);
    assert!(m.is_null());
    assert!(last_error().contains("nope"));
}

#[test]
fn null_arguments_are_rejected() {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { permod_model_builtin(ptr::null(), &mut m) }, PermodStatus::NullPointer);
    let mut r = 0.0;
    assert_eq!(
        unsafe { permod_gamma_check(ptr::null(), ptr::null(), ptr::null(), 0, 0, &mut r) },
        PermodStatus::NullPointer
    );
    unsafe {
        permod_model_free(ptr::null_mut());
        permod_action_free(ptr::null_mut());
        assert_eq!(permod_model_num_labels(ptr::null()), 0);
    }
}

#[test]
fn malformed_json_is_a_parse_error() {
    let mut m = ptr::null_mut();
    let status = unsafe { permod_model_from_json(cstr("{").as_ptr(), true, &mut m) };
    assert_eq!(status, PermodStatus::Parse);
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { permod_action_from_json(cstr("[]").as_ptr(), &mut a) }, PermodStatus::Parse);
}

#[test]
fn action_elements_and_pentagon() {
    let m = builtin("ising");
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(permod_action_resolve(cstr("cyclic:3").as_ptr(), &mut a), PermodStatus::Ok);
        assert_eq!(permod_action_size(a), 3);
        let mut images = [0usize; 3];
        assert_eq!(permod_action_element(a, cstr("r").as_ptr(), images.as_mut_ptr()), PermodStatus::Ok);
        assert_eq!(images, [1, 2, 0]);
        assert_eq!(permod_action_element(a, cstr("q").as_ptr(), images.as_mut_ptr()), PermodStatus::Group);

        let (x, m_labels) = ([1usize, 1, 1], [1usize]);
        let mut r = 1.0;
        let status = permod_pentagon_check(
            m, a, cstr("r").as_ptr(), x.as_ptr(), x.as_ptr(), x.as_ptr(), 3, m_labels.as_ptr(), 1, &mut r,
        );
        assert_eq!(status, PermodStatus::Ok);
        assert!(r < 1e-9, "{r}");
        let status = permod_pentagon_check(
            m, a, cstr("r").as_ptr(), x.as_ptr(), x.as_ptr(), x.as_ptr(), 2, m_labels.as_ptr(), 1, &mut r,
        );
        assert_eq!(status, PermodStatus::InvalidArgument);
        permod_action_free(a);
        permod_model_free(m);
    }
}

#[test]
fn gamma_induction_and_zmatrix() {
    let m = builtin("fibonacci");
    let (u, v) = ([1usize, 0, 1], [1usize, 1, 0]);
    let (mut l, mut r, mut s, mut t) = (1.0, 1.0, 1.0, 1.0);
    unsafe {
        assert_eq!(permod_gamma_check(m, u.as_ptr(), v.as_ptr(), 2, 1, &mut r), PermodStatus::Ok);
        assert!(r < 1e-9);
        assert_eq!(permod_induction_check(m, u.as_ptr(), v.as_ptr(), 3, 1, &mut l, &mut r), PermodStatus::Ok);
        assert!(l < 1e-9 && r < 1e-9);
        let swap = [1usize, 0];
        assert_eq!(permod_zmatrix_check(m, swap.as_ptr(), 2, &mut s, &mut t), PermodStatus::Ok);
        assert!(s < 1e-9 && t < 1e-9);
        let bad = [0usize, 0];
        assert_eq!(permod_zmatrix_check(m, bad.as_ptr(), 2, &mut s, &mut t), PermodStatus::Group);
        permod_model_free(m);
    }
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/permod.h")).unwrap();
    for name in ["PERMOD_H", "permod_model_builtin", "permod_zmatrix_check", "PERMOD_STATUS_OK", "permod_last_error"] {
        assert!(header.contains(name), "missing {name}");
    }
}
