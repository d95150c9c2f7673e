use std::ffi::{CStr, CString};
use std::ptr;

use ratsode_ffi::*;

fn problems_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/problems")
}

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    ratsode_string_free(s);
    out
}

#[test]
fn solve_example_two_from_file() {
    let path = CString::new(problems_dir().join("example2.txt").to_str().unwrap()).unwrap();
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ratsode_problem_load(path.as_ptr(), &mut p), RatsodeError::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(ratsode_solve(p, true, &mut r), RatsodeError::Ok);
        assert_eq!(ratsode_result_status(r), RatsodeStatus::Solved);
        assert!(ratsode_result_verified(r));
        let mut g = -1;
        assert!(ratsode_result_genus(r, &mut g));
        assert_eq!(g, 0);
        let sol = take_string(ratsode_result_solution(r));
        assert!(sol.contains("lambda"));
        let json: serde_json::Value = serde_json::from_str(&take_string(ratsode_result_json(r))).unwrap();
        assert_eq!(json["status"], "solved");
        ratsode_result_free(r);
        ratsode_problem_free(p);
    }
}

#[test]
fn parse_and_skip_verification() {
    let text = CString::new("equation: wp + w^2 - 2/z^2\n").unwrap();
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ratsode_problem_parse(text.as_ptr(), &mut p), RatsodeError::Ok);
        assert_eq!(ratsode_problem_set_samples(p, 3), RatsodeError::Ok);
        assert_eq!(ratsode_problem_set_seed(p, 9), RatsodeError::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(ratsode_solve(p, false, &mut r), RatsodeError::Ok);
        assert_eq!(ratsode_result_status(r), RatsodeStatus::Inconclusive);
        assert!(!ratsode_result_verified(r));
        ratsode_result_free(r);
        ratsode_problem_free(p);
    }
}

#[test]
fn rejected_equation_has_no_solution_string() {
    let path = CString::new(problems_dir().join("elliptic.txt").to_str().unwrap()).unwrap();
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ratsode_problem_load(path.as_ptr(), &mut p), RatsodeError::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(ratsode_solve(p, true, &mut r), RatsodeError::Ok);
        assert_eq!(ratsode_result_status(r), RatsodeStatus::NoRationalGeneralSolution);
        assert!(ratsode_result_solution(r).is_null());
        ratsode_result_free(r);
        ratsode_problem_free(p);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut p = ptr::null_mut();
        let bad = CString::new("equation: w +* z\n").unwrap();
        assert_eq!(ratsode_problem_parse(bad.as_ptr(), &mut p), RatsodeError::Parse);
        assert!(p.is_null());
        assert!(!CStr::from_ptr(ratsode_last_error()).to_bytes().is_empty());

        let missing = CString::new("/nonexistent/problem.txt").unwrap();
        assert_eq!(ratsode_problem_load(missing.as_ptr(), &mut p), RatsodeError::Io);

        let invalid = [0xffu8, 0xfe, 0];
        assert_eq!(ratsode_problem_parse(invalid.as_ptr().cast(), &mut p), RatsodeError::InvalidUtf8);

        let ok = CString::new("equation: wp - 1\n").unwrap();
        assert_eq!(ratsode_problem_parse(ok.as_ptr(), ptr::null_mut()), RatsodeError::NullPointer);
        assert_eq!(ratsode_problem_parse(ok.as_ptr(), &mut p), RatsodeError::Ok);
        assert_eq!(ratsode_problem_set_samples(p, 0), RatsodeError::InvalidArgument);
        assert_eq!(ratsode_solve(ptr::null(), true, &mut ptr::null_mut()), RatsodeError::NullPointer);
        assert_eq!(ratsode_solve(p, true, ptr::null_mut()), RatsodeError::NullPointer);
        ratsode_problem_free(p);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/ratsode.h")).unwrap();
    for f in [
        "ratsode_last_error",
        "ratsode_problem_parse",
        "ratsode_problem_load",
        "ratsode_problem_set_samples",
        "ratsode_problem_set_seed",
        "ratsode_problem_free",
        "ratsode_solve",
        "ratsode_result_status",
        "ratsode_result_verified",
        "ratsode_result_genus",
        "ratsode_result_solution",
        "ratsode_result_json",
        "ratsode_result_free",
        "ratsode_string_free",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct RatsodeProblem RatsodeProblem;"));
    assert!(header.contains("RATSODE_STATUS_RESOURCE_CAP = 4"));
}
