//! C interface to the ratsode solver.
//!
//! Problems and results are opaque handles owned by the caller and released
//! with the matching `_free` function. Fallible calls return a
//! [`RatsodeError`]; the message for the most recent failure on the calling
//! thread is available from [`ratsode_last_error`]. Strings returned by the
//! library are released with [`ratsode_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ratsode::expr::{load_problem, render, Problem};
use ratsode::pipeline::{solve_with, PipelineResult, SolveOptions, Status};

/// Return code of fallible calls.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatsodeError {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Parse = 4,
    InvalidArgument = 5,
    Panic = 6,
}

/// Outcome of a solve; the values match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatsodeStatus {
    Solved = 0,
    NoRationalGeneralSolution = 1,
    Inconclusive = 2,
    Error = 3,
    ResourceCap = 4,
}

pub struct RatsodeProblem {
    problem: Problem,
}

pub struct RatsodeResult {
    result: PipelineResult,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(code: RatsodeError, msg: impl Into<String>) -> RatsodeError {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    code
}

fn guarded(f: impl FnOnce() -> RatsodeError) -> RatsodeError {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| set_error(RatsodeError::Panic, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, RatsodeError> {
    if s.is_null() {
        return Err(set_error(RatsodeError::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| set_error(RatsodeError::InvalidUtf8, "argument is not valid UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

unsafe fn store_problem(out: *mut *mut RatsodeProblem, parsed: Result<Problem, ratsode::expr::ProblemError>) -> RatsodeError {
    match parsed {
        Ok(problem) => {
            *out = Box::into_raw(Box::new(RatsodeProblem { problem }));
            RatsodeError::Ok
        }
        Err(e @ ratsode::expr::ProblemError::Io(_)) => set_error(RatsodeError::Io, e.to_string()),
        Err(e) => set_error(RatsodeError::Parse, e.to_string()),
    }
}

/// Message describing the last failed call on this thread. Owned by the
/// library and valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ratsode_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a problem from the text of a problem file.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ratsode_problem_parse(text: *const c_char, out: *mut *mut RatsodeProblem) -> RatsodeError {
    guarded(|| {
        if out.is_null() {
            return set_error(RatsodeError::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(e) => return e,
        };
        store_problem(out, Problem::parse(text))
    })
}

/// Reads and parses a problem file.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ratsode_problem_load(path: *const c_char, out: *mut *mut RatsodeProblem) -> RatsodeError {
    guarded(|| {
        if out.is_null() {
            return set_error(RatsodeError::NullPointer, "null output pointer");
        }
        let path = match read_str(path) {
            Ok(p) => p,
            Err(e) => return e,
        };
        store_problem(out, load_problem(path))
    })
}

/// # Safety
/// `p` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ratsode_problem_set_samples(p: *mut RatsodeProblem, samples: usize) -> RatsodeError {
    let Some(p) = p.as_mut() else {
        return set_error(RatsodeError::NullPointer, "null problem");
    };
    if samples == 0 {
        return set_error(RatsodeError::InvalidArgument, "samples must be positive");
    }
    p.problem.samples = samples;
    RatsodeError::Ok
}

/// # Safety
/// `p` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ratsode_problem_set_seed(p: *mut RatsodeProblem, seed: u64) -> RatsodeError {
    let Some(p) = p.as_mut() else {
        return set_error(RatsodeError::NullPointer, "null problem");
    };
    p.problem.seed = seed;
    RatsodeError::Ok
}

/// # Safety
/// `p` must be a handle from this library or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ratsode_problem_free(p: *mut RatsodeProblem) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Runs the solver. With `verify` false the family is not checked against
/// the equation and the status is at best inconclusive.
///
/// # Safety
/// `p` must be a handle from this library and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ratsode_solve(p: *const RatsodeProblem, verify: bool, out: *mut *mut RatsodeResult) -> RatsodeError {
    guarded(|| {
        let Some(p) = p.as_ref() else {
            return set_error(RatsodeError::NullPointer, "null problem");
        };
        if out.is_null() {
            return set_error(RatsodeError::NullPointer, "null output pointer");
        }
        let opts = SolveOptions { no_verify: !verify, ..SolveOptions::from_problem(&p.problem) };
        let result = solve_with(&p.problem, opts);
        *out = Box::into_raw(Box::new(RatsodeResult { result }));
        RatsodeError::Ok
    })
}

/// # Safety
/// `r` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ratsode_result_status(r: *const RatsodeResult) -> RatsodeStatus {
    let Some(r) = r.as_ref() else {
        return RatsodeStatus::Error;
    };
    match r.result.status {
        Status::Solved => RatsodeStatus::Solved,
        Status::NoRationalGeneralSolution => RatsodeStatus::NoRationalGeneralSolution,
        Status::Inconclusive if r.result.resource_cap => RatsodeStatus::ResourceCap,
        Status::Inconclusive => RatsodeStatus::Inconclusive,
        Status::Error => RatsodeStatus::Error,
    }
}

/// # Safety
/// `r` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ratsode_result_verified(r: *const RatsodeResult) -> bool {
    r.as_ref().is_some_and(|r| r.result.verified)
}

/// Writes the genus consensus to `out`; false when there is none.
///
/// # Safety
/// `r` must be a handle from this library or null, `out` valid or null.
#[no_mangle]
pub unsafe extern "C" fn ratsode_result_genus(r: *const RatsodeResult, out: *mut i64) -> bool {
    let Some(g) = r.as_ref().and_then(|r| r.result.genus.as_ref()).and_then(|g| g.genus()) else {
        return false;
    };
    if let Some(out) = out.as_mut() {
        *out = g as i64;
    }
    true
}

/// The family `w(z, lambda)` in input syntax, or null. Free with
/// [`ratsode_string_free`].
///
/// # Safety
/// `r` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ratsode_result_solution(r: *const RatsodeResult) -> *mut c_char {
    match r.as_ref().and_then(|r| r.result.solution.as_ref()) {
        Some(s) => into_c_string(render(s.expr())),
        None => ptr::null_mut(),
    }
}

/// The JSON report. Free with [`ratsode_string_free`].
///
/// # Safety
/// `r` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ratsode_result_json(r: *const RatsodeResult) -> *mut c_char {
    match r.as_ref() {
        Some(r) => into_c_string(r.result.to_report().to_json()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `r` must be a handle from this library or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ratsode_result_free(r: *mut RatsodeResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `s` must be a string returned by this library or null.
#[no_mangle]
pub unsafe extern "C" fn ratsode_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
