//! C interface to the weak Hopf algebra engine.
//!
//! Algebras live behind an opaque `WhaAlgebra` handle. Every call returns a
//! `WhaStatus`; on failure `wha_last_error` describes what went wrong on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use weak_hopf::cli::exit_code;
use weak_hopf::integrals::{is_unimodular, left_integrals, right_integrals};
use weak_hopf::nakayama::nakayama_bimodule;
use weak_hopf::wha::verify_all;
use weak_hopf::{catalog, io, Error, Field, WeakHopfAlgebra};

/// Opaque handle to a loaded algebra.
pub struct WhaAlgebra(WeakHopfAlgebra);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WhaStatus {
    Ok = 0,
    /// The requested check ran and did not hold.
    CheckFailed = 1,
    /// Bad input: unreadable file, parse error, unknown name or field.
    InputError = 2,
    NullArgument = 3,
    /// A computation could not be completed or panicked.
    InternalError = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn from_error(e: &Error) -> WhaStatus {
    set_error(e.to_string());
    match exit_code(e) {
        2 => WhaStatus::InputError,
        _ => WhaStatus::InternalError,
    }
}

fn guard(f: impl FnOnce() -> WhaStatus) -> WhaStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            WhaStatus::InternalError
        }
    }
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn text<'a>(p: *const c_char) -> Result<Option<&'a str>, WhaStatus> {
    if p.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(p).to_str().map(Some).map_err(|_| {
        set_error("argument is not valid UTF-8");
        WhaStatus::InputError
    })
}

fn publish(out: *mut *mut WhaAlgebra, r: weak_hopf::Result<WeakHopfAlgebra>) -> WhaStatus {
    match r {
        Ok(h) => {
            unsafe { *out = Box::into_raw(Box::new(WhaAlgebra(h))) };
            WhaStatus::Ok
        }
        Err(e) => from_error(&e),
    }
}

/// Builds a catalog algebra such as `"sweedler"` or `"sum:kc2,pairgpd2"`.
/// `field` is `"Q"` or `"Fp:<p>"`; null means `"Q"`.
///
/// # Safety
/// `name` and `field` are null or NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wha_builtin(name: *const c_char, field: *const c_char, out: *mut *mut WhaAlgebra) -> WhaStatus {
    guard(|| {
        if out.is_null() {
            set_error("out is null");
            return WhaStatus::NullArgument;
        }
        let (name, field) = match (text(name), text(field)) {
            (Ok(Some(n)), Ok(f)) => (n, f),
            (Ok(None), _) => {
                set_error("name is null");
                return WhaStatus::NullArgument;
            }
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let field = match field.map(Field::parse).transpose() {
            Ok(f) => f.unwrap_or(Field::Rational),
            Err(e) => return from_error(&e),
        };
        publish(out, catalog::builtin(name, field))
    })
}

/// Loads a `.wha.json` file.
///
/// # Safety
/// `path` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wha_load(path: *const c_char, out: *mut *mut WhaAlgebra) -> WhaStatus {
    guard(|| match (text(path), out.is_null()) {
        (Ok(Some(p)), false) => publish(out, io::load(Path::new(p))),
        (Err(s), _) => s,
        _ => {
            set_error("null argument");
            WhaStatus::NullArgument
        }
    })
}

/// Parses the `.wha.json` format from memory.
///
/// # Safety
/// `json` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wha_from_json(json: *const c_char, out: *mut *mut WhaAlgebra) -> WhaStatus {
    guard(|| match (text(json), out.is_null()) {
        (Ok(Some(j)), false) => publish(out, io::from_json(j)),
        (Err(s), _) => s,
        _ => {
            set_error("null argument");
            WhaStatus::NullArgument
        }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `h` came from this library and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wha_free(h: *mut WhaAlgebra) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Dimension of the algebra, or 0 for null.
///
/// # Safety
/// `h` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wha_dim(h: *const WhaAlgebra) -> usize {
    h.as_ref().map_or(0, |h| h.0.dim())
}

fn with_algebra(h: *const WhaAlgebra, f: impl FnOnce(&WeakHopfAlgebra) -> WhaStatus) -> WhaStatus {
    guard(|| match unsafe { h.as_ref() } {
        Some(h) => f(&h.0),
        None => {
            set_error("handle is null");
            WhaStatus::NullArgument
        }
    })
}

/// Runs every axiom suite. Returns `WHA_STATUS_CHECK_FAILED` and names the
/// failing axioms in `wha_last_error` when some do not hold.
///
/// # Safety
/// `h` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn wha_verify(h: *const WhaAlgebra) -> WhaStatus {
    with_algebra(h, |h| {
        let r = verify_all(h);
        if r.passed {
            WhaStatus::Ok
        } else {
            set_error(format!("failed axioms: {}", r.failed_sections().join(", ")));
            WhaStatus::CheckFailed
        }
    })
}

/// Dimensions of the left and right integral spaces.
///
/// # Safety
/// `h` is a live handle; `left` and `right` are writable.
#[no_mangle]
pub unsafe extern "C" fn wha_integral_dims(h: *const WhaAlgebra, left: *mut usize, right: *mut usize) -> WhaStatus {
    if left.is_null() || right.is_null() {
        set_error("output pointer is null");
        return WhaStatus::NullArgument;
    }
    with_algebra(h, |h| match (left_integrals(h), right_integrals(h)) {
        (Ok(l), Ok(r)) => {
            *left = l.dim();
            *right = r.dim();
            WhaStatus::Ok
        }
        (Err(e), _) | (_, Err(e)) => from_error(&e),
    })
}

/// Writes whether left integrals are isomorphic to the source counital subalgebra.
///
/// # Safety
/// `h` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wha_is_unimodular(h: *const WhaAlgebra, out: *mut bool) -> WhaStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return WhaStatus::NullArgument;
    }
    with_algebra(h, |h| match is_unimodular(h) {
        Ok(u) => {
            *out = u;
            WhaStatus::Ok
        }
        Err(e) => from_error(&e),
    })
}

/// Computes the Nakayama bimodule, refusing algebras above `max_dim`, and
/// checks its invertibility and integral description. Writes its dimension
/// to `dim` when non-null.
///
/// # Safety
/// `h` is a live handle; `dim` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn wha_nakayama(h: *const WhaAlgebra, max_dim: usize, dim: *mut usize) -> WhaStatus {
    with_algebra(h, |h| match nakayama_bimodule(h, max_dim) {
        Ok(r) => {
            if !dim.is_null() {
                *dim = r.dim;
            }
            if r.report.passed {
                WhaStatus::Ok
            } else {
                set_error(format!("failed: {}", r.report.failed_sections().join(", ")));
                WhaStatus::CheckFailed
            }
        }
        Err(e) => from_error(&e),
    })
}

/// Serializes to the `.wha.json` format. Free the result with `wha_string_free`.
///
/// # Safety
/// `h` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wha_to_json(h: *const WhaAlgebra, out: *mut *mut c_char) -> WhaStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return WhaStatus::NullArgument;
    }
    with_algebra(h, |h| match CString::new(io::to_json(h)) {
        Ok(s) => {
            *out = s.into_raw();
            WhaStatus::Ok
        }
        Err(_) => {
            set_error("embedded NUL");
            WhaStatus::InternalError
        }
    })
}

/// # Safety
/// `s` is null or came from this library.
#[no_mangle]
pub unsafe extern "C" fn wha_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn wha_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    fn last() -> String {
        let p = wha_last_error();
        assert!(!p.is_null());
        unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
    }

    #[test]
    fn sweedler_through_handles() {
        let mut h = ptr::null_mut();
        unsafe {
            assert_eq!(wha_builtin(c("sweedler").as_ptr(), ptr::null(), &mut h), WhaStatus::Ok);
            assert_eq!(wha_dim(h), 4);
            assert_eq!(wha_verify(h), WhaStatus::Ok);
            let (mut l, mut r) = (0, 0);
            assert_eq!(wha_integral_dims(h, &mut l, &mut r), WhaStatus::Ok);
            assert_eq!((l, r), (1, 1));
            let mut u = true;
            assert_eq!(wha_is_unimodular(h, &mut u), WhaStatus::Ok);
            assert!(!u);
            let mut d = 0;
            assert_eq!(wha_nakayama(h, 8, &mut d), WhaStatus::Ok);
            assert_eq!(d, 4);
            wha_free(h);
        }
    }

    #[test]
    fn errors_are_reported() {
        let mut h = ptr::null_mut();
        unsafe {
            assert_eq!(wha_builtin(c("nope").as_ptr(), ptr::null(), &mut h), WhaStatus::InputError);
            assert!(last().contains("nope"));
            assert_eq!(wha_builtin(c("kc2").as_ptr(), c("Fp:4").as_ptr(), &mut h), WhaStatus::InputError);
            assert_eq!(wha_verify(ptr::null()), WhaStatus::NullArgument);
            assert_eq!(wha_from_json(c("{").as_ptr(), &mut h), WhaStatus::InputError);
            assert!(last().contains("line"));
            assert!(h.is_null());
            wha_free(ptr::null_mut());
        }
    }

    #[test]
    fn cap_is_an_input_error() {
        let mut h = ptr::null_mut();
        unsafe {
            assert_eq!(wha_builtin(c("pairgpd3").as_ptr(), c("Q").as_ptr(), &mut h), WhaStatus::Ok);
            assert_eq!(wha_nakayama(h, 8, ptr::null_mut()), WhaStatus::InputError);
            assert!(last().contains("cap"));
            wha_free(h);
        }
    }
}
