//! C ABI for the qtop workbench.
//!
//! Spaces are opaque handles created from JSON or a builtin name and freed
//! with `qtop_space_free`. Reports come back as JSON strings owned by the
//! library; free them with `qtop_string_free`. Every fallible call returns a
//! status code; `qtop_last_error_message` returns the detail text of the most
//! recent failure on the calling thread.

use libc::c_char;
use qtop::error::Error;
use qtop::finspace::{FinSpace, DEFAULT_SIZE_LIMIT};
use std::cell::RefCell;
use std::ffi::{CStr, CString};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QtopStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    NotATopology = 3,
    NotAPreorder = 4,
    InvalidPartition = 5,
    InvalidMap = 6,
    NotSurjective = 7,
    NotContinuous = 8,
    NotQuotient = 9,
    SizeLimit = 10,
    AlphabetMismatch = 11,
    CarrierMismatch = 12,
    BaseMismatch = 13,
    InvalidCover = 14,
    UnknownName = 15,
    InvalidInput = 16,
}

/// Separation verdicts of a finite space.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QtopSeparation {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub discrete: bool,
    pub indiscrete: bool,
    pub h_prime: bool,
}

/// Opaque handle to a finite topological space.
pub struct QtopSpace {
    inner: FinSpace,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(detail: &str) {
    let sanitized = detail.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).ok();
    });
}

fn status_of(e: &Error) -> QtopStatus {
    match e {
        Error::NotATopology(_) => QtopStatus::NotATopology,
        Error::NotAPreorder(_) => QtopStatus::NotAPreorder,
        Error::InvalidPartition(_) => QtopStatus::InvalidPartition,
        Error::InvalidMap(_) => QtopStatus::InvalidMap,
        Error::NotSurjective => QtopStatus::NotSurjective,
        Error::NotContinuous => QtopStatus::NotContinuous,
        Error::NotQuotient => QtopStatus::NotQuotient,
        Error::SizeLimit { .. } => QtopStatus::SizeLimit,
        Error::AlphabetMismatch => QtopStatus::AlphabetMismatch,
        Error::CarrierMismatch(_) => QtopStatus::CarrierMismatch,
        Error::BaseMismatch => QtopStatus::BaseMismatch,
        Error::InvalidCover(_) => QtopStatus::InvalidCover,
        Error::UnknownName(_) => QtopStatus::UnknownName,
        Error::InvalidInput(_) => QtopStatus::InvalidInput,
    }
}

fn fail(e: Error) -> QtopStatus {
    set_last_error(&e.to_string());
    status_of(&e)
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Result<&'a str, QtopStatus> {
    if ptr.is_null() {
        set_last_error("null string argument");
        return Err(QtopStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_last_error("argument is not valid UTF-8");
        QtopStatus::InvalidUtf8
    })
}

fn give_string(s: String, out: *mut *mut c_char) -> QtopStatus {
    let c = match CString::new(s.replace('\0', " ")) {
        Ok(c) => c,
        Err(_) => {
            set_last_error("report contained an interior NUL");
            return QtopStatus::InvalidInput;
        }
    };
    unsafe { *out = c.into_raw() };
    QtopStatus::Ok
}

fn effective_limit(size_limit: usize) -> usize {
    if size_limit == 0 {
        DEFAULT_SIZE_LIMIT
    } else {
        size_limit
    }
}

/// Library version as a newly allocated string; free with `qtop_string_free`.
#[no_mangle]
pub extern "C" fn qtop_version() -> *mut c_char {
    CString::new(env!("CARGO_PKG_VERSION")).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Detail text of the most recent error on this thread, as a newly allocated
/// string (empty if none); free with `qtop_string_free`.
#[no_mangle]
pub extern "C" fn qtop_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        let borrowed = slot.borrow();
        let text = borrowed
            .as_ref()
            .map(|c| c.to_string_lossy().into_owned())
            .unwrap_or_default();
        CString::new(text).map_or(std::ptr::null_mut(), CString::into_raw)
    })
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must have been returned by a function of this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn qtop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a space from JSON (`{"labels": [...], "opens": [[...]]}` or
/// `{"labels": [...], "upset": [[...]]}`).
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn qtop_space_from_json(
    json: *const c_char,
    out: *mut *mut QtopSpace,
) -> QtopStatus {
    if out.is_null() {
        set_last_error("null output argument");
        return QtopStatus::NullArgument;
    }
    let text = match read_utf8(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match qtop::report::parse_space(text) {
        Ok(space) => {
            *out = Box::into_raw(Box::new(QtopSpace { inner: space }));
            QtopStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Builds a builtin space by name, e.g. `sierpinski` or `discrete(3)`.
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `out` must be valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn qtop_space_builtin(
    name: *const c_char,
    out: *mut *mut QtopSpace,
) -> QtopStatus {
    if out.is_null() {
        set_last_error("null output argument");
        return QtopStatus::NullArgument;
    }
    let text = match read_utf8(name) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match qtop::catalog::builtin(text) {
        Ok(space) => {
            *out = Box::into_raw(Box::new(QtopSpace { inner: space }));
            QtopStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Frees a space handle. NULL is ignored.
///
/// # Safety
/// `space` must have been returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtop_space_free(space: *mut QtopSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of points; 0 for NULL.
///
/// # Safety
/// `space` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn qtop_space_point_count(space: *const QtopSpace) -> usize {
    space.as_ref().map_or(0, |s| s.inner.point_count())
}

/// Serializes a space to its canonical JSON (labels plus upset matrix).
///
/// # Safety
/// `space` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qtop_space_to_json(
    space: *const QtopSpace,
    out: *mut *mut c_char,
) -> QtopStatus {
    let Some(space) = space.as_ref() else {
        set_last_error("null space argument");
        return QtopStatus::NullArgument;
    };
    if out.is_null() {
        set_last_error("null output argument");
        return QtopStatus::NullArgument;
    }
    give_string(qtop::report::space_json_string(&space.inner), out)
}

/// Separation verdicts of the space.
///
/// # Safety
/// `space` must be a live handle; `out` must be valid for a struct write.
#[no_mangle]
pub unsafe extern "C" fn qtop_space_separation(
    space: *const QtopSpace,
    out: *mut QtopSeparation,
) -> QtopStatus {
    let Some(space) = space.as_ref() else {
        set_last_error("null space argument");
        return QtopStatus::NullArgument;
    };
    if out.is_null() {
        set_last_error("null output argument");
        return QtopStatus::NullArgument;
    }
    let sep = space.inner.separation();
    *out = QtopSeparation {
        t0: sep.t0,
        t1: sep.t1,
        hausdorff: sep.hausdorff,
        discrete: sep.discrete,
        indiscrete: sep.indiscrete,
        h_prime: sep.h_prime,
    };
    QtopStatus::Ok
}

unsafe fn report_call(
    space: *const QtopSpace,
    out: *mut *mut c_char,
    body: impl FnOnce(&FinSpace) -> Result<String, Error>,
) -> QtopStatus {
    let Some(space) = space.as_ref() else {
        set_last_error("null space argument");
        return QtopStatus::NullArgument;
    };
    if out.is_null() {
        set_last_error("null output argument");
        return QtopStatus::NullArgument;
    }
    match body(&space.inner) {
        Ok(s) => give_string(s, out),
        Err(e) => fail(e),
    }
}

/// Full refined-route report as JSON (`size_limit` 0 means the default).
///
/// # Safety
/// `space` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qtop_analyze_json(
    space: *const QtopSpace,
    level: usize,
    size_limit: usize,
    out: *mut *mut c_char,
) -> QtopStatus {
    report_call(space, out, |s| {
        let rep = qtop::suspension::analyze(s, level, effective_limit(size_limit))?;
        Ok(qtop::report::suspension_json_string(&rep))
    })
}

/// Reduction-route report as JSON, interpreting the space as a
/// path-component space (`size_limit` 0 means the default).
///
/// # Safety
/// `space` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qtop_analyze_direct_json(
    space: *const QtopSpace,
    level: usize,
    size_limit: usize,
    out: *mut *mut c_char,
) -> QtopStatus {
    report_call(space, out, |s| {
        let rep = qtop::suspension::analyze_direct(s, level, effective_limit(size_limit))?;
        Ok(qtop::report::suspension_json_string(&rep))
    })
}

/// The reduction-topology group at one level, as JSON with carrier words,
/// minimal-open basis and witnesses (`size_limit` 0 means the default).
///
/// # Safety
/// `space` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qtop_fr_group_json(
    space: *const QtopSpace,
    level: usize,
    size_limit: usize,
    out: *mut *mut c_char,
) -> QtopStatus {
    report_call(space, out, |s| {
        let g = qtop::freetop::build_reduced_group(s, level, effective_limit(size_limit))?;
        Ok(qtop::report::group_json_string(&g))
    })
}

/// Quotient powers of the component projection and the exchange verdict,
/// as JSON (`size_limit` 0 means the default).
///
/// # Safety
/// `space` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qtop_check_powers_json(
    space: *const QtopSpace,
    level: usize,
    size_limit: usize,
    out: *mut *mut c_char,
) -> QtopStatus {
    report_call(space, out, |s| {
        qtop::report::powers_json_string(s, level, effective_limit(size_limit))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take_string(ptr: *mut c_char) -> String {
        assert!(!ptr.is_null());
        let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
        qtop_string_free(ptr);
        s
    }

    #[test]
    fn builtin_roundtrip_and_separation() {
        unsafe {
            let mut space: *mut QtopSpace = ptr::null_mut();
            let status = qtop_space_builtin(cstr("sierpinski").as_ptr(), &mut space);
            assert_eq!(status, QtopStatus::Ok);
            assert_eq!(qtop_space_point_count(space), 2);

            let mut sep = QtopSeparation {
                t0: false,
                t1: false,
                hausdorff: false,
                discrete: false,
                indiscrete: false,
                h_prime: false,
            };
            assert_eq!(qtop_space_separation(space, &mut sep), QtopStatus::Ok);
            assert!(sep.t0 && !sep.t1 && !sep.h_prime);

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(qtop_space_to_json(space, &mut json), QtopStatus::Ok);
            let text = take_string(json);
            assert!(text.contains("\"labels\""));

            let mut rebuilt: *mut QtopSpace = ptr::null_mut();
            assert_eq!(
                qtop_space_from_json(cstr(&text).as_ptr(), &mut rebuilt),
                QtopStatus::Ok
            );
            assert_eq!(qtop_space_point_count(rebuilt), 2);
            qtop_space_free(rebuilt);
            qtop_space_free(space);
        }
    }

    #[test]
    fn error_paths() {
        unsafe {
            let mut space: *mut QtopSpace = ptr::null_mut();
            assert_eq!(
                qtop_space_builtin(cstr("no_such_space").as_ptr(), &mut space),
                QtopStatus::UnknownName
            );
            let msg = take_string(qtop_last_error_message());
            assert!(msg.contains("no_such_space"));

            assert_eq!(
                qtop_space_builtin(ptr::null(), &mut space),
                QtopStatus::NullArgument
            );

            let bad = cstr("{\"labels\": [\"a\"], \"opens\": [[0]]}");
            assert_eq!(
                qtop_space_from_json(bad.as_ptr(), &mut space),
                QtopStatus::NotATopology
            );

            // Size limit surfaces as its own status.
            assert_eq!(
                qtop_space_builtin(cstr("sierpinski").as_ptr(), &mut space),
                QtopStatus::Ok
            );
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(
                qtop_fr_group_json(space, 3, 5, &mut json),
                QtopStatus::SizeLimit
            );
            qtop_space_free(space);
        }
    }

    #[test]
    fn reports_are_json() {
        unsafe {
            let mut space: *mut QtopSpace = ptr::null_mut();
            assert_eq!(
                qtop_space_builtin(cstr("discrete(2)").as_ptr(), &mut space),
                QtopStatus::Ok
            );
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(qtop_analyze_json(space, 2, 0, &mut json), QtopStatus::Ok);
            let text = take_string(json);
            assert!(text.contains("\"rank\": 2"));
            assert!(text.contains("\"discrete\": true"));

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(
                qtop_analyze_direct_json(space, 2, 0, &mut json),
                QtopStatus::Ok
            );
            let text = take_string(json);
            assert!(text.contains("\"route\": \"reduction\""));

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(qtop_fr_group_json(space, 2, 0, &mut json), QtopStatus::Ok);
            let text = take_string(json);
            assert!(text.contains("\"t1\": true"));

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(
                qtop_check_powers_json(space, 2, 0, &mut json),
                QtopStatus::Ok
            );
            let text = take_string(json);
            assert!(text.contains("\"psi_iso\": true"));

            let version = take_string(qtop_version());
            assert!(!version.is_empty());

            qtop_space_free(space);
        }
    }
}
