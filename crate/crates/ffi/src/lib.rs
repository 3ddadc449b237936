//! C ABI for `contextuality-lab`.
//!
//! Multivectors cross the boundary as opaque `ClabMultivector` handles that
//! the caller releases with [`clab_multivector_free`]. Strings returned by the
//! library are owned by the caller and released with [`clab_string_free`].
//! Every fallible call returns a [`ClabStatus`]; the message of the most
//! recent failure on the calling thread is available from
//! [`clab_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use contextuality_lab::ga::{self, DynMultivector};
use contextuality_lab::identity_model::{find_identity_maps, SignedGenerator};
use contextuality_lab::verify::{self, Target, VerifyOptions};
use contextuality_lab::{chsh, Error, Mode};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    MixedMode = 5,
    /// `clab_verify` ran but at least one check failed.
    ChecksFailed = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClabMode {
    Exact = 0,
    Approx = 1,
}

impl From<ClabMode> for Mode {
    fn from(m: ClabMode) -> Self {
        match m {
            ClabMode::Exact => Mode::Exact,
            ClabMode::Approx => Mode::Approx,
        }
    }
}

/// Opaque multivector handle.
pub struct ClabMultivector(DynMultivector);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: ClabStatus, msg: impl Into<String>) -> ClabStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> ClabStatus {
    match e {
        Error::Parse(_) => ClabStatus::Parse,
        Error::MixedMode(..) => ClabStatus::MixedMode,
        _ => ClabStatus::InvalidArgument,
    }
}

fn from_lib(e: Error) -> ClabStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning a panic into [`ClabStatus::Panic`].
fn guard(f: impl FnOnce() -> ClabStatus) -> ClabStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(ClabStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, ClabStatus> {
    if p.is_null() {
        return Err(fail(ClabStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(ClabStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn handle<'a>(p: *const ClabMultivector) -> Result<&'a DynMultivector, ClabStatus> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| fail(ClabStatus::NullPointer, "null multivector handle"))
}

unsafe fn put<T>(out: *mut T, value: T) -> ClabStatus {
    if out.is_null() {
        return fail(ClabStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    ClabStatus::Ok
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> ClabStatus {
    match CString::new(s) {
        Ok(c) => put(out, c.into_raw()),
        Err(_) => fail(ClabStatus::Panic, "output contains a NUL byte"),
    }
}

unsafe fn put_handle(out: *mut *mut ClabMultivector, mv: DynMultivector) -> ClabStatus {
    put(out, Box::into_raw(Box::new(ClabMultivector(mv))))
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn clab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn clab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a signed blade sum such as `1 + 2·e12 − e123`.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_multivector_parse(
    text: *const c_char,
    mode: ClabMode,
    out: *mut *mut ClabMultivector,
) -> ClabStatus {
    guard(|| {
        let s = tri!(read_str(text));
        match DynMultivector::parse(s, mode.into()) {
            Ok(mv) => put_handle(out, mv),
            Err(e) => from_lib(e),
        }
    })
}

/// The basis vector `e_axis`, axis 1..=3.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_multivector_basis(
    axis: usize,
    mode: ClabMode,
    out: *mut *mut ClabMultivector,
) -> ClabStatus {
    guard(|| match DynMultivector::basis_vector(axis, mode.into()) {
        Ok(mv) => put_handle(out, mv),
        Err(e) => from_lib(e),
    })
}

/// Geometric product `a·b`. Both operands must share a mode.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_multivector_product(
    a: *const ClabMultivector,
    b: *const ClabMultivector,
    out: *mut *mut ClabMultivector,
) -> ClabStatus {
    guard(|| {
        let (a, b) = (tri!(handle(a)), tri!(handle(b)));
        match ga::geometric_product(a, b) {
            Ok(mv) => put_handle(out, mv),
            Err(e) => from_lib(e),
        }
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_multivector_add(
    a: *const ClabMultivector,
    b: *const ClabMultivector,
    out: *mut *mut ClabMultivector,
) -> ClabStatus {
    guard(|| {
        let (a, b) = (tri!(handle(a)), tri!(handle(b)));
        match ga::add(a, b) {
            Ok(mv) => put_handle(out, mv),
            Err(e) => from_lib(e),
        }
    })
}

/// Coefficientwise comparison; `tolerance` is ignored in exact mode.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_multivector_equals(
    a: *const ClabMultivector,
    b: *const ClabMultivector,
    tolerance: f64,
    out: *mut bool,
) -> ClabStatus {
    guard(|| {
        let (a, b) = (tri!(handle(a)), tri!(handle(b)));
        match a.equals(b, tolerance) {
            Ok(eq) => put(out, eq),
            Err(e) => from_lib(e),
        }
    })
}

/// Grade-0 part as a double (exact values are rounded).
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_multivector_scalar_part(a: *const ClabMultivector, out: *mut f64) -> ClabStatus {
    guard(|| {
        let a = tri!(handle(a));
        put(out, a.scalar_part().to_f64())
    })
}

/// Renders `a` as a signed blade sum. Release with `clab_string_free`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_multivector_render(a: *const ClabMultivector, out: *mut *mut c_char) -> ClabStatus {
    guard(|| {
        let a = tri!(handle(a));
        put_string(out, a.to_string())
    })
}

/// Releases a handle. NULL is a no-op.
///
/// # Safety
/// `mv` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn clab_multivector_free(mv: *mut ClabMultivector) {
    if !mv.is_null() {
        drop(Box::from_raw(mv));
    }
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn clab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs a verification suite (`pm`, `ghz`, `bell-ghz`, `operators`, `states`,
/// `a3`, `algebra`, `multi-system`, `chsh` or `all`) and writes its JSON
/// report to `out_json`. Returns `CLAB_STATUS_CHECKS_FAILED` when the report
/// contains a failing check; the report is written either way.
///
/// # Safety
/// `target` must be NUL-terminated; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_verify(
    target: *const c_char,
    mode: ClabMode,
    seed: u64,
    out_json: *mut *mut c_char,
) -> ClabStatus {
    guard(|| {
        let name = tri!(read_str(target));
        let target: Target = match name.parse() {
            Ok(t) => t,
            Err(e) => return from_lib(e),
        };
        let report = verify::run(target, VerifyOptions { mode: mode.into(), seed });
        let status = put_string(out_json, report.to_json());
        if status == ClabStatus::Ok && !report.all_passed() {
            return fail(
                ClabStatus::ChecksFailed,
                format!("{} of {} checks failed", report.summary.failed, report.summary.total),
            );
        }
        status
    })
}

/// `F(φ)` for `φ` in `[0, π]`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_chsh_f(phi: f64, out: *mut f64) -> ClabStatus {
    guard(|| match chsh::f_value(phi) {
        Ok(f) => put(out, f),
        Err(e) => from_lib(e),
    })
}

/// Identity maps whose Bell-GHZ column reads `(x, x, x, −x)` for the signed
/// in-plane generator `target` (e.g. `"-e2"`), as a JSON array.
///
/// # Safety
/// `target` must be NUL-terminated; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn clab_search_identities(target: *const c_char, out_json: *mut *mut c_char) -> ClabStatus {
    guard(|| {
        let name = tri!(read_str(target));
        let maps = match name.parse::<SignedGenerator>().and_then(find_identity_maps) {
            Ok(m) => m,
            Err(e) => return from_lib(e),
        };
        match serde_json::to_string(&maps) {
            Ok(json) => put_string(out_json, json),
            Err(e) => fail(ClabStatus::Panic, e.to_string()),
        }
    })
}
