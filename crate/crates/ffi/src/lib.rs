//! C ABI over the hopfyb engine.
//!
//! Objects cross the boundary as opaque handles that the caller releases
//! with the matching `_free` function. Every fallible call returns a
//! [`HopfybStatus`]; on failure `hopfyb_last_error` describes the cause.
//! Strings handed out are NUL-terminated UTF-8 owned by the caller and
//! released with `hopfyb_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use hopfyb::braiding::{
    build_r, check_braid_equation, check_braid_equation_fast, involutivity_report,
    verify_braiding_axioms, BraidingOperator,
};
use hopfyb::cli::{catalog_algebra, named_pair, run_command};
use hopfyb::json::{report_value, HopfDoc, PairDoc, RMatrixDoc};
use hopfyb::matched_pair::{verify_matched_pair, ActionPair};
use hopfyb::{AxiomReport, Error, HopfAlgebra, Scalar};

/// Result of a call. Values match the command-line exit codes where they
/// overlap.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfybStatus {
    Ok = 0,
    /// A check failed or a mathematical precondition does not hold.
    CheckFailed = 1,
    /// Malformed input: bad JSON, unknown name, wrong dimensions.
    InvalidInput = 2,
    NullArgument = 3,
    /// A string argument is not valid UTF-8.
    InvalidUtf8 = 4,
    /// The engine panicked. This is a bug.
    Panic = 5,
}

/// A Hopf algebra.
pub struct HopfybAlgebra(Arc<HopfAlgebra>);

/// A matched pair of actions on a Hopf algebra.
pub struct HopfybPair(ActionPair);

/// The braiding operator r built from a matched pair.
pub struct HopfybBraiding(BraidingOperator);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(e: Error) -> HopfybStatus {
    let status = if e.is_input_error() {
        HopfybStatus::InvalidInput
    } else {
        HopfybStatus::CheckFailed
    };
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> HopfybStatus) -> HopfybStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            HopfybStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, HopfybStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(HopfybStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        HopfybStatus::InvalidUtf8
    })
}

unsafe fn read_handle<'a, T>(p: *const T) -> Result<&'a T, HopfybStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        HopfybStatus::NullArgument
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("no interior NUL")
        .into_raw()
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> HopfybStatus {
    if out.is_null() {
        set_error("null output pointer");
        return HopfybStatus::NullArgument;
    }
    *out = Box::into_raw(Box::new(value));
    HopfybStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> HopfybStatus {
    if out.is_null() {
        set_error("null output pointer");
        return HopfybStatus::NullArgument;
    }
    *out = into_c_string(s);
    HopfybStatus::Ok
}

/// Stores the report as JSON when `out` is non-null and maps pass/fail to a
/// status.
unsafe fn finish_report(report: &AxiomReport, out: *mut *mut c_char) -> HopfybStatus {
    if !out.is_null() {
        let v = report_value(report, false);
        *out = into_c_string(serde_json::to_string_pretty(&v).expect("json"));
    }
    if report.passed() {
        HopfybStatus::Ok
    } else {
        set_error(format!(
            "checks failed: {}",
            report.failed_names().join(", ")
        ));
        HopfybStatus::CheckFailed
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! engine {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn hopfyb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. The caller
/// frees the copy with `hopfyb_string_free`.
#[no_mangle]
pub extern "C" fn hopfyb_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(s) => s.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Looks up a catalog algebra: a_c2c2, h4, c2, c2c2 or s3.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_algebra_catalog(
    name: *const c_char,
    out: *mut *mut HopfybAlgebra,
) -> HopfybStatus {
    guard(|| {
        let name = tri!(read_str(name));
        match catalog_algebra(name) {
            Some(h) => write_out(out, HopfybAlgebra(Arc::new(h))),
            None => fail(Error::UnknownName {
                kind: "algebra",
                name: name.to_string(),
            }),
        }
    })
}

/// Parses a `hopf.v1` document.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_algebra_from_json(
    json: *const c_char,
    out: *mut *mut HopfybAlgebra,
) -> HopfybStatus {
    guard(|| {
        let text = tri!(read_str(json));
        let doc: HopfDoc = engine!(serde_json::from_str(text).map_err(Error::from));
        let h = engine!(doc.into_hopf());
        write_out(out, HopfybAlgebra(Arc::new(h)))
    })
}

/// Serializes an algebra as a `hopf.v1` document.
///
/// # Safety
/// `alg` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_algebra_to_json(
    alg: *const HopfybAlgebra,
    out: *mut *mut c_char,
) -> HopfybStatus {
    guard(|| {
        let h = tri!(read_handle(alg));
        let doc = HopfDoc::from_hopf(&h.0);
        write_string(out, serde_json::to_string_pretty(&doc).expect("json"))
    })
}

/// Dimension of the algebra, or 0 for a null handle.
///
/// # Safety
/// `alg` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_algebra_dim(alg: *const HopfybAlgebra) -> usize {
    alg.as_ref().map_or(0, |h| h.0.dim())
}

/// Checks the Hopf algebra axioms. The report is written to `report` when it
/// is non-null.
///
/// # Safety
/// `alg` is a live handle; `report` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_algebra_verify(
    alg: *const HopfybAlgebra,
    report: *mut *mut c_char,
) -> HopfybStatus {
    guard(|| {
        let h = tri!(read_handle(alg));
        finish_report(&hopfyb::verify_hopf(&h.0), report)
    })
}

/// Releases an algebra. Null is ignored.
///
/// # Safety
/// `alg` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_algebra_free(alg: *mut HopfybAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// A built-in pair: family1, family2, conjugation or trivial. `alg` is
/// required for conjugation and trivial. `alpha` is an optional scalar
/// substituted for the parameter; null keeps it symbolic.
///
/// # Safety
/// `name` is a NUL-terminated string, `alg` null or a live handle, `alpha`
/// null or a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_pair_named(
    name: *const c_char,
    alg: *const HopfybAlgebra,
    alpha: *const c_char,
    out: *mut *mut HopfybPair,
) -> HopfybStatus {
    guard(|| {
        let name = tri!(read_str(name));
        let alpha = if alpha.is_null() {
            None
        } else {
            Some(engine!(Scalar::parse(tri!(read_str(alpha)))))
        };
        let h = alg.as_ref().map(|a| a.0.clone());
        let p = engine!(named_pair(name, h, alpha));
        write_out(out, HopfybPair(p))
    })
}

/// Parses a `pair.v1` document over `alg`. A missing right action is
/// derived from the left one.
///
/// # Safety
/// `json` is a NUL-terminated string, `alg` a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_pair_from_json(
    json: *const c_char,
    alg: *const HopfybAlgebra,
    out: *mut *mut HopfybPair,
) -> HopfybStatus {
    guard(|| {
        let text = tri!(read_str(json));
        let h = tri!(read_handle(alg));
        let doc: PairDoc = engine!(serde_json::from_str(text).map_err(Error::from));
        let p = engine!(doc.into_pair(h.0.clone()));
        write_out(out, HopfybPair(p))
    })
}

/// Serializes a pair as a `pair.v1` document.
///
/// # Safety
/// `pair` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_pair_to_json(
    pair: *const HopfybPair,
    out: *mut *mut c_char,
) -> HopfybStatus {
    guard(|| {
        let p = tri!(read_handle(pair));
        let doc = PairDoc::from_pair(&p.0, p.0.hopf().name());
        write_string(out, serde_json::to_string_pretty(&doc).expect("json"))
    })
}

/// Checks the matched pair axioms.
///
/// # Safety
/// `pair` is a live handle; `report` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_pair_verify(
    pair: *const HopfybPair,
    report: *mut *mut c_char,
) -> HopfybStatus {
    guard(|| {
        let p = tri!(read_handle(pair));
        finish_report(&verify_matched_pair(&p.0), report)
    })
}

/// Evaluates the four involutivity conditions into `flags[0..4]`. Returns
/// `Ok` when the pair is involutive and `CheckFailed` otherwise.
///
/// # Safety
/// `pair` is a live handle; `flags` points to four writable bools.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_pair_involutivity(
    pair: *const HopfybPair,
    flags: *mut bool,
) -> HopfybStatus {
    guard(|| {
        let p = tri!(read_handle(pair));
        if flags.is_null() {
            set_error("null output pointer");
            return HopfybStatus::NullArgument;
        }
        let r = engine!(build_r(&p.0));
        let inv = engine!(involutivity_report(&p.0, &r));
        for (k, v) in inv.values().into_iter().enumerate() {
            *flags.add(k) = v;
        }
        if inv.involutive() {
            HopfybStatus::Ok
        } else {
            set_error("pair is not involutive");
            HopfybStatus::CheckFailed
        }
    })
}

/// Releases a pair. Null is ignored.
///
/// # Safety
/// `pair` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_pair_free(pair: *mut HopfybPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// Builds r from a pair; fails with `CheckFailed` if the pair is not a
/// matched pair.
///
/// # Safety
/// `pair` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_braiding_build(
    pair: *const HopfybPair,
    out: *mut *mut HopfybBraiding,
) -> HopfybStatus {
    guard(|| {
        let p = tri!(read_handle(pair));
        let r = engine!(build_r(&p.0));
        write_out(out, HopfybBraiding(r))
    })
}

/// Checks the braiding operator axioms and the braid equation, the latter
/// at sample values of the parameter when `fast` is set.
///
/// # Safety
/// `r` is a live handle; `report` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_braiding_check(
    r: *const HopfybBraiding,
    fast: bool,
    report: *mut *mut c_char,
) -> HopfybStatus {
    guard(|| {
        let r = tri!(read_handle(r));
        let braid = if fast {
            engine!(check_braid_equation_fast(&r.0))
        } else {
            check_braid_equation(&r.0)
        };
        let mut full = verify_braiding_axioms(&r.0);
        full.push(braid);
        finish_report(&full, report)
    })
}

/// Serializes r as an `rmatrix.v1` document.
///
/// # Safety
/// `r` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_braiding_to_json(
    r: *const HopfybBraiding,
    out: *mut *mut c_char,
) -> HopfybStatus {
    guard(|| {
        let r = tri!(read_handle(r));
        let doc = RMatrixDoc::from_operator(&r.0, r.0.hopf().name());
        write_string(out, serde_json::to_string_pretty(&doc).expect("json"))
    })
}

/// Releases a braiding operator. Null is ignored.
///
/// # Safety
/// `r` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_braiding_free(r: *mut HopfybBraiding) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Runs a command line exactly as the `hopfyb` binary would. `argv[0]` is
/// the program name. The exit code goes to `exit_code`; captured output goes
/// to `out` and `err` when they are non-null.
///
/// # Safety
/// `argv` holds `argc` NUL-terminated strings; the output pointers are null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn hopfyb_run(
    argc: c_int,
    argv: *const *const c_char,
    exit_code: *mut c_int,
    out: *mut *mut c_char,
    err: *mut *mut c_char,
) -> HopfybStatus {
    guard(|| {
        if argv.is_null() || exit_code.is_null() || argc < 0 {
            set_error("null argument vector or exit code pointer");
            return HopfybStatus::NullArgument;
        }
        let mut args = Vec::with_capacity(argc as usize);
        for k in 0..argc as usize {
            args.push(tri!(read_str(*argv.add(k))).to_string());
        }
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        *exit_code = run_command(args, &mut stdout, &mut stderr);
        if !out.is_null() {
            *out = into_c_string(String::from_utf8_lossy(&stdout).into_owned());
        }
        if !err.is_null() {
            *err = into_c_string(String::from_utf8_lossy(&stderr).into_owned());
        }
        HopfybStatus::Ok
    })
}
