//! C ABI over the core library: opaque model handles, status codes, and
//! caller-provided buffers. Strings are NUL-terminated UTF-8; `-` denotes
//! the empty word on both sides of the boundary.
//!
//! Every function is safe to call from any thread; a handle must not be
//! used concurrently from two threads while being freed.

use libc::{c_char, size_t};
use schreier_automatic::automatic::{verify_all, verify_edges, verify_pairs, verify_vertices};
use schreier_automatic::growth::action_series;
use schreier_automatic::{
    ActionModel, EncodedVertex, Error, GeneratorLetter, GroupWord, MealyMachine, OmegaSpec,
};
use std::cell::RefCell;
use std::ffi::{CStr, CString};

/// Status of an FFI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SgStatus {
    /// Success (and, for verifications, a passing report).
    SgOk = 0,
    /// A pointer was null or a string was not valid UTF-8 / not parseable.
    SgInvalidArgument = 1,
    /// The boundary word is outside the supported family.
    SgUnsupported = 2,
    /// A radius or depth exceeded a guard bound.
    SgRangeError = 3,
    /// The verification ran and found mismatches.
    SgVerificationFailed = 4,
    /// The caller-provided buffer is too small.
    SgBufferTooSmall = 5,
    /// Any other failure; see `sg_last_error`.
    SgInternalError = 6,
}

/// Which language to verify.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SgVerifyTarget {
    SgVerifyVertices = 0,
    SgVerifyPairs = 1,
    SgVerifyEdges = 2,
    SgVerifyAll = 3,
}

/// Opaque model handle.
pub struct SgModel {
    inner: ActionModel,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let clean: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).unwrap());
}

fn status_of(err: &Error) -> SgStatus {
    set_error(&err.to_string());
    match err {
        Error::UnsupportedOmega(_) => SgStatus::SgUnsupported,
        Error::InvalidEncoding(_) | Error::Malformed(_) | Error::AlphabetMismatch(_) => {
            SgStatus::SgInvalidArgument
        }
        Error::RangeExceeded(_) | Error::WindowTooSmall(_) | Error::InsufficientRadius(_) => {
            SgStatus::SgRangeError
        }
        _ => SgStatus::SgInternalError,
    }
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn parse_cstr<'a>(s: *const c_char) -> Result<&'a str, SgStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(SgStatus::SgInvalidArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string is not valid UTF-8");
        SgStatus::SgInvalidArgument
    })
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to fit). A zero-length buffer is allowed and does nothing.
///
/// # Safety
/// `buf` must point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn sg_last_error(buf: *mut c_char, len: size_t) {
    if buf.is_null() || len == 0 {
        return;
    }
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes_with_nul();
        let n = bytes.len().min(len);
        std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
        *buf.add(n - 1) = 0;
    });
}

/// Creates a model for the given boundary word (e.g. `"01"`). On success
/// writes an owned handle to `out`; free it with `sg_model_free`.
///
/// # Safety
/// `omega` must be a valid NUL-terminated string; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn sg_model_new(omega: *const c_char, out: *mut *mut SgModel) -> SgStatus {
    if out.is_null() {
        set_error("null output pointer");
        return SgStatus::SgInvalidArgument;
    }
    let omega = match parse_cstr(omega) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let parsed = match OmegaSpec::parse(omega) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    match ActionModel::new(MealyMachine::standard(), parsed) {
        Ok(model) => {
            *out = Box::into_raw(Box::new(SgModel { inner: model }));
            SgStatus::SgOk
        }
        Err(e) => status_of(&e),
    }
}

/// Frees a handle; null is a no-op.
///
/// # Safety
/// `model` must be null or a pointer previously returned by
/// `sg_model_new`, not freed twice.
#[no_mangle]
pub unsafe extern "C" fn sg_model_free(model: *mut SgModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Applies a generator word (e.g. `"abA"`, `"-"` for the identity) to a
/// canonical vertex encoding (`"-"` for the basepoint) and writes the image
/// encoding into `buf`, NUL-terminated.
///
/// # Safety
/// `model` must be a live handle; `word` and `vertex` valid strings; `buf`
/// must point to `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn sg_act(
    model: *const SgModel,
    word: *const c_char,
    vertex: *const c_char,
    buf: *mut c_char,
    buf_len: size_t,
) -> SgStatus {
    let Some(model) = model.as_ref() else {
        set_error("null model handle");
        return SgStatus::SgInvalidArgument;
    };
    let (word, vertex) = match (parse_cstr(word), parse_cstr(vertex)) {
        (Ok(w), Ok(v)) => (w, v),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    let word = if word == "-" { "" } else { word };
    let parsed = match GroupWord::parse(model.inner.machine(), word) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let mut v = match EncodedVertex::parse(vertex) {
        Ok(v) => v,
        Err(e) => return status_of(&e),
    };
    for &g in &parsed.0 {
        v = match model.inner.act_vertex(g, &v) {
            Ok(next) => next,
            Err(e) => return status_of(&e),
        };
    }
    let rendered = v.to_string();
    let bytes = rendered.as_bytes();
    if buf.is_null() || buf_len < bytes.len() + 1 {
        set_error("output buffer too small");
        return SgStatus::SgBufferTooSmall;
    }
    std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, bytes.len());
    *buf.add(bytes.len()) = 0;
    SgStatus::SgOk
}

/// Runs acceptor-versus-oracle verification at the given depth. Returns
/// `SgOk` when every selected report passes and `SgVerificationFailed`
/// when mismatches were found.
///
/// # Safety
/// `model` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sg_verify(
    model: *const SgModel,
    target: SgVerifyTarget,
    depth: u32,
) -> SgStatus {
    let Some(model) = model.as_ref() else {
        set_error("null model handle");
        return SgStatus::SgInvalidArgument;
    };
    let depth = depth as usize;
    let outcome = match target {
        SgVerifyTarget::SgVerifyVertices => {
            verify_vertices(&model.inner, depth).map(|r| vec![r])
        }
        SgVerifyTarget::SgVerifyPairs => verify_pairs(&model.inner, depth).map(|r| vec![r]),
        SgVerifyTarget::SgVerifyEdges => (|| {
            let mut reports = Vec::new();
            for &g in model.inner.generators() {
                for sign in [schreier_automatic::Sign::Pos, schreier_automatic::Sign::Neg] {
                    reports.push(verify_edges(
                        &model.inner,
                        GeneratorLetter { state: g, sign },
                        depth,
                    )?);
                }
            }
            Ok(reports)
        })(),
        SgVerifyTarget::SgVerifyAll => verify_all(&model.inner, depth),
    };
    match outcome {
        Ok(reports) if reports.iter().all(|r| r.pass) => SgStatus::SgOk,
        Ok(reports) => {
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.pass)
                .map(|r| r.language.as_str())
                .collect();
            set_error(&format!("verification failed: {}", failed.join(", ")));
            SgStatus::SgVerificationFailed
        }
        Err(e) => status_of(&e),
    }
}

/// Computes closed-ball sizes `γ(0..=radius)` around the basepoint and
/// writes them into `values`, which must hold at least `radius + 1`
/// entries. Radii above 64 are refused.
///
/// # Safety
/// `model` must be a live handle; `values` must point to `values_len`
/// writable `uint64_t`s.
#[no_mangle]
pub unsafe extern "C" fn sg_growth(
    model: *const SgModel,
    radius: u32,
    values: *mut u64,
    values_len: size_t,
) -> SgStatus {
    let Some(model) = model.as_ref() else {
        set_error("null model handle");
        return SgStatus::SgInvalidArgument;
    };
    if radius > 64 {
        set_error("radius exceeds the guard bound 64");
        return SgStatus::SgRangeError;
    }
    if values.is_null() || values_len < radius as usize + 1 {
        set_error("values buffer too small");
        return SgStatus::SgBufferTooSmall;
    }
    match action_series(&model.inner, &EncodedVertex::root(), radius) {
        Ok(series) => {
            std::ptr::copy_nonoverlapping(series.values.as_ptr(), values, series.values.len());
            SgStatus::SgOk
        }
        Err(e) => status_of(&e),
    }
}
