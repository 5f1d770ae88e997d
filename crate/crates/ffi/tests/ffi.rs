//! Exercises the C ABI exactly as a foreign caller would: through raw
//! pointers and caller-provided buffers.

use libc::c_char;
use schreier_automatic_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn new_model(omega: &str) -> *mut SgModel {
    let omega = CString::new(omega).unwrap();
    let mut handle: *mut SgModel = ptr::null_mut();
    let status = unsafe { sg_model_new(omega.as_ptr(), &mut handle) };
    assert_eq!(status, SgStatus::SgOk);
    assert!(!handle.is_null());
    handle
}

fn act(handle: *const SgModel, word: &str, vertex: &str) -> Result<String, SgStatus> {
    let word = CString::new(word).unwrap();
    let vertex = CString::new(vertex).unwrap();
    let mut buf = [0 as c_char; 64];
    let status =
        unsafe { sg_act(handle, word.as_ptr(), vertex.as_ptr(), buf.as_mut_ptr(), buf.len()) };
    if status != SgStatus::SgOk {
        return Err(status);
    }
    Ok(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap().to_string())
}

fn last_error() -> String {
    let mut buf = [0 as c_char; 256];
    unsafe { sg_last_error(buf.as_mut_ptr(), buf.len()) };
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap().to_string()
}

#[test]
fn create_act_and_free() {
    let m = new_model("01");
    assert_eq!(act(m, "a", "-").unwrap(), "1");
    assert_eq!(act(m, "b", "-").unwrap(), "011");
    assert_eq!(act(m, "aA", "0110").unwrap(), "0110");
    assert_eq!(act(m, "-", "-").unwrap(), "-");
    unsafe { sg_model_free(m) };
}

#[test]
fn errors_are_reported() {
    let mut handle: *mut SgModel = ptr::null_mut();
    let bad = CString::new("0").unwrap();
    assert_eq!(
        unsafe { sg_model_new(bad.as_ptr(), &mut handle) },
        SgStatus::SgUnsupported
    );
    assert!(last_error().contains("unsupported"));

    let m = new_model("01");
    assert_eq!(act(m, "a", "0"), Err(SgStatus::SgInvalidArgument));
    assert_eq!(act(m, "z", "-"), Err(SgStatus::SgInvalidArgument));
    // buffer too small
    let word = CString::new("b").unwrap();
    let vertex = CString::new("-").unwrap();
    let mut tiny = [0 as c_char; 2];
    assert_eq!(
        unsafe { sg_act(m, word.as_ptr(), vertex.as_ptr(), tiny.as_mut_ptr(), tiny.len()) },
        SgStatus::SgBufferTooSmall
    );
    unsafe { sg_model_free(m) };
    unsafe { sg_model_free(ptr::null_mut()) }; // no-op
}

#[test]
fn null_handles_are_rejected() {
    let word = CString::new("a").unwrap();
    let vertex = CString::new("-").unwrap();
    let mut buf = [0 as c_char; 8];
    assert_eq!(
        unsafe { sg_act(ptr::null(), word.as_ptr(), vertex.as_ptr(), buf.as_mut_ptr(), 8) },
        SgStatus::SgInvalidArgument
    );
    assert_eq!(
        unsafe { sg_verify(ptr::null(), SgVerifyTarget::SgVerifyVertices, 4) },
        SgStatus::SgInvalidArgument
    );
    assert_eq!(
        unsafe { sg_growth(ptr::null(), 4, buf.as_mut_ptr() as *mut u64, 8) },
        SgStatus::SgInvalidArgument
    );
}

#[test]
fn verify_through_ffi() {
    let m = new_model("01");
    assert_eq!(
        unsafe { sg_verify(m, SgVerifyTarget::SgVerifyVertices, 10) },
        SgStatus::SgOk
    );
    assert_eq!(
        unsafe { sg_verify(m, SgVerifyTarget::SgVerifyEdges, 7) },
        SgStatus::SgOk
    );
    unsafe { sg_model_free(m) };
}

#[test]
fn growth_through_ffi() {
    let m = new_model("01");
    let mut values = [0u64; 17];
    assert_eq!(
        unsafe { sg_growth(m, 16, values.as_mut_ptr(), values.len()) },
        SgStatus::SgOk
    );
    assert_eq!(values[0], 1);
    assert_eq!(values[1], 5);
    assert_eq!(values[16], 1311);
    // too-small buffer and out-of-guard radius
    assert_eq!(
        unsafe { sg_growth(m, 16, values.as_mut_ptr(), 3) },
        SgStatus::SgBufferTooSmall
    );
    assert_eq!(
        unsafe { sg_growth(m, 1000, values.as_mut_ptr(), values.len()) },
        SgStatus::SgRangeError
    );
    unsafe { sg_model_free(m) };
}
