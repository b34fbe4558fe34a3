//! C interface to `clustercomb`.
//!
//! Objects cross the boundary as JSON strings or as opaque handles. Every
//! function returns a [`CcStatus`]; on failure [`cc_last_error`] describes
//! what went wrong on the calling thread. Strings handed out by the library
//! must be released with [`cc_string_free`], handles with their `_free`
//! function.

use clustercomb::counting::CountFamily;
use clustercomb::dispatch::{map_json, MapError};
use clustercomb::induction::{normal_form, InductionStep};
use clustercomb::ColouredTree;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ValidationError = 4,
    UnknownName = 5,
    Panic = 6,
}

/// A labelled coloured tree.
pub struct CcTree {
    tree: ColouredTree,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("interior nuls removed"));
}

fn fail(status: CcStatus, msg: impl Into<String>) -> CcStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning panics into [`CcStatus::Panic`] and clearing the error
/// message on success.
fn guard(f: impl FnOnce() -> CcStatus) -> CcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(CcStatus::Ok) => {
            set_error("");
            CcStatus::Ok
        }
        Ok(s) => s,
        Err(_) => fail(CcStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, CcStatus> {
    if p.is_null() {
        return Err(fail(CcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(CcStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> CcStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CcStatus::Ok
        }
        Err(_) => fail(CcStatus::Panic, "output contains a nul byte"),
    }
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn cc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a tree from JSON `{"k":…,"m":…,"edges":[[u,v,c],…]}`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_tree_from_json(json: *const c_char, out: *mut *mut CcTree) -> CcStatus {
    guard(|| {
        if out.is_null() {
            return fail(CcStatus::NullPointer, "null output pointer");
        }
        let s = match read_str(json) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match ColouredTree::from_json(s) {
            Ok(tree) => {
                *out = Box::into_raw(Box::new(CcTree { tree }));
                CcStatus::Ok
            }
            Err(e) if e.is_data() => fail(CcStatus::ValidationError, e.to_string()),
            Err(e) => fail(CcStatus::ParseError, e.to_string()),
        }
    })
}

/// Releases a tree. Null is ignored.
///
/// # Safety
/// `t` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn cc_tree_free(t: *mut CcTree) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_tree_k(t: *const CcTree) -> usize {
    t.as_ref().map_or(0, |t| t.tree.k())
}

/// Number of colours, or 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_tree_m(t: *const CcTree) -> usize {
    t.as_ref().map_or(0, |t| t.tree.m())
}

/// Writes the tree as JSON to `*out`.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_tree_to_json(t: *const CcTree, out: *mut *mut c_char) -> CcStatus {
    guard(|| match (t.as_ref(), out.is_null()) {
        (Some(t), false) => write_string(out, t.tree.to_json()),
        _ => fail(CcStatus::NullPointer, "null argument"),
    })
}

/// Fills `image[0..k]` with the circular order: `image[v-1] = σ(v)`.
/// `len` must be at least `k`.
///
/// # Safety
/// `t` must be a live handle and `image` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn cc_tree_circular_order(
    t: *const CcTree,
    image: *mut usize,
    len: usize,
) -> CcStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            return fail(CcStatus::NullPointer, "null tree");
        };
        if image.is_null() {
            return fail(CcStatus::NullPointer, "null output buffer");
        }
        let sigma = t.tree.circular_order();
        if len < sigma.len() {
            return fail(CcStatus::ValidationError, format!("buffer holds {len}, need {}", sigma.len()));
        }
        ptr::copy_nonoverlapping(sigma.image().as_ptr(), image, sigma.len());
        CcStatus::Ok
    })
}

/// Applies one induction move given as JSON
/// `{"kind":"R"|"L","i":…,"j":…,"chain":[…]}` and returns a new tree.
///
/// # Safety
/// `t` must be a live handle, `step_json` a nul-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_tree_apply_step(
    t: *const CcTree,
    step_json: *const c_char,
    out: *mut *mut CcTree,
) -> CcStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            return fail(CcStatus::NullPointer, "null tree");
        };
        if out.is_null() {
            return fail(CcStatus::NullPointer, "null output pointer");
        }
        let s = match read_str(step_json) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let step: InductionStep = match serde_json::from_str(s) {
            Ok(x) => x,
            Err(e) => return fail(CcStatus::ParseError, e.to_string()),
        };
        match step.apply(&t.tree) {
            Ok(tree) => {
                *out = Box::into_raw(Box::new(CcTree { tree }));
                CcStatus::Ok
            }
            Err(e) => fail(CcStatus::ValidationError, e.to_string()),
        }
    })
}

/// Replaces the tree by its two-colour normal form, returning a new handle.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_tree_normal_form(t: *const CcTree, out: *mut *mut CcTree) -> CcStatus {
    guard(|| match (t.as_ref(), out.is_null()) {
        (Some(t), false) => {
            let (tree, _) = normal_form(&t.tree);
            *out = Box::into_raw(Box::new(CcTree { tree }));
            CcStatus::Ok
        }
        _ => fail(CcStatus::NullPointer, "null argument"),
    })
}

/// Applies a named map such as `"diagram->forest"` or `"family:2->6"` to a
/// JSON object and writes the image JSON to `*out`.
///
/// # Safety
/// `name` and `input` must be nul-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_map_json(
    name: *const c_char,
    input: *const c_char,
    out: *mut *mut c_char,
) -> CcStatus {
    guard(|| {
        if out.is_null() {
            return fail(CcStatus::NullPointer, "null output pointer");
        }
        let (name, input) = match (read_str(name), read_str(input)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return e,
        };
        match map_json(name, input) {
            Ok(s) => write_string(out, s),
            Err(e @ MapError::UnknownMap(_)) => fail(CcStatus::UnknownName, e.to_string()),
            Err(e @ MapError::Parse(_)) => fail(CcStatus::ParseError, e.to_string()),
            Err(e @ MapError::Invalid(_)) => fail(CcStatus::ValidationError, e.to_string()),
        }
    })
}

/// Writes `T_{k,m}`, `S_{k,m}` or `U_{k,m}` (selected by `family` = 'T',
/// 'S' or 'U') to `*out` as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_count(family: c_char, k: usize, m: usize, out: *mut *mut c_char) -> CcStatus {
    guard(|| {
        if out.is_null() {
            return fail(CcStatus::NullPointer, "null output pointer");
        }
        let f = match family as u8 {
            b'T' => CountFamily::T,
            b'S' => CountFamily::S,
            b'U' => CountFamily::U,
            other => return fail(CcStatus::UnknownName, format!("unknown family '{}'", other as char)),
        };
        if m < 2 || (f == CountFamily::U && k == 0) {
            return fail(CcStatus::ValidationError, "need m >= 2, and k >= 1 for U");
        }
        write_string(out, f.count(k, m).to_string())
    })
}
