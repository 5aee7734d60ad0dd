//! C interface to `csf-core`.
//!
//! Every function returns a [`CsfStatus`] and writes its result through an
//! out-pointer. Trees and symmetric functions are opaque handles released
//! with `csf_tree_free` and `csf_symfunc_free`; strings are released with
//! `csf_string_free`. After a failure, `csf_last_error_message` describes
//! the most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use csf_core::{CsfError, SpiderSpec, SymmetricFunction, Tree};

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed edge list: bad line, loop, duplicate edge, vertex out of range.
    InvalidInput = 3,
    /// The graph is empty, disconnected or has a cycle.
    NotATree = 4,
    SizeMismatch = 5,
    Isomorphic = 6,
    CapExceeded = 7,
    Overflow = 8,
    UnsupportedBasis = 9,
    InvalidArgument = 10,
    Panic = 11,
}

/// Opaque tree handle.
pub struct CsfTree(Tree);

/// Opaque symmetric function handle.
pub struct CsfSymFunc(SymmetricFunction);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &CsfError) -> CsfStatus {
    match e {
        CsfError::Malformed { .. }
        | CsfError::Loop { .. }
        | CsfError::DuplicateEdge { .. }
        | CsfError::VertexOutOfRange { .. } => CsfStatus::InvalidInput,
        CsfError::NotConnected | CsfError::HasCycle | CsfError::Empty => CsfStatus::NotATree,
        CsfError::SizeMismatch(..) => CsfStatus::SizeMismatch,
        CsfError::Isomorphic => CsfStatus::Isomorphic,
        CsfError::CapExceeded { .. } => CsfStatus::CapExceeded,
        CsfError::Overflow(_) => CsfStatus::Overflow,
        CsfError::UnsupportedBasis(_) => CsfStatus::UnsupportedBasis,
        CsfError::TooSmall { .. }
        | CsfError::InvalidSpider(_)
        | CsfError::InvalidStarConnection(_)
        | CsfError::InvalidSymmetricFunction(_)
        | CsfError::InvalidArgument(_) => CsfStatus::InvalidArgument,
    }
}

struct Failure(CsfStatus, String);

impl From<CsfError> for Failure {
    fn from(e: CsfError) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CsfStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CsfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CsfStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            CsfStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(CsfStatus::InvalidArgument, "string contains NUL".into()))?;
    put(out, c.into_raw())
}

unsafe fn put_tree(out: *mut *mut CsfTree, t: Tree) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(CsfTree(t))))
}

unsafe fn put_symfunc(out: *mut *mut CsfSymFunc, f: SymmetricFunction) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(CsfSymFunc(f))))
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn csf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn csf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an edge list (`u v` per line, optional `n <k>` header).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_tree_from_edge_list(text: *const c_char, out: *mut *mut CsfTree) -> CsfStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|e| Failure(CsfStatus::InvalidUtf8, e.to_string()))?;
        let tree = csf_core::as_tree(csf_core::parse_edge_list(text)?)?;
        put_tree(out, tree)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_tree_path(n: usize, out: *mut *mut CsfTree) -> CsfStatus {
    guard(|| put_tree(out, csf_core::gen_path(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_tree_star(n: usize, out: *mut *mut CsfTree) -> CsfStatus {
    guard(|| put_tree(out, csf_core::gen_star(n)?))
}

/// Spider with `len` legs of the given lengths.
///
/// # Safety
/// `legs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_tree_spider(legs: *const usize, len: usize, out: *mut *mut CsfTree) -> CsfStatus {
    guard(|| {
        if legs.is_null() && len > 0 {
            return Err(null("legs"));
        }
        let legs = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(legs, len).to_vec() };
        put_tree(out, csf_core::gen_spider(&SpiderSpec::new(legs)?)?)
    })
}

/// # Safety
/// `t` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn csf_tree_free(t: *mut CsfTree) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_tree_vertex_count(t: *const CsfTree, out: *mut usize) -> CsfStatus {
    guard(|| put(out, borrow(t, "tree")?.0.vertex_count()))
}

/// Canonical code; equal for two trees exactly when they are isomorphic.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_tree_canonical_code(t: *const CsfTree, out: *mut *mut c_char) -> CsfStatus {
    guard(|| put_string(out, csf_core::canonical_code(&borrow(t, "tree")?.0).to_string()))
}

/// Independence number.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_tree_alpha(t: *const CsfTree, out: *mut usize) -> CsfStatus {
    guard(|| put(out, csf_core::alpha_mis(&borrow(t, "tree")?.0)?))
}

/// Leaf decomposition as JSON.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_tree_decomposition_json(t: *const CsfTree, out: *mut *mut c_char) -> CsfStatus {
    guard(|| put_string(out, csf_core::leaf_decomposition(&borrow(t, "tree")?.0).to_json()))
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_trees_isomorphic(a: *const CsfTree, b: *const CsfTree, out: *mut bool) -> CsfStatus {
    guard(|| put(out, csf_core::trees_isomorphic(&borrow(a, "a")?.0, &borrow(b, "b")?.0)))
}

/// Whether the two trees have the same chromatic symmetric function.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_trees_csf_equal(a: *const CsfTree, b: *const CsfTree, out: *mut bool) -> CsfStatus {
    guard(|| put(out, csf_core::csf_equal(&borrow(a, "a")?.0, &borrow(b, "b")?.0)?))
}

/// Comparison report as JSON; `theorems` adds the criterion verdicts.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_compare_json(
    a: *const CsfTree,
    b: *const CsfTree,
    theorems: bool,
    out: *mut *mut c_char,
) -> CsfStatus {
    guard(|| put_string(out, csf_core::compare_report(&borrow(a, "a")?.0, &borrow(b, "b")?.0, theorems)?.to_string()))
}

/// Survey of every tree pair on `n` vertices as JSON. `jobs = 0` uses all cores.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_survey_json(n: usize, jobs: usize, out: *mut *mut c_char) -> CsfStatus {
    guard(|| put_string(out, csf_core::survey(n, (jobs > 0).then_some(jobs))?.to_json()))
}

/// Expansion in the monomial basis.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_symfunc_monomial(t: *const CsfTree, out: *mut *mut CsfSymFunc) -> CsfStatus {
    guard(|| put_symfunc(out, csf_core::csf_monomial(&borrow(t, "tree")?.0)?))
}

/// Expansion in the power-sum basis.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_symfunc_powersum(t: *const CsfTree, out: *mut *mut CsfSymFunc) -> CsfStatus {
    guard(|| put_symfunc(out, csf_core::csf_powersum(&borrow(t, "tree")?.0)?))
}

/// Converts to the monomial basis, returning a new handle.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_symfunc_to_monomial(f: *const CsfSymFunc, out: *mut *mut CsfSymFunc) -> CsfStatus {
    guard(|| put_symfunc(out, csf_core::to_monomial(&borrow(f, "symfunc")?.0)?))
}

/// # Safety
/// `f` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn csf_symfunc_free(f: *mut CsfSymFunc) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_symfunc_term_count(f: *const CsfSymFunc, out: *mut usize) -> CsfStatus {
    guard(|| put(out, borrow(f, "symfunc")?.0.len()))
}

/// Longest partition with a nonzero monomial coefficient.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_symfunc_max_block(f: *const CsfSymFunc, out: *mut usize) -> CsfStatus {
    guard(|| put(out, csf_core::max_block_from_csf(&borrow(f, "symfunc")?.0)?))
}

/// Value at `x_1 = … = x_r = 1`, other variables 0. Fails with
/// `Overflow` when the value does not fit in 64 bits.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_symfunc_evaluate_ones(f: *const CsfSymFunc, r: u64, out: *mut i64) -> CsfStatus {
    guard(|| {
        let v = csf_core::evaluate_ones(&borrow(f, "symfunc")?.0, r)?;
        let v = i64::try_from(v).map_err(|_| Failure(CsfStatus::Overflow, format!("{v} does not fit in i64")))?;
        put(out, v)
    })
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn csf_symfunc_to_json(f: *const CsfSymFunc, out: *mut *mut c_char) -> CsfStatus {
    guard(|| put_string(out, borrow(f, "symfunc")?.0.to_json()))
}
