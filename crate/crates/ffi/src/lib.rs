//! C interface to `conn2k`.
//!
//! Graphs and results are opaque handles owned by the caller and released
//! with the matching `_free` function. Every fallible call returns a
//! [`Conn2kStatus`]; on failure, [`conn2k_last_error`] describes the cause
//! for the calling thread. Vertices are 0-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use conn2k::{
    augment, is_2k_conn_in_v, parse_instance, Algo, AssertLevel, AugmentationResult, CapGraph, Error, StarGraph,
};

/// Status codes. The nonzero error values match the exit codes of the
/// command-line tool where both exist.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conn2kStatus {
    Ok = 0,
    /// Malformed input or a violated precondition.
    InvalidInput = 2,
    /// An internal invariant failed. Always a bug.
    Internal = 3,
    NullPointer = 4,
    OutOfRange = 5,
    /// A panic was caught at the boundary.
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conn2kAlgo {
    Fast = 0,
    Naive = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conn2kAssertLevel {
    Off = 0,
    Cheap = 1,
    Full = 2,
}

/// Opaque capacitated graph.
pub struct Conn2kGraph {
    graph: CapGraph,
}

/// Opaque augmentation result: the added edges and the augmented graph.
pub struct Conn2kResult {
    graph: CapGraph,
    result: AugmentationResult,
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

fn status_of(err: &Error) -> Conn2kStatus {
    match err.exit_code() {
        3 => Conn2kStatus::Internal,
        _ => Conn2kStatus::InvalidInput,
    }
}

fn guard(body: impl FnOnce() -> Result<(), Conn2kStatus>) -> Conn2kStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => Conn2kStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            Conn2kStatus::Panic
        }
    }
}

fn lib_err(err: Error) -> Conn2kStatus {
    set_error(err.to_string());
    status_of(&err)
}

fn fail(status: Conn2kStatus, msg: &str) -> Conn2kStatus {
    set_error(msg);
    status
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Conn2kStatus> {
    p.as_ref().ok_or_else(|| fail(Conn2kStatus::NullPointer, &format!("{what} is null")))
}

unsafe fn deref_mut<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Conn2kStatus> {
    p.as_mut().ok_or_else(|| fail(Conn2kStatus::NullPointer, &format!("{what} is null")))
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn conn2k_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Edgeless graph on `n` vertices. Never returns null.
#[no_mangle]
pub extern "C" fn conn2k_graph_new(n: usize) -> *mut Conn2kGraph {
    Box::into_raw(Box::new(Conn2kGraph { graph: CapGraph::new(n) }))
}

/// Parses an instance in the text format read by the command-line tool.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn conn2k_graph_parse(text: *const c_char, out: *mut *mut Conn2kGraph) -> Conn2kStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        *out = ptr::null_mut();
        if text.is_null() {
            return Err(fail(Conn2kStatus::NullPointer, "text is null"));
        }
        let text =
            CStr::from_ptr(text).to_str().map_err(|_| fail(Conn2kStatus::InvalidInput, "text is not valid UTF-8"))?;
        let graph = parse_instance(text).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(Conn2kGraph { graph }));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn conn2k_graph_free(g: *mut Conn2kGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn conn2k_graph_vertex_count(g: *const Conn2kGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// Capacity between `u` and `v`, 0 when absent or out of range.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn conn2k_graph_capacity(g: *const Conn2kGraph, u: usize, v: usize) -> u64 {
    match g.as_ref() {
        Some(g) if u < g.graph.n() && v < g.graph.n() => g.graph.capacity(u, v),
        _ => 0,
    }
}

/// Adds `cap` to the capacity between `u` and `v`.
///
/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn conn2k_graph_add_edge(g: *mut Conn2kGraph, u: usize, v: usize, cap: u64) -> Conn2kStatus {
    guard(|| {
        let g = deref_mut(g, "graph")?;
        g.graph.add_capacity(u, v, cap).map_err(lib_err)
    })
}

/// Writes whether `g` is (2,k)-connected to `out`.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn conn2k_check(g: *const Conn2kGraph, k: u64, out: *mut bool) -> Conn2kStatus {
    guard(|| {
        let g = deref(g, "graph")?;
        let out = deref_mut(out, "out")?;
        *out = is_2k_conn_in_v(&StarGraph::isolated(&g.graph), k).map_err(lib_err)?.ok;
        Ok(())
    })
}

/// Computes a minimum (2,k)-connected augmentation of `g`.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn conn2k_augment(
    g: *const Conn2kGraph,
    k: u64,
    algo: Conn2kAlgo,
    level: Conn2kAssertLevel,
    out: *mut *mut Conn2kResult,
) -> Conn2kStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        *out = ptr::null_mut();
        let g = deref(g, "graph")?;
        let algo = match algo {
            Conn2kAlgo::Fast => Algo::Fast,
            Conn2kAlgo::Naive => Algo::Naive,
        };
        let level = match level {
            Conn2kAssertLevel::Off => AssertLevel::Off,
            Conn2kAssertLevel::Cheap => AssertLevel::Cheap,
            Conn2kAssertLevel::Full => AssertLevel::Full,
        };
        let (graph, result) = augment(&g.graph, k, algo, level).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(Conn2kResult { graph, result }));
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a result handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn conn2k_result_free(r: *mut Conn2kResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Total added capacity, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn conn2k_result_total(r: *const Conn2kResult) -> u64 {
    r.as_ref().map_or(0, |r| r.result.total)
}

/// Number of distinct added edges, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn conn2k_result_edge_count(r: *const Conn2kResult) -> usize {
    r.as_ref().map_or(0, |r| r.result.added.len())
}

/// The `i`-th added edge, with `u < v`. Edges are sorted by endpoints.
///
/// # Safety
/// `r` must be a live result handle; `u`, `v` and `cap` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn conn2k_result_edge(
    r: *const Conn2kResult,
    i: usize,
    u: *mut usize,
    v: *mut usize,
    cap: *mut u64,
) -> Conn2kStatus {
    guard(|| {
        let r = deref(r, "result")?;
        let (u, v, cap) = (deref_mut(u, "u")?, deref_mut(v, "v")?, deref_mut(cap, "cap")?);
        let &(a, b, c) = r
            .result
            .added
            .get(i)
            .ok_or_else(|| fail(Conn2kStatus::OutOfRange, &format!("edge {i} of {}", r.result.added.len())))?;
        (*u, *v, *cap) = (a, b, c);
        Ok(())
    })
}

/// Number of maximal splitting operations performed, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn conn2k_result_maximal_splits(r: *const Conn2kResult) -> u64 {
    r.as_ref().map_or(0, |r| r.result.stats.maximal_splits)
}

/// A new graph handle holding a copy of the augmented graph. Free it with
/// [`conn2k_graph_free`]. Returns null for a null handle.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn conn2k_result_graph(r: *const Conn2kResult) -> *mut Conn2kGraph {
    match r.as_ref() {
        Some(r) => Box::into_raw(Box::new(Conn2kGraph { graph: r.graph.clone() })),
        None => ptr::null_mut(),
    }
}
