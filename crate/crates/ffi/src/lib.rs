//! C ABI over `kgraph-cohn`.
//!
//! Graphs are opaque `KgGraph` handles. Every fallible call returns a
//! `KgStatus`; on failure `kg_last_error_message` describes the error on the
//! calling thread. Strings handed out are owned by the caller and released
//! with `kg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kgraph_cohn::algebra::CohnAlgebra;
use kgraph_cohn::graph::{omega, print_kg, to_dot};
use kgraph_cohn::json::{element_from_json, element_to_json, ElementJson};
use kgraph_cohn::ring::{CoefficientRing, RingSpec};
use kgraph_cohn::suite::graph_suite;
use kgraph_cohn::tgraph::build_tlambda;
use kgraph_cohn::{with_ring, Degree, Error, KGraph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KgStatus {
    Ok = 0,
    Parse = 1,
    Malformed = 2,
    IncompleteSquares = 3,
    CubeInconsistent = 4,
    NotComposable = 5,
    DegreeOutOfRange = 6,
    DegreeOverflow = 7,
    HasSources = 8,
    NotAtVertex = 9,
    MixedGraphs = 10,
    WindowTooSmall = 11,
    HypothesisFailed = 12,
    InvalidArgument = 13,
    Json = 14,
    Io = 15,
    NullPointer = 16,
    InvalidUtf8 = 17,
    Panic = 18,
}

impl From<&Error> for KgStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } => KgStatus::Parse,
            Error::Malformed(_) => KgStatus::Malformed,
            Error::IncompleteSquares(_) => KgStatus::IncompleteSquares,
            Error::CubeInconsistent(_) => KgStatus::CubeInconsistent,
            Error::NotComposable { .. } => KgStatus::NotComposable,
            Error::DegreeOutOfRange { .. } => KgStatus::DegreeOutOfRange,
            Error::DegreeOverflow => KgStatus::DegreeOverflow,
            Error::HasSources(_) => KgStatus::HasSources,
            Error::NotAtVertex(_) => KgStatus::NotAtVertex,
            Error::MixedGraphs => KgStatus::MixedGraphs,
            Error::WindowTooSmall { .. } => KgStatus::WindowTooSmall,
            Error::HypothesisFailed { .. } => KgStatus::HypothesisFailed,
            Error::InvalidArgument(_) => KgStatus::InvalidArgument,
            Error::Json(_) => KgStatus::Json,
            Error::Io(_) => KgStatus::Io,
        }
    }
}

/// Opaque graph handle.
pub struct KgGraph {
    inner: KGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(KgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(KgStatus::from(&e), format!("{}: {e}", e.code()))
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> KgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            KgStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            KgStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(KgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(KgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn graph_arg<'a>(g: *const KgGraph) -> Result<&'a KGraph, Failure> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| Failure(KgStatus::NullPointer, "graph is null".into()))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(KgStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(KgStatus::InvalidArgument, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_graph(out: *mut *mut KgGraph, g: KGraph) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(KgStatus::NullPointer, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(KgGraph { inner: g }));
    Ok(())
}

/// Parses a `.kg` skeleton and validates it.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kg_graph_parse(text: *const c_char, out: *mut *mut KgGraph) -> KgStatus {
    guard(|| {
        let g = KGraph::parse(str_arg(text, "text")?)?;
        put_graph(out, g)
    })
}

/// Builds the grid graph `Ω_{k,n}` for `n = (n[0], ..., n[k-1])`.
///
/// # Safety
/// `n` must point to `k` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kg_graph_omega(k: usize, n: *const u32, out: *mut *mut KgGraph) -> KgStatus {
    guard(|| {
        if n.is_null() || k == 0 {
            return Err(Failure(KgStatus::InvalidArgument, "need k >= 1 coordinates".into()));
        }
        let coords = std::slice::from_raw_parts(n, k).to_vec();
        let g = KGraph::from_presentation(&omega(k, &Degree::from_coords(coords)))?;
        put_graph(out, g)
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kg_graph_free(g: *mut KgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle or null (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn kg_graph_vertex_count(g: *const KgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// # Safety
/// `g` must be a live handle or null (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn kg_graph_edge_count(g: *const KgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// Writes the skeleton in `.kg` syntax.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kg_graph_print(g: *const KgGraph, out: *mut *mut c_char) -> KgStatus {
    guard(|| put_string(out, print_kg(&graph_arg(g)?.to_presentation())))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kg_graph_dot(g: *const KgGraph, out: *mut *mut c_char) -> KgStatus {
    guard(|| put_string(out, to_dot(graph_arg(g)?)))
}

/// Builds `TΛ`; fails with `HAS_SOURCES` when `Λ` has sources.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kg_tlambda_build(g: *const KgGraph, out: *mut *mut KgGraph) -> KgStatus {
    guard(|| {
        let t = KGraph::from_presentation(&build_tlambda(graph_arg(g)?)?)?;
        put_graph(out, t)
    })
}

fn ring_arg(s: &str) -> Result<RingSpec, Failure> {
    Ok(s.parse::<RingSpec>()?)
}

fn fproj<R: CoefficientRing>(g: &KGraph, ring: R, v: &str) -> Result<String, Failure> {
    let alg = CohnAlgebra::new(g.clone(), ring);
    let v = g.vertex_id(v).ok_or_else(|| Failure(KgStatus::InvalidArgument, format!("unknown vertex `{v}`")))?;
    Ok(serde_json::to_string(&element_to_json(&alg, &alg.f_idempotent(v))).map_err(Error::from)?)
}

/// `F_v` as element JSON over the ring `Z`, `Q` or `Zmod:n`.
///
/// # Safety
/// Pointers must be valid NUL-terminated strings / a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kg_fproj_json(
    g: *const KgGraph,
    ring: *const c_char,
    vertex: *const c_char,
    out: *mut *mut c_char,
) -> KgStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let v = str_arg(vertex, "vertex")?;
        let s = with_ring!(ring_arg(str_arg(ring, "ring")?)?, r => fproj(g, r, v))?;
        put_string(out, s)
    })
}

fn mult<R: CoefficientRing>(g: &KGraph, ring: R, a: &ElementJson, b: &ElementJson) -> Result<String, Failure> {
    let alg = CohnAlgebra::new(g.clone(), ring);
    let p = alg.mul(&element_from_json(&alg, a)?, &element_from_json(&alg, b)?);
    Ok(serde_json::to_string(&element_to_json(&alg, &p)).map_err(Error::from)?)
}

/// Product of two elements in element JSON; the ring comes from `a`.
///
/// # Safety
/// Pointers must be valid NUL-terminated strings / a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kg_mult_json(
    g: *const KgGraph,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> KgStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let a = ElementJson::parse(str_arg(a, "a")?)?;
        let b = ElementJson::parse(str_arg(b, "b")?)?;
        let s = with_ring!(a.ring_spec()?, r => mult(g, r, &a, &b))?;
        put_string(out, s)
    })
}

/// Runs the property suite and returns its JSON report. A failing property
/// still returns `KG_STATUS_OK`; read `"pass"` in the report.
///
/// # Safety
/// Pointers must be valid NUL-terminated strings / a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kg_suite_json(
    g: *const KgGraph,
    ring: *const c_char,
    bound: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> KgStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let bound = Degree::parse(str_arg(bound, "bound")?)?;
        let report = with_ring!(ring_arg(str_arg(ring, "ring")?)?, r => graph_suite(g, r, &bound, seed))?;
        put_string(out, serde_json::to_string(&report).map_err(Error::from)?)
    })
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn kg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
