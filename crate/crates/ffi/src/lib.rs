//! C ABI over the gspline library.
//!
//! Graphs are opaque `GsplineGraph` handles built from the same JSON graph
//! documents the command line reads. Every call returns a `GsplineStatus`;
//! results come back through out-pointers, and structured results are JSON
//! strings that the caller releases with `gspline_string_free`. After a
//! failure `gspline_last_error` describes it (per thread).
//!
//! Vertex positions are 1-based, as on the command line.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gspline::basis::{self, BasisError};
use gspline::document::{AnyGraph, BasisReport, DocumentError, SelectionReport, SplineDocument};
use gspline::graph::LabeledGraph;
use gspline::ring::GcdDomain;
use gspline::spline::{self, SplineError};
use serde_json::json;

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GsplineStatus {
    Ok = 0,
    /// The question had a negative answer (not a spline, not a basis).
    Negative = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    /// Malformed document, unknown vertex, bad selection and the like.
    InvalidInput = 4,
    /// The operation is not available for this coefficient domain.
    Unsupported = 5,
    /// A computation bound was hit or an internal check failed.
    Failed = 6,
    Panic = 7,
}

/// Opaque graph handle.
pub struct GsplineGraph {
    inner: AnyGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(GsplineStatus, String);

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure(GsplineStatus::InvalidInput, e.to_string())
    }
}

impl From<SplineError> for Failure {
    fn from(e: SplineError) -> Self {
        let status = match e {
            SplineError::Graph(gspline::graph::GraphError::TrailLimitExceeded(_))
            | SplineError::ConstructionFailed(_) => GsplineStatus::Failed,
            _ => GsplineStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

impl From<BasisError> for Failure {
    fn from(e: BasisError) -> Self {
        match e {
            BasisError::Spline(s) => s.into(),
            BasisError::Inexact { .. } | BasisError::FlowupMismatch { .. } | BasisError::Singular => {
                Failure(GsplineStatus::Failed, e.to_string())
            }
            _ => Failure(GsplineStatus::InvalidInput, e.to_string()),
        }
    }
}

fn set_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("nul bytes removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `body`, records its error message and maps panics to `Panic`.
fn guard(body: impl FnOnce() -> Result<GsplineStatus, Failure>) -> GsplineStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => {
            set_error(None);
            status
        }
        Ok(Err(Failure(status, message))) => {
            set_error(Some(message));
            status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            GsplineStatus::Panic
        }
    }
}

unsafe fn text<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(Failure(GsplineStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| Failure(GsplineStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn graph<'a>(handle: *const GsplineGraph) -> Result<&'a AnyGraph, Failure> {
    handle
        .as_ref()
        .map(|g| &g.inner)
        .ok_or_else(|| Failure(GsplineStatus::NullArgument, "graph is null".into()))
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(GsplineStatus::NullArgument, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

unsafe fn write_json(out: *mut *mut c_char, value: &serde_json::Value) -> Result<GsplineStatus, Failure> {
    let s = CString::new(value.to_string()).expect("JSON text has no nul bytes");
    *out = s.into_raw();
    Ok(GsplineStatus::Ok)
}

fn position(one_based: usize, n: usize) -> Result<usize, Failure> {
    if (1..=n).contains(&one_based) {
        Ok(one_based - 1)
    } else {
        Err(Failure(
            GsplineStatus::InvalidInput,
            format!("vertex {one_based} out of range 1..={n}"),
        ))
    }
}

macro_rules! on_graph {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            AnyGraph::Int($g) => $body,
            AnyGraph::Poly($g) => $body,
        }
    };
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gspline_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next gspline call on the same thread.
#[no_mangle]
pub extern "C" fn gspline_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a graph document. On success `*out` owns a handle to release with
/// `gspline_graph_free`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gspline_graph_from_json(
    json: *const c_char,
    out: *mut *mut GsplineGraph,
) -> GsplineStatus {
    guard(|| {
        check_out(out)?;
        let inner = gspline::document::load_graph(text(json, "json")?)?;
        *out = Box::into_raw(Box::new(GsplineGraph { inner }));
        Ok(GsplineStatus::Ok)
    })
}

/// # Safety
/// `graph` must be null or a handle from `gspline_graph_from_json` that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn gspline_graph_free(graph: *mut GsplineGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gspline_graph_vertex_count(
    graph: *const GsplineGraph,
    out: *mut usize,
) -> GsplineStatus {
    guard(|| {
        check_out(out)?;
        *out = self::graph(graph)?.vertex_count();
        Ok(GsplineStatus::Ok)
    })
}

/// Caps trail enumeration for later calls on this handle.
///
/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gspline_graph_set_trail_limit(
    graph: *mut GsplineGraph,
    limit: usize,
) -> GsplineStatus {
    guard(|| {
        let handle = graph
            .as_mut()
            .ok_or_else(|| Failure(GsplineStatus::NullArgument, "graph is null".into()))?;
        handle.inner = handle.inner.clone().with_trail_limit(limit);
        Ok(GsplineStatus::Ok)
    })
}

/// Checks a spline document (`{"values": [...]}`). Returns `Ok` for a
/// spline and `Negative` otherwise.
///
/// # Safety
/// `graph` must be a live handle and `values_json` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn gspline_is_spline(
    graph: *const GsplineGraph,
    values_json: *const c_char,
) -> GsplineStatus {
    guard(|| {
        let doc = SplineDocument::from_json(text(values_json, "values_json")?)?;
        let ok = on_graph!(self::graph(graph)?, g => {
            spline::is_spline(g, &doc.parse_values()?)?
        });
        Ok(if ok { GsplineStatus::Ok } else { GsplineStatus::Negative })
    })
}

fn invariants_json<R: GcdDomain>(g: &LabeledGraph<R>) -> Result<serde_json::Value, Failure> {
    let lcms = spline::vertex_lcms(g)?;
    Ok(json!({
        "domain": R::DOMAIN,
        "vertex_lcms": lcms.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "q_g": spline::q_g(g)?.to_string(),
    }))
}

/// Writes `{"domain", "vertex_lcms", "q_g"}` to `*out`.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gspline_invariants(
    graph: *const GsplineGraph,
    out: *mut *mut c_char,
) -> GsplineStatus {
    guard(|| {
        check_out(out)?;
        let value = on_graph!(self::graph(graph)?, g => invariants_json(g)?);
        write_json(out, &value)
    })
}

fn selections_json<R: GcdDomain>(
    g: &LabeledGraph<R>,
    vertex: usize,
) -> Result<serde_json::Value, Failure> {
    let i = position(vertex, g.vertex_count())?;
    let reports: Vec<SelectionReport> = spline::minimal_selections(g, i)?
        .iter()
        .enumerate()
        .map(|(k, s)| SelectionReport::new(g, k + 1, s))
        .collect();
    Ok(json!({
        "vertex": vertex,
        "vertex_lcm": spline::zero_trail_lcm(g, i)?.to_string(),
        "selections": reports,
    }))
}

/// Minimal selections of an interior vertex as JSON. With `complete` set
/// they are taken on the completed graph, which is what
/// `gspline_construct` numbers.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gspline_selections(
    graph: *const GsplineGraph,
    vertex: usize,
    complete: bool,
    out: *mut *mut c_char,
) -> GsplineStatus {
    guard(|| {
        check_out(out)?;
        let value = on_graph!(self::graph(graph)?, g => {
            if complete {
                selections_json(&g.completion(), vertex)?
            } else {
                selections_json(g, vertex)?
            }
        });
        write_json(out, &value)
    })
}

/// Constructed spline for `vertex` as a spline document. `selection` is the
/// 1-based id of a minimal selection of the completion, or 0 for the first
/// and last vertex.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gspline_construct(
    graph: *const GsplineGraph,
    vertex: usize,
    selection: usize,
    out: *mut *mut c_char,
) -> GsplineStatus {
    guard(|| {
        check_out(out)?;
        let selection = (selection != 0).then_some(selection);
        let doc = on_graph!(self::graph(graph)?, g => {
            let i = position(vertex, g.vertex_count())?;
            SplineDocument::from_values(spline::construct_for_vertex(g, i, selection)?.values())
        });
        write_json(out, &json!(doc))
    })
}

/// Basis criterion for a JSON array of spline documents. The report
/// `{"determinant", "q_g", "quotient", "is_basis"}` is written to `*out`;
/// the status is `Ok` for a basis and `Negative` otherwise.
///
/// # Safety
/// `graph` must be a live handle, `splines_json` a nul-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gspline_check_basis(
    graph: *const GsplineGraph,
    splines_json: *const c_char,
    out: *mut *mut c_char,
) -> GsplineStatus {
    guard(|| {
        check_out(out)?;
        let docs: Vec<SplineDocument> = serde_json::from_str(text(splines_json, "splines_json")?)
            .map_err(|e| Failure(GsplineStatus::InvalidInput, e.to_string()))?;
        let report = on_graph!(self::graph(graph)?, g => {
            let candidates = docs
                .iter()
                .map(|d| d.parse_values())
                .collect::<Result<Vec<_>, _>>()?;
            BasisReport::from(&basis::check_basis(g, &candidates)?)
        });
        let status = if report.is_basis {
            GsplineStatus::Ok
        } else {
            GsplineStatus::Negative
        };
        write_json(out, &json!(report))?;
        Ok(status)
    })
}

/// Integer flow-up basis as `{"diagonal", "splines"}`. Integer graphs only.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gspline_flowup(
    graph: *const GsplineGraph,
    out: *mut *mut c_char,
) -> GsplineStatus {
    guard(|| {
        check_out(out)?;
        let AnyGraph::Int(g) = self::graph(graph)? else {
            return Err(Failure(
                GsplineStatus::Unsupported,
                "flow-up bases are computed over the integers only".into(),
            ));
        };
        let basis = basis::flowup_basis(g)?;
        let diagonal: Vec<String> = basis
            .iter()
            .enumerate()
            .map(|(i, s)| s.values()[i].to_string())
            .collect();
        let splines: Vec<SplineDocument> = basis
            .iter()
            .map(|s| SplineDocument::from_values(s.values()))
            .collect();
        write_json(out, &json!({ "diagonal": diagonal, "splines": splines }))
    })
}

/// Releases a string returned through an out-pointer.
///
/// # Safety
/// `s` must be null or a string produced by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn gspline_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
