//! C ABI over `finring`.
//!
//! Objects cross the boundary as opaque handles (`FrRing`, `FrGraph`,
//! `FrPoly`) owned by the caller and released with the matching `*_free`.
//! Every fallible call returns an `FrStatus`; on failure the message is
//! available from `fr_last_error_message` on the same thread. Strings
//! returned through `char **` out-parameters must be released with
//! `fr_string_free`. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use finring::graph::{self, SimpleGraph};
use finring::poly::{self, NcPoly};
use finring::ring::{self, FiniteRing};
use finring::structure;
use finring::{atlas, limits, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    AxiomViolation = 5,
    ResourceCap = 6,
    Io = 7,
    Panic = 8,
}

pub struct FrRing(FiniteRing);
pub struct FrGraph(SimpleGraph);
pub struct FrPoly(NcPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(FrStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            _ if e.is_resource_cap() => FrStatus::ResourceCap,
            Error::AxiomViolation { .. } => FrStatus::AxiomViolation,
            Error::Parse { .. } | Error::Format { .. } => FrStatus::Parse,
            Error::Io(_) => FrStatus::Io,
            _ => FrStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> FrStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FrStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            FrStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(FrStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_box<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(FrStatus::InvalidArgument, "string contains NUL".into()))?;
    put(out, c.into_raw())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null("string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(FrStatus::InvalidUtf8, "string argument is not UTF-8".into()))
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next `fr_*` call on the same thread.
#[no_mangle]
pub extern "C" fn fr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn fr_set_enumeration_cap(cap: u64) -> FrStatus {
    guard(|| Ok(limits::set_enumeration_cap(cap)?))
}

#[no_mangle]
pub extern "C" fn fr_set_evaluation_budget(budget: u64) -> FrStatus {
    guard(|| Ok(limits::set_evaluation_budget(budget)?))
}

// ---- rings

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_zn(n: usize, out: *mut *mut FrRing) -> FrStatus {
    guard(|| {
        if n == 0 {
            return Err(Fail(FrStatus::InvalidArgument, "n must be positive".into()));
        }
        if n as u64 > limits::max_order() {
            return Err(Error::OrderCapExceeded {
                what: "ring order",
                order: n as u64,
                cap: limits::max_order(),
            }
            .into());
        }
        put_box(out, FrRing(ring::zn(n)))
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_gf(p: u64, k: u32, out: *mut *mut FrRing) -> FrStatus {
    guard(|| put_box(out, FrRing(ring::gf(p, k)?)))
}

/// Builds a ring from row-major `order * order` tables. Element 0 must be
/// the additive identity.
///
/// # Safety
/// `add` and `mul` must point to `order * order` readable values; `out` must
/// be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_from_tables(
    order: usize,
    add: *const usize,
    mul: *const usize,
    out: *mut *mut FrRing,
) -> FrStatus {
    guard(|| {
        if add.is_null() || mul.is_null() {
            return Err(null("table"));
        }
        let cells = order
            .checked_mul(order)
            .ok_or_else(|| Fail(FrStatus::InvalidArgument, "order too large".into()))?;
        let rows = |p: *const usize| -> Vec<Vec<usize>> {
            std::slice::from_raw_parts(p, cells)
                .chunks(order.max(1))
                .map(<[usize]>::to_vec)
                .collect()
        };
        put_box(out, FrRing(ring::make_ring(&rows(add), &rows(mul), None)?))
    })
}

/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_parse(text: *const c_char, out: *mut *mut FrRing) -> FrStatus {
    guard(|| put_box(out, FrRing(ring::parse_ringtab(read_str(text)?)?)))
}

/// # Safety
/// `r` must be a live ring handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_to_ringtab(r: *const FrRing, out: *mut *mut c_char) -> FrStatus {
    guard(|| put_string(out, ring::write_ringtab(&deref(r, "ring")?.0)))
}

/// # Safety
/// `a` and `b` must be live ring handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_direct_sum(a: *const FrRing, b: *const FrRing, out: *mut *mut FrRing) -> FrStatus {
    guard(|| put_box(out, FrRing(ring::direct_sum(&deref(a, "ring")?.0, &deref(b, "ring")?.0)?)))
}

/// Order of the ring, or 0 for NULL.
///
/// # Safety
/// `r` must be NULL or a live ring handle.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_order(r: *const FrRing) -> usize {
    r.as_ref().map_or(0, |r| r.0.order())
}

unsafe fn binop(r: *const FrRing, x: usize, y: usize, out: *mut usize, f: fn(&FiniteRing, usize, usize) -> usize) -> FrStatus {
    guard(|| {
        let r = &deref(r, "ring")?.0;
        if x >= r.order() || y >= r.order() {
            return Err(Fail(FrStatus::InvalidArgument, format!("element out of range 0..{}", r.order())));
        }
        put(out, f(r, x, y))
    })
}

/// # Safety
/// `r` must be a live ring handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_add(r: *const FrRing, x: usize, y: usize, out: *mut usize) -> FrStatus {
    binop(r, x, y, out, FiniteRing::add)
}

/// # Safety
/// `r` must be a live ring handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_mul(r: *const FrRing, x: usize, y: usize, out: *mut usize) -> FrStatus {
    binop(r, x, y, out, FiniteRing::mul)
}

/// Structure report as `key: value` lines.
///
/// # Safety
/// `r` must be a live ring handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_report(r: *const FrRing, out: *mut *mut c_char) -> FrStatus {
    guard(|| put_string(out, structure::structure_report(&deref(r, "ring")?.0)?.to_string()))
}

/// Canonical certificate in hex; equal strings mean isomorphic rings.
///
/// # Safety
/// `r` must be a live ring handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_certificate(r: *const FrRing, out: *mut *mut c_char) -> FrStatus {
    guard(|| put_string(out, structure::ring_canonical_certificate(&deref(r, "ring")?.0)?.to_hex()))
}

/// # Safety
/// `a` and `b` must be live ring handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_isomorphic(a: *const FrRing, b: *const FrRing, out: *mut bool) -> FrStatus {
    guard(|| {
        let found = structure::ring_isomorphic(&deref(a, "ring")?.0, &deref(b, "ring")?.0)?;
        put(out, found.is_some())
    })
}

/// # Safety
/// `r` must be NULL or a ring handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fr_ring_free(r: *mut FrRing) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

// ---- graphs

/// # Safety
/// `r` must be a live ring handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_zero_divisor_graph(r: *const FrRing, out: *mut *mut FrGraph) -> FrStatus {
    guard(|| put_box(out, FrGraph(graph::zero_divisor_graph(&deref(r, "ring")?.0))))
}

/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn fr_graph_vertex_count(g: *const FrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn fr_graph_edge_count(g: *const FrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be a live graph handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_graph_canonical_form(g: *const FrGraph, out: *mut *mut c_char) -> FrStatus {
    guard(|| put_string(out, graph::canonical_form(&deref(g, "graph")?.0)?.to_hex()))
}

/// # Safety
/// `g` must be a live graph handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_graph_to_dot(g: *const FrGraph, out: *mut *mut c_char) -> FrStatus {
    guard(|| put_string(out, graph::export_dot(&deref(g, "graph")?.0)))
}

/// # Safety
/// `g` and `h` must be live graph handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_graph_isomorphic(g: *const FrGraph, h: *const FrGraph, out: *mut bool) -> FrStatus {
    guard(|| {
        let found = graph::graph_isomorphic(&deref(g, "graph")?.0, &deref(h, "graph")?.0)?;
        put(out, found.is_some())
    })
}

/// # Safety
/// `g` must be NULL or a graph handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fr_graph_free(g: *mut FrGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

// ---- polynomials

/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_poly_parse(text: *const c_char, out: *mut *mut FrPoly) -> FrStatus {
    guard(|| put_box(out, FrPoly(poly::parse(read_str(text)?)?)))
}

/// # Safety
/// `p` must be a live polynomial handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_poly_render(p: *const FrPoly, out: *mut *mut c_char) -> FrStatus {
    guard(|| put_string(out, poly::render(&deref(p, "polynomial")?.0)))
}

/// Exhaustively checks `p = 0` on `r`. On failure, when `assignment` is not
/// NULL, the values of variables `1..=assignment_len` in the least
/// counterexample are written to it (unused variables get 0).
///
/// # Safety
/// `r` and `p` must be live handles; `holds` must be valid for writes;
/// `assignment` must be NULL or valid for `assignment_len` writes.
#[no_mangle]
pub unsafe extern "C" fn fr_identity_check(
    r: *const FrRing,
    p: *const FrPoly,
    holds: *mut bool,
    assignment: *mut usize,
    assignment_len: usize,
) -> FrStatus {
    guard(|| {
        let verdict = poly::satisfies_identity(&deref(r, "ring")?.0, &deref(p, "polynomial")?.0)?;
        if let (Some(cex), false) = (verdict.counterexample(), assignment.is_null()) {
            let slots = std::slice::from_raw_parts_mut(assignment, assignment_len);
            slots.fill(0);
            for &(v, x) in cex {
                if let Some(slot) = slots.get_mut(v as usize - 1) {
                    *slot = x;
                }
            }
        }
        put(holds, verdict.holds())
    })
}

/// # Safety
/// `p` must be NULL or a polynomial handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fr_poly_free(p: *mut FrPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

// ---- atlas

/// Number of isomorphism classes of rings of order `n`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_atlas_count(n: u64, out: *mut usize) -> FrStatus {
    guard(|| put(out, atlas::enumerate_rings(n)?.len()))
}

/// The `index`-th ring of order `n`, in atlas order.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_atlas_ring(n: u64, index: usize, out: *mut *mut FrRing) -> FrStatus {
    guard(|| {
        let entries = atlas::enumerate_rings(n)?;
        let entry = entries
            .get(index)
            .ok_or_else(|| Fail(FrStatus::InvalidArgument, format!("index {index} out of range 0..{}", entries.len())))?;
        put_box(out, FrRing(entry.ring.clone()))
    })
}
