//! C interface to `latcon`.
//!
//! Lattices are passed around as opaque `LatconLattice` handles created by
//! the constructor functions and released with `latcon_lattice_free`.
//! Every fallible call returns a `LatconStatus`; on failure a description
//! is available from `latcon_last_error` on the same thread. Strings handed
//! out by the library are released with `latcon_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use latcon::cli::{emit_dot, parse_lattice_file, serialize_lattice};
use latcon::congruence::{con_count, has_many_congruences};
use latcon::lattice::{make_boolean, make_chain, make_l_family, make_mk};
use latcon::planarity::{
    is_dismantlable, is_planar_graph_oracle, is_planar_kr, kr_catalog, CATALOG_LIMIT,
};
use latcon::{Error, Lattice};

/// Opaque lattice handle.
pub struct LatconLattice(Lattice);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatconStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Cycle = 4,
    NotLattice = 5,
    Index = 6,
    Size = 7,
    UnknownFamily = 8,
    Internal = 99,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatconPlanarityMethod {
    /// Forbidden-subposet test.
    ForbiddenSubposet = 0,
    /// Planarity of the cover graph plus a bottom-top edge.
    CoverGraph = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> LatconStatus {
    match e {
        Error::Parse { .. } => LatconStatus::Parse,
        Error::Cycle(..) => LatconStatus::Cycle,
        Error::NotLattice { .. } | Error::EmptyLattice(_) => LatconStatus::NotLattice,
        Error::Index { .. } => LatconStatus::Index,
        Error::Size(_) | Error::CapExceeded { .. } => LatconStatus::Size,
        Error::Usage(_) => LatconStatus::UnknownFamily,
        _ => LatconStatus::Internal,
    }
}

/// Runs `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (LatconStatus, String)>) -> LatconStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            LatconStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LatconStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (LatconStatus, String) {
    (status_of(&e), format!("{}: {e}", e.kind()))
}

fn null(what: &str) -> (LatconStatus, String) {
    (LatconStatus::NullArgument, format!("{what} is null"))
}

unsafe fn handle<'a>(l: *const LatconLattice) -> Result<&'a Lattice, (LatconStatus, String)> {
    l.as_ref().map(|h| &h.0).ok_or_else(|| null("lattice"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, (LatconStatus, String)> {
    if s.is_null() {
        return Err(null("string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (LatconStatus::InvalidUtf8, "string is not UTF-8".to_string()))
}

unsafe fn store(out: *mut *mut LatconLattice, l: Lattice) -> Result<(), (LatconStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(LatconLattice(l)));
    Ok(())
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), (LatconStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = value;
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (LatconStatus, String)> {
    let c = CString::new(s).map_err(|_| (LatconStatus::Internal, "interior nul".to_string()))?;
    put(out, c.into_raw())
}

/// Parses the lattice text format (element count, then one `i j` pair per
/// line).
///
/// # Safety
/// `text_in` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn latcon_lattice_parse(
    text_in: *const c_char,
    out: *mut *mut LatconLattice,
) -> LatconStatus {
    guard(|| {
        let l = parse_lattice_file(text(text_in)?).map_err(lib_err)?;
        store(out, l)
    })
}

/// Builds a lattice from `pair_count` order pairs stored as
/// `pairs[2k] < pairs[2k + 1]`.
///
/// # Safety
/// `pairs` must point to `2 * pair_count` values (it may be null when
/// `pair_count` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn latcon_lattice_from_covers(
    n: usize,
    pairs: *const usize,
    pair_count: usize,
    out: *mut *mut LatconLattice,
) -> LatconStatus {
    guard(|| {
        let flat: &[usize] = if pair_count == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null("pairs"));
        } else {
            std::slice::from_raw_parts(pairs, 2 * pair_count)
        };
        let list: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
        let l = Lattice::from_covers(n, &list).map_err(lib_err)?;
        store(out, l)
    })
}

/// Standard lattices: `chain`, `boolean`, `mk` and `lfamily` take `param`;
/// any other name is looked up among the forbidden lattices (`A_0`, `E_1`,
/// ...), ignoring `param`.
///
/// # Safety
/// `family` must be a nul-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn latcon_make_family(
    family: *const c_char,
    param: usize,
    out: *mut *mut LatconLattice,
) -> LatconStatus {
    guard(|| {
        let name = text(family)?;
        let l = match name {
            "chain" => make_chain(param),
            "boolean" => make_boolean(param),
            "mk" => make_mk(param),
            "lfamily" => make_l_family(param),
            other => kr_catalog(CATALOG_LIMIT).and_then(|entries| {
                entries
                    .into_iter()
                    .find(|e| e.name == other)
                    .map(|e| e.lattice)
                    .ok_or_else(|| Error::Usage(format!("unknown family {other}")))
            }),
        }
        .map_err(lib_err)?;
        store(out, l)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `l` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn latcon_lattice_free(l: *mut LatconLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn latcon_lattice_size(l: *const LatconLattice) -> usize {
    l.as_ref().map_or(0, |h| h.0.len())
}

/// Number of congruences. It never exceeds `2^63` for the supported sizes.
///
/// # Safety
/// `l` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn latcon_con_count(l: *const LatconLattice, out: *mut u64) -> LatconStatus {
    guard(|| {
        let count = con_count(handle(l)?);
        let count = u64::try_from(count)
            .map_err(|_| (LatconStatus::Size, "count exceeds 64 bits".to_string()))?;
        put(out, count)
    })
}

/// # Safety
/// `l` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn latcon_is_planar(
    l: *const LatconLattice,
    method: LatconPlanarityMethod,
    out: *mut bool,
) -> LatconStatus {
    guard(|| {
        let l = handle(l)?;
        let planar = match method {
            LatconPlanarityMethod::ForbiddenSubposet => is_planar_kr(l).planar,
            LatconPlanarityMethod::CoverGraph => is_planar_graph_oracle(l),
        };
        put(out, planar)
    })
}

/// # Safety
/// `l` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn latcon_is_dismantlable(
    l: *const LatconLattice,
    out: *mut bool,
) -> LatconStatus {
    guard(|| put(out, is_dismantlable(handle(l)?)))
}

/// Whether the lattice has more than `2^(n-5)` congruences.
///
/// # Safety
/// `l` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn latcon_has_many_congruences(
    l: *const LatconLattice,
    out: *mut bool,
) -> LatconStatus {
    guard(|| put(out, has_many_congruences(handle(l)?)))
}

/// DOT text of the Hasse diagram; free with `latcon_string_free`.
///
/// # Safety
/// `l` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn latcon_lattice_to_dot(
    l: *const LatconLattice,
    out: *mut *mut c_char,
) -> LatconStatus {
    guard(|| put_string(out, emit_dot(handle(l)?)))
}

/// The lattice in the text format; free with `latcon_string_free`.
///
/// # Safety
/// `l` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn latcon_lattice_serialize(
    l: *const LatconLattice,
    out: *mut *mut c_char,
) -> LatconStatus {
    guard(|| put_string(out, serialize_lattice(handle(l)?)))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn latcon_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after a
/// success. Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn latcon_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn latcon_status_name(status: LatconStatus) -> *const c_char {
    let name: &'static CStr = match status {
        LatconStatus::Ok => c"ok",
        LatconStatus::NullArgument => c"null argument",
        LatconStatus::InvalidUtf8 => c"invalid utf-8",
        LatconStatus::Parse => c"parse error",
        LatconStatus::Cycle => c"cycle",
        LatconStatus::NotLattice => c"not a lattice",
        LatconStatus::Index => c"index out of range",
        LatconStatus::Size => c"size out of range",
        LatconStatus::UnknownFamily => c"unknown family",
        LatconStatus::Internal => c"internal error",
    };
    name.as_ptr()
}
