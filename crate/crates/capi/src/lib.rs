//! C ABI for the matshift library.
//!
//! Ideals and matroids are exposed as opaque handles created from the same
//! JSON documents the CLI uses; every computation reports an [`MsStatus`]
//! and detailed messages are available from [`ms_last_error_message`].
//! Strings returned by this library are heap-allocated and must be
//! released with [`ms_string_free`]; handles with the matching `_free`
//! function. Handles are immutable, so sharing them across threads for
//! reads is safe; the error message store is per thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use matshift::betti_oracle::{betti_table_oracle, ORACLE_MAX_VARS};
use matshift::ideal::{IdealError, IdealParseError};
use matshift::linear_quotients::{verify_theorem, LinearQuotientsOrder};
use matshift::{Matroid, MonomialIdeal};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MsStatus {
    /// Success.
    MsOk = 0,
    /// A required pointer argument was null.
    MsNullArgument = 1,
    /// An input string was not valid UTF-8.
    MsInvalidUtf8 = 2,
    /// A JSON document failed to parse.
    MsParseError = 3,
    /// The input parsed but violated a structural requirement.
    MsValidationError = 4,
    /// The generators are not the bases of a matroid.
    MsNotMatroidal = 5,
    /// The ideal has no linear quotients in lexicographic order.
    MsLinearQuotients = 6,
    /// The ground set exceeds the homology-oracle cap.
    MsOracleCap = 7,
}

/// Opaque handle to a squarefree monomial ideal.
pub struct MsIdeal {
    inner: MonomialIdeal,
}

/// Opaque handle to a matroid.
pub struct MsMatroid {
    inner: Matroid,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let stored = CString::new(message).unwrap_or_else(|_| c"invalid error text".to_owned());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(status: MsStatus, message: impl Into<String>) -> MsStatus {
    set_error(message.into());
    status
}

fn leak_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn read_utf8<'a>(input: *const c_char) -> Result<&'a str, MsStatus> {
    if input.is_null() {
        return Err(fail(MsStatus::MsNullArgument, "input string is null"));
    }
    CStr::from_ptr(input)
        .to_str()
        .map_err(|e| fail(MsStatus::MsInvalidUtf8, format!("input is not UTF-8: {e}")))
}

/// Message for the most recent failure on this thread, or null when the
/// last call succeeded. The caller frees the string with `ms_string_free`.
#[no_mangle]
pub extern "C" fn ms_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow().as_ref().map_or(ptr::null_mut(), |s| leak_string(s.to_string_lossy().into_owned()))
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must have been returned by a function of this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn ms_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an ideal document `{"n":3,"generators":[[1,2],...]}` into a new
/// handle; the generating set is minimalized on ingestion.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_ideal_from_json(
    json: *const c_char,
    out: *mut *mut MsIdeal,
) -> MsStatus {
    clear_error();
    if out.is_null() {
        return fail(MsStatus::MsNullArgument, "output pointer is null");
    }
    let text = match read_utf8(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match MonomialIdeal::from_json(text) {
        Ok(ideal) => {
            *out = Box::into_raw(Box::new(MsIdeal { inner: ideal }));
            MsStatus::MsOk
        }
        Err(IdealParseError::Json(e)) => fail(MsStatus::MsParseError, e.to_string()),
        Err(IdealParseError::Invalid(e)) => fail(MsStatus::MsValidationError, e.to_string()),
    }
}

/// Serializes the ideal back to its JSON document.
///
/// # Safety
/// `ideal` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ms_ideal_to_json(ideal: *const MsIdeal) -> *mut c_char {
    if ideal.is_null() {
        return ptr::null_mut();
    }
    leak_string((*ideal).inner.to_json())
}

/// # Safety
/// `ideal` must be a handle from this library, not yet freed; null is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn ms_ideal_free(ideal: *mut MsIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Parses a matroid document: explicit bases `{"n":4,"bases":[...]}` or a
/// constructor `{"uniform":{"r":2,"n":4}}`, `{"graphic":{...}}`,
/// `{"transversal":{...}}`.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_matroid_from_json(
    json: *const c_char,
    out: *mut *mut MsMatroid,
) -> MsStatus {
    clear_error();
    if out.is_null() {
        return fail(MsStatus::MsNullArgument, "output pointer is null");
    }
    let text = match read_utf8(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match Matroid::from_json(text) {
        Ok(matroid) => {
            *out = Box::into_raw(Box::new(MsMatroid { inner: matroid }));
            MsStatus::MsOk
        }
        Err(matshift::matroid::MatroidParseError::Json(e)) => {
            fail(MsStatus::MsParseError, e.to_string())
        }
        Err(matshift::matroid::MatroidParseError::Invalid(e)) => {
            fail(MsStatus::MsValidationError, e.to_string())
        }
    }
}

/// # Safety
/// `matroid` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ms_matroid_to_json(matroid: *const MsMatroid) -> *mut c_char {
    if matroid.is_null() {
        return ptr::null_mut();
    }
    leak_string((*matroid).inner.to_json())
}

/// # Safety
/// `matroid` must be a handle from this library, not yet freed; null is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn ms_matroid_free(matroid: *mut MsMatroid) {
    if !matroid.is_null() {
        drop(Box::from_raw(matroid));
    }
}

/// The matroidal ideal of a matroid: one generator per basis.
///
/// # Safety
/// `matroid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_matroid_ideal(
    matroid: *const MsMatroid,
    out: *mut *mut MsIdeal,
) -> MsStatus {
    clear_error();
    if matroid.is_null() || out.is_null() {
        return fail(MsStatus::MsNullArgument, "null argument");
    }
    let ideal = MonomialIdeal::from_matroid(&(*matroid).inner);
    *out = Box::into_raw(Box::new(MsIdeal { inner: ideal }));
    MsStatus::MsOk
}

/// Tests whether the generator supports form the bases of a matroid. On
/// success writes a matroid handle to `out` (which may be null if the
/// handle is not wanted); on `MS_NOT_MATROIDAL` the exchange-property
/// witness is available from `ms_last_error_message`.
///
/// # Safety
/// `ideal` must be a live handle; `out`, when non-null, a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_ideal_is_matroidal(
    ideal: *const MsIdeal,
    out: *mut *mut MsMatroid,
) -> MsStatus {
    clear_error();
    if ideal.is_null() {
        return fail(MsStatus::MsNullArgument, "ideal handle is null");
    }
    match (*ideal).inner.is_matroidal() {
        Ok(matroid) => {
            if !out.is_null() {
                *out = Box::into_raw(Box::new(MsMatroid { inner: matroid }));
            }
            MsStatus::MsOk
        }
        Err(IdealError::NotMatroidal(w)) => fail(MsStatus::MsNotMatroidal, w.to_string()),
        Err(e) => fail(MsStatus::MsValidationError, e.to_string()),
    }
}

/// The adjacency ideal, generated by the least common multiples of
/// generator pairs at distance one (the zero ideal when none exist).
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_ideal_adjacency(
    ideal: *const MsIdeal,
    out: *mut *mut MsIdeal,
) -> MsStatus {
    clear_error();
    if ideal.is_null() || out.is_null() {
        return fail(MsStatus::MsNullArgument, "null argument");
    }
    match (*ideal).inner.adjacency_ideal() {
        Ok(adjacency) => {
            *out = Box::into_raw(Box::new(MsIdeal { inner: adjacency }));
            MsStatus::MsOk
        }
        Err(e) => fail(MsStatus::MsValidationError, e.to_string()),
    }
}

/// The `ell`-th shift ideal under the lexicographic linear-quotients
/// order; the zero ideal when `ell` exceeds the projective dimension.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_ideal_shift(
    ideal: *const MsIdeal,
    ell: u32,
    out: *mut *mut MsIdeal,
) -> MsStatus {
    clear_error();
    if ideal.is_null() || out.is_null() {
        return fail(MsStatus::MsNullArgument, "null argument");
    }
    match LinearQuotientsOrder::new_lex(&(*ideal).inner) {
        Ok(lq) => {
            *out = Box::into_raw(Box::new(MsIdeal { inner: lq.shifts(ell).ideal }));
            MsStatus::MsOk
        }
        Err(e) => fail(MsStatus::MsLinearQuotients, e.to_string()),
    }
}

/// The projective dimension under the lexicographic linear-quotients
/// order.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_ideal_projdim(ideal: *const MsIdeal, out: *mut u32) -> MsStatus {
    clear_error();
    if ideal.is_null() || out.is_null() {
        return fail(MsStatus::MsNullArgument, "null argument");
    }
    match LinearQuotientsOrder::new_lex(&(*ideal).inner) {
        Ok(lq) => {
            *out = lq.projdim();
            MsStatus::MsOk
        }
        Err(e) => fail(MsStatus::MsLinearQuotients, e.to_string()),
    }
}

/// The multigraded Betti table as JSON
/// `{"entries":[{"i":1,"a":[1,2,3],"mult":2}]}`. With `use_oracle` the
/// table is computed by the simplicial-homology oracle instead of the
/// linear-quotients resolution; that path requires at most 14 variables.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_ideal_betti_json(
    ideal: *const MsIdeal,
    use_oracle: bool,
    out: *mut *mut c_char,
) -> MsStatus {
    clear_error();
    if ideal.is_null() || out.is_null() {
        return fail(MsStatus::MsNullArgument, "null argument");
    }
    let inner = &(*ideal).inner;
    let table = if use_oracle {
        if inner.ground().size() > ORACLE_MAX_VARS {
            return fail(
                MsStatus::MsOracleCap,
                format!("ground set {} exceeds the oracle cap {ORACLE_MAX_VARS}", inner.ground().size()),
            );
        }
        match betti_table_oracle(inner) {
            Ok(table) => table,
            Err(e) => return fail(MsStatus::MsOracleCap, e.to_string()),
        }
    } else {
        match LinearQuotientsOrder::new_lex(inner) {
            Ok(lq) => lq.betti_table(),
            Err(e) => return fail(MsStatus::MsLinearQuotients, e.to_string()),
        }
    };
    *out = leak_string(table.to_json());
    MsStatus::MsOk
}

/// Runs the full verification (every shift ideal matroidal, shift ideals
/// equal iterated adjacency ideals) and returns the report as JSON. A
/// non-matroidal input is not an error: the report marks the checks
/// inapplicable.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_ideal_verify_json(
    ideal: *const MsIdeal,
    out: *mut *mut c_char,
) -> MsStatus {
    clear_error();
    if ideal.is_null() || out.is_null() {
        return fail(MsStatus::MsNullArgument, "null argument");
    }
    let report = verify_theorem(&(*ideal).inner);
    *out = leak_string(report.to_json());
    MsStatus::MsOk
}
