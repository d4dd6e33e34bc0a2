//! C ABI for the crnshape library.
//!
//! Conventions: every fallible call returns a [`CrnStatus`] and writes its
//! result through an out pointer; `CRN_STATUS_OK` means the out value is
//! valid. Strings returned through out pointers are NUL-terminated, owned by
//! the caller, and must be released with [`crn_string_free`]. Network
//! handles are opaque and released with [`crn_network_free`]. On any error
//! a thread-local message is set, readable via [`crn_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use crnshape::classify::VarietyClass;
use crnshape::enumeration::{census, enumerate_networks};
use crnshape::mass_action::RateAssignment;
use crnshape::network::Network;
use crnshape::oracle::{sample_variety, OracleConfig};
use crnshape::parse::parse_network;
use crnshape::report::{analyze, sample_csv, AnalyzeOptions};
use crnshape::AnalysisError;

/// Result of a crnshape call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrnStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    Unsupported = 3,
    InvalidArgument = 4,
    Utf8Error = 5,
}

/// Opaque handle to a parsed reaction network.
pub struct CrnNetwork {
    inner: Network,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<Vec<u8>>) {
    let cstring = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn analysis_status(e: &AnalysisError) -> CrnStatus {
    match e {
        AnalysisError::Unsupported(_)
        | AnalysisError::EmptyPssv
        | AnalysisError::NotTwoReactions(_)
        | AnalysisError::NotTwoSpecies(_)
        | AnalysisError::NotTwoColumns(_) => CrnStatus::Unsupported,
        AnalysisError::NonPositiveRate | AnalysisError::RateCountMismatch { .. } => {
            CrnStatus::InvalidArgument
        }
    }
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> CrnStatus {
    match CString::new(text) {
        Ok(cstring) => {
            *out = cstring.into_raw();
            CrnStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL byte");
            CrnStatus::Utf8Error
        }
    }
}

unsafe fn rates_from_raw(
    rates: *const f64,
    n_rates: usize,
    expected: usize,
) -> Result<Option<RateAssignment>, CrnStatus> {
    if rates.is_null() {
        return Ok(None);
    }
    if n_rates != expected {
        set_error(format!("expected {expected} rate constants, got {n_rates}"));
        return Err(CrnStatus::InvalidArgument);
    }
    let values = std::slice::from_raw_parts(rates, n_rates).to_vec();
    match RateAssignment::new(values) {
        Ok(r) => Ok(Some(r)),
        Err(e) => {
            set_error(e.to_string());
            Err(CrnStatus::InvalidArgument)
        }
    }
}

/// Message describing the most recent error on this thread, or NULL.
/// The pointer stays valid until the next crnshape call on the thread.
#[no_mangle]
pub extern "C" fn crn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |message| message.as_ptr())
    })
}

/// Parse a network from the reaction text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crn_network_parse(
    text: *const c_char,
    out: *mut *mut CrnNetwork,
) -> CrnStatus {
    if text.is_null() || out.is_null() {
        set_error("null pointer argument");
        return CrnStatus::NullPointer;
    }
    clear_error();
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        set_error("input is not valid UTF-8");
        return CrnStatus::Utf8Error;
    };
    match parse_network(text) {
        Ok(network) => {
            *out = Box::into_raw(Box::new(CrnNetwork { inner: network }));
            CrnStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            CrnStatus::ParseError
        }
    }
}

/// Release a network handle. NULL is ignored.
///
/// # Safety
/// `net` must have come from [`crn_network_parse`] and not been freed.
#[no_mangle]
pub unsafe extern "C" fn crn_network_free(net: *mut CrnNetwork) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `text` must have been returned by a crnshape call and not been freed.
#[no_mangle]
pub unsafe extern "C" fn crn_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Number of species in the network.
///
/// # Safety
/// `net` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn crn_network_species_count(
    net: *const CrnNetwork,
    out: *mut usize,
) -> CrnStatus {
    if net.is_null() || out.is_null() {
        set_error("null pointer argument");
        return CrnStatus::NullPointer;
    }
    *out = (*net).inner.species_count();
    CrnStatus::Ok
}

/// Number of reactions in the network.
///
/// # Safety
/// `net` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn crn_network_reaction_count(
    net: *const CrnNetwork,
    out: *mut usize,
) -> CrnStatus {
    if net.is_null() || out.is_null() {
        set_error("null pointer argument");
        return CrnStatus::NullPointer;
    }
    *out = (*net).inner.reaction_count();
    CrnStatus::Ok
}

/// Canonical serialization of the network's isomorphism class, reactions
/// joined by `, `.
///
/// # Safety
/// `net` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn crn_network_canonical(
    net: *const CrnNetwork,
    out: *mut *mut c_char,
) -> CrnStatus {
    if net.is_null() || out.is_null() {
        set_error("null pointer argument");
        return CrnStatus::NullPointer;
    }
    clear_error();
    write_string(out, (*net).inner.canonical_key().replace('\n', ", "))
}

/// Full analysis report as a JSON document.
///
/// `rates` may be NULL for a symbolic-only report; otherwise it must hold
/// one positive value per reaction and the report gains an oracle section.
/// With `verify` set the oracle also samples the variety and fits the class.
///
/// # Safety
/// `net` and `out` must be valid; `rates`, when non-NULL, must point to
/// `n_rates` doubles.
#[no_mangle]
pub unsafe extern "C" fn crn_analyze_json(
    net: *const CrnNetwork,
    rates: *const f64,
    n_rates: usize,
    verify: bool,
    seed: u64,
    out: *mut *mut c_char,
) -> CrnStatus {
    if net.is_null() || out.is_null() {
        set_error("null pointer argument");
        return CrnStatus::NullPointer;
    }
    clear_error();
    let network = &(*net).inner;
    let rates = match rates_from_raw(rates, n_rates, network.reaction_count()) {
        Ok(r) => r,
        Err(status) => return status,
    };
    let options = AnalyzeOptions {
        rates,
        verify,
        seed,
    };
    match analyze(network, &options) {
        Ok(report) => write_string(out, serde_json::to_string_pretty(&report).unwrap()),
        Err(e) => {
            set_error(e.to_string());
            analysis_status(&e)
        }
    }
}

/// Variety class of a 2-species, 2-reaction network as a code for
/// [`crn_variety_class_name`].
///
/// # Safety
/// `net` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn crn_variety_class(
    net: *const CrnNetwork,
    out: *mut i32,
) -> CrnStatus {
    if net.is_null() || out.is_null() {
        set_error("null pointer argument");
        return CrnStatus::NullPointer;
    }
    clear_error();
    match crnshape::classify::classify_by_reactants(&(*net).inner) {
        Ok(class) => {
            let code = VarietyClass::ALL
                .iter()
                .position(|&c| c == class)
                .expect("ALL covers every class");
            *out = code as i32;
            CrnStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            analysis_status(&e)
        }
    }
}

/// Static name for a class code from [`crn_variety_class`]; NULL if the
/// code is out of range.
#[no_mangle]
pub extern "C" fn crn_variety_class_name(code: i32) -> *const c_char {
    let names: [&CStr; 9] = [
        c"EmptyPSSV",
        c"TunedFullOrthant",
        c"AxisParallelLine",
        c"LineThroughOrigin",
        c"Parabola",
        c"Hyperbola",
        c"SemicubicalParabola",
        c"Cubic",
        c"OtherToricCurve",
    ];
    usize::try_from(code)
        .ok()
        .and_then(|i| names.get(i).copied())
        .map_or(ptr::null(), CStr::as_ptr)
}

/// All genuine 2-species, 2-reaction networks up to isomorphism at the
/// given molecularity bound, one canonical serialization per line.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crn_enumerate(
    max_molecularity: u32,
    out: *mut *mut c_char,
) -> CrnStatus {
    if out.is_null() {
        set_error("null pointer argument");
        return CrnStatus::NullPointer;
    }
    if max_molecularity < 1 {
        set_error("max_molecularity must be at least 1");
        return CrnStatus::InvalidArgument;
    }
    clear_error();
    let lines: Vec<String> = enumerate_networks(max_molecularity)
        .iter()
        .map(|n| n.canonical_key().replace('\n', ", "))
        .collect();
    write_string(out, lines.join("\n"))
}

/// Census of variety classes at the given molecularity bound, as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crn_census_json(
    max_molecularity: u32,
    out: *mut *mut c_char,
) -> CrnStatus {
    if out.is_null() {
        set_error("null pointer argument");
        return CrnStatus::NullPointer;
    }
    if max_molecularity < 1 {
        set_error("max_molecularity must be at least 1");
        return CrnStatus::InvalidArgument;
    }
    clear_error();
    let nets = enumerate_networks(max_molecularity);
    match census(&nets) {
        Ok(report) => write_string(out, serde_json::to_string_pretty(&report).unwrap()),
        Err(e) => {
            set_error(e.to_string());
            analysis_status(&e)
        }
    }
}

/// Sample points on the positive steady-state variety as CSV (header plus
/// one row per point). Fails with `CRN_STATUS_UNSUPPORTED` when the PSSV is
/// empty or rate-dependent.
///
/// # Safety
/// `net` and `out` must be valid; `rates`, when non-NULL, must point to
/// `n_rates` doubles.
#[no_mangle]
pub unsafe extern "C" fn crn_sample_csv(
    net: *const CrnNetwork,
    rates: *const f64,
    n_rates: usize,
    samples: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> CrnStatus {
    if net.is_null() || out.is_null() {
        set_error("null pointer argument");
        return CrnStatus::NullPointer;
    }
    clear_error();
    let network = &(*net).inner;
    let rates = match rates_from_raw(rates, n_rates, network.reaction_count()) {
        Ok(r) => r.unwrap_or_else(|| RateAssignment::ones(network.reaction_count())),
        Err(status) => return status,
    };
    let cfg = OracleConfig {
        seed,
        samples,
        ..OracleConfig::default()
    };
    match sample_variety(network, &rates, &cfg) {
        Ok(sample) => write_string(out, sample_csv(&sample, network.species_count())),
        Err(e) => {
            set_error(e.to_string());
            analysis_status(&e)
        }
    }
}
