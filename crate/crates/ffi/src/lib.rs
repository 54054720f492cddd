//! C ABI for the qgkdim library.
//!
//! Conventions: opaque handles created by `*_new`/`*_parse` and released by
//! the matching `*_free`; integer status codes with a thread-local error
//! message readable via `qgk_last_error_message`; strings returned by the
//! library are owned by the caller and released with `qgk_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qgkdim::cli::subsystem_report;
use qgkdim::gk::{cuspidal_possible, gk_dimension, kappas, min_gk};
use qgkdim::rootsys::{RootSystem, Rs, TypeLabel};
use qgkdim::subsys::FieldSpec;
use qgkdim::verma::{growth_experiment, RewriteSystem};
use qgkdim::weights::{parse_weight, ToralWeight};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QgkStatus {
    Ok = 0,
    InvalidArgument = 1,
    ParseError = 2,
    TooLarge = 3,
    Unsupported = 4,
    Internal = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into();
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(msg.replace('\0', " ")).unwrap();
    });
}

/// Message for the most recent error on this thread. Borrowed; valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qgk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version string (static storage).
#[no_mangle]
pub extern "C" fn qgk_version() -> *const c_char {
    concat!("qgkdim ", env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Opaque root-system handle.
pub struct QgkRootSystem {
    rs: Rs,
}

/// Opaque toral-weight handle.
pub struct QgkWeight {
    weight: ToralWeight,
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Result<&'a str, QgkStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(QgkStatus::InvalidArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        QgkStatus::InvalidArgument
    })
}

fn guard<F: FnOnce() -> QgkStatus>(f: F) -> QgkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            QgkStatus::Internal
        }
    }
}

/// Build a root system from a type label such as "B2" or "A1xA1".
///
/// # Safety
/// `type_label` must be a valid NUL-terminated string and `out` a valid
/// pointer; the returned handle must be released with `qgk_root_system_free`.
#[no_mangle]
pub unsafe extern "C" fn qgk_root_system_new(
    type_label: *const c_char,
    out: *mut *mut QgkRootSystem,
) -> QgkStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return QgkStatus::InvalidArgument;
        }
        let label = match cstr(type_label) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match RootSystem::build_str(label) {
            Ok(rs) => {
                *out = Box::into_raw(Box::new(QgkRootSystem { rs }));
                QgkStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                QgkStatus::ParseError
            }
        }
    })
}

/// # Safety
/// `ptr` must come from `qgk_root_system_new` (or be null).
#[no_mangle]
pub unsafe extern "C" fn qgk_root_system_free(ptr: *mut QgkRootSystem) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// # Safety
/// `rs` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qgk_root_system_rank(rs: *const QgkRootSystem) -> usize {
    if rs.is_null() {
        return 0;
    }
    (*rs).rs.rank()
}

/// # Safety
/// `rs` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qgk_root_system_num_positive(rs: *const QgkRootSystem) -> usize {
    if rs.is_null() {
        return 0;
    }
    (*rs).rs.num_positive()
}

/// Parse a weight literal ("t=1/4,c=-1;t=0,c=0" or "q^{1,0}").
///
/// # Safety
/// `rs` must be a live handle, `literal` a valid string, `out` a valid
/// pointer; release the result with `qgk_weight_free`.
#[no_mangle]
pub unsafe extern "C" fn qgk_weight_parse(
    rs: *const QgkRootSystem,
    literal: *const c_char,
    out: *mut *mut QgkWeight,
) -> QgkStatus {
    guard(|| {
        if rs.is_null() || out.is_null() {
            set_error("null handle or output pointer");
            return QgkStatus::InvalidArgument;
        }
        let lit = match cstr(literal) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match parse_weight(&(*rs).rs, lit) {
            Ok(weight) => {
                *out = Box::into_raw(Box::new(QgkWeight { weight }));
                QgkStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                QgkStatus::ParseError
            }
        }
    })
}

/// # Safety
/// `ptr` must come from `qgk_weight_parse` (or be null).
#[no_mangle]
pub unsafe extern "C" fn qgk_weight_free(ptr: *mut QgkWeight) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// GK dimension of the simple highest-weight module; also reports the
/// a-function value of the witness.
///
/// # Safety
/// `weight` must be a live handle; output pointers must be valid or null.
#[no_mangle]
pub unsafe extern "C" fn qgk_gk_dimension(
    weight: *const QgkWeight,
    group_cap: usize,
    out_dimension: *mut u64,
    out_a_value: *mut u64,
) -> QgkStatus {
    guard(|| {
        if weight.is_null() {
            set_error("null weight handle");
            return QgkStatus::InvalidArgument;
        }
        match gk_dimension(&(*weight).weight, group_cap) {
            Ok(report) => {
                if !out_dimension.is_null() {
                    *out_dimension = report.gk_dimension;
                }
                if !out_a_value.is_null() {
                    *out_a_value = report.a_value;
                }
                QgkStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                QgkStatus::TooLarge
            }
        }
    })
}

/// The minimal GK-dimension constants (kappa0, kappa1, kappa2) of an
/// irreducible type.
///
/// # Safety
/// `type_label` must be a valid string; output pointers valid or null.
#[no_mangle]
pub unsafe extern "C" fn qgk_kappas(
    type_label: *const c_char,
    out_kappa0: *mut u64,
    out_kappa1: *mut u64,
    out_kappa2: *mut u64,
) -> QgkStatus {
    guard(|| {
        let label = match cstr(type_label) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let rs = match RootSystem::build_str(label) {
            Ok(rs) => rs,
            Err(e) => {
                set_error(e.to_string());
                return QgkStatus::ParseError;
            }
        };
        match kappas(&rs) {
            Ok(k) => {
                if !out_kappa0.is_null() {
                    *out_kappa0 = k.kappa0;
                }
                if !out_kappa1.is_null() {
                    *out_kappa1 = k.kappa1;
                }
                if !out_kappa2.is_null() {
                    *out_kappa2 = k.kappa2;
                }
                QgkStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                QgkStatus::Unsupported
            }
        }
    })
}

/// Minimal nonzero GK dimension over a field with the given torsion
/// denominator (0 for unconstrained) and q-exponent denominator.
///
/// # Safety
/// `type_label` must be a valid string; `out` valid or null.
#[no_mangle]
pub unsafe extern "C" fn qgk_min_gk(
    type_label: *const c_char,
    torsion_denominator: u32,
    q_denominator: u32,
    out: *mut u64,
) -> QgkStatus {
    guard(|| {
        let label = match cstr(type_label) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let rs = match RootSystem::build_str(label) {
            Ok(rs) => rs,
            Err(e) => {
                set_error(e.to_string());
                return QgkStatus::ParseError;
            }
        };
        let torsion = if torsion_denominator == 0 {
            None
        } else {
            Some(torsion_denominator)
        };
        if q_denominator == 0 {
            set_error("q denominator must be positive");
            return QgkStatus::InvalidArgument;
        }
        match min_gk(&rs, &FieldSpec::new(torsion, q_denominator)) {
            Ok(v) => {
                if !out.is_null() {
                    *out = v;
                }
                QgkStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                QgkStatus::Unsupported
            }
        }
    })
}

/// Whether cuspidal modules can exist for the semisimple type (1 or 0).
///
/// # Safety
/// `type_label` must be a valid string; `out` valid or null.
#[no_mangle]
pub unsafe extern "C" fn qgk_cuspidal_possible(
    type_label: *const c_char,
    out: *mut u8,
) -> QgkStatus {
    guard(|| {
        let label = match cstr(type_label) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match TypeLabel::parse(label) {
            Ok(t) => {
                if !out.is_null() {
                    *out = u8::from(cuspidal_possible(&t));
                }
                QgkStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                QgkStatus::ParseError
            }
        }
    })
}

/// JSON report of the integral subsystem data of a weight. The returned
/// string is owned by the caller (release with `qgk_string_free`); null on
/// error.
///
/// # Safety
/// `rs` and `weight` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn qgk_subsystem_report_json(
    rs: *const QgkRootSystem,
    weight: *const QgkWeight,
    group_cap: usize,
) -> *mut c_char {
    let result = catch_unwind(AssertUnwindSafe(|| {
        if rs.is_null() || weight.is_null() {
            set_error("null handle");
            return None;
        }
        match subsystem_report(&(*rs).rs, &(*weight).weight, group_cap) {
            Ok(report) => match serde_json::to_string_pretty(&report) {
                Ok(json) => Some(json),
                Err(e) => {
                    set_error(e.to_string());
                    None
                }
            },
            Err(e) => {
                set_error(e.to_string());
                None
            }
        }
    }));
    match result {
        Ok(Some(json)) => CString::new(json)
            .map(CString::into_raw)
            .unwrap_or(std::ptr::null_mut()),
        Ok(None) => std::ptr::null_mut(),
        Err(_) => {
            set_error("internal panic");
            std::ptr::null_mut()
        }
    }
}

/// CSV of the dimension-growth experiment (columns ell, total_dim,
/// exponent_estimate, J). Null on error; release with `qgk_string_free`.
///
/// # Safety
/// `rs` and `weight` must be live handles; `ells` must point to `ells_len`
/// integers.
#[no_mangle]
pub unsafe extern "C" fn qgk_growth_csv(
    rs: *const QgkRootSystem,
    weight: *const QgkWeight,
    ells: *const u64,
    ells_len: usize,
    height: usize,
    group_cap: usize,
) -> *mut c_char {
    let result = catch_unwind(AssertUnwindSafe(|| {
        if rs.is_null() || weight.is_null() || ells.is_null() {
            set_error("null argument");
            return None;
        }
        let ells = std::slice::from_raw_parts(ells, ells_len);
        let system = match RewriteSystem::build(&(*rs).rs, height) {
            Ok(s) => s,
            Err(e) => {
                set_error(e.to_string());
                return None;
            }
        };
        match growth_experiment(&system, &(*weight).weight, ells, group_cap) {
            Ok(report) => {
                let mut csv = String::from("ell,total_dim,exponent_estimate,J\n");
                for (s, (ell, j)) in report.samples.iter().zip(report.agreement.iter()) {
                    debug_assert_eq!(s.order, *ell);
                    csv.push_str(&format!(
                        "{},{},{},{}\n",
                        s.order, s.total, report.exponent_value, j
                    ));
                }
                Some(csv)
            }
            Err(e) => {
                set_error(e.to_string());
                None
            }
        }
    }));
    match result {
        Ok(Some(csv)) => CString::new(csv)
            .map(CString::into_raw)
            .unwrap_or(std::ptr::null_mut()),
        Ok(None) => std::ptr::null_mut(),
        Err(_) => {
            set_error("internal panic");
            std::ptr::null_mut()
        }
    }
}

/// Release a string returned by this library.
///
/// # Safety
/// `ptr` must come from a qgkdim FFI call (or be null).
#[no_mangle]
pub unsafe extern "C" fn qgk_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(CString::from_raw(ptr));
    }
}
