//! C interface to `heptic-core`.
//!
//! Objects cross the boundary as opaque handles that the caller releases
//! with the matching `*_free` function. Every fallible call returns a
//! [`HepticStatus`]; the message of the most recent failure on the calling
//! thread is available from [`heptic_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use heptic_core::exact::ModularConfig;
use heptic_core::monomial::{MonomialIdeal, Side};
use heptic_core::verdict::{self, render_json, render_text, RunConfig, VerdictReport};
use heptic_core::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HepticStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InputError = 3,
    ComputationError = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HepticPipeline {
    P5 = 0,
    P4 = 1,
    P3 = 2,
    CurveCert = 3,
    DeltaAudit = 4,
    All = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HepticFormat {
    Text = 0,
    Json = 1,
}

/// Opaque verdict report.
pub struct HepticReport(VerdictReport);

/// Opaque monomial ideal.
pub struct HepticIdeal(MonomialIdeal);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_for(e: &Error) -> HepticStatus {
    match e {
        Error::Input(_) => HepticStatus::InputError,
        Error::Precondition(_) | Error::ModularConfig(_) => HepticStatus::InvalidArgument,
        _ => HepticStatus::ComputationError,
    }
}

/// Runs `f`, records failures and converts panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (HepticStatus, String)>) -> HepticStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HepticStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HepticStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (HepticStatus, String) {
    (status_for(&e), e.to_string())
}

fn null(what: &str) -> (HepticStatus, String) {
    (HepticStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HepticStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        (
            HepticStatus::InvalidArgument,
            format!("{what} is not UTF-8"),
        )
    })
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn heptic_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn heptic_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Runs one pipeline with bundled inputs.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn heptic_run(
    pipeline: HepticPipeline,
    seed: u64,
    primes: u32,
    exact: bool,
    out: *mut *mut HepticReport,
) -> HepticStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let mut modular = ModularConfig::from_seed(seed, primes as usize).map_err(lib_err)?;
        if exact {
            modular = modular.exact();
        }
        let cfg = RunConfig {
            modular,
            ..RunConfig::default()
        };
        let sections = match pipeline {
            HepticPipeline::P5 => verdict::run_p5(&cfg),
            HepticPipeline::P4 => verdict::run_p4(&cfg),
            HepticPipeline::P3 => verdict::run_p3(&cfg),
            HepticPipeline::CurveCert => verdict::curve_cert(&cfg),
            HepticPipeline::DeltaAudit => verdict::delta_audit(&cfg),
            HepticPipeline::All => {
                let r = verdict::run_all(&cfg).map_err(lib_err)?;
                *out = Box::into_raw(Box::new(HepticReport(r)));
                return Ok(());
            }
        }
        .map_err(lib_err)?;
        *out = Box::into_raw(Box::new(HepticReport(VerdictReport::new(&cfg, sections))));
        Ok(())
    })
}

/// Process exit code the CLI would use for this report.
///
/// # Safety
/// `report` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn heptic_report_exit_code(
    report: *const HepticReport,
    out: *mut i32,
) -> HepticStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = r.0.exit_code();
        Ok(())
    })
}

/// Number of sections, and how many of them are warnings.
///
/// # Safety
/// `report` must be a live handle; `sections` and `warnings` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn heptic_report_counts(
    report: *const HepticReport,
    sections: *mut usize,
    warnings: *mut usize,
) -> HepticStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        let s = sections.as_mut().ok_or_else(|| null("sections"))?;
        let w = warnings.as_mut().ok_or_else(|| null("warnings"))?;
        let sum = r.0.summary();
        *s = sum.sections;
        *w = sum.warnings;
        Ok(())
    })
}

/// Renders the report; release the string with [`heptic_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn heptic_report_render(
    report: *const HepticReport,
    format: HepticFormat,
    out: *mut *mut c_char,
) -> HepticStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let text = match format {
            HepticFormat::Text => render_text(&r.0),
            HepticFormat::Json => render_json(&r.0),
        };
        *out = to_c_string(text);
        Ok(())
    })
}

/// # Safety
/// `report` must come from [`heptic_run`] and not be used afterwards.
/// Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn heptic_report_free(report: *mut HepticReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn heptic_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a comma-separated generator list such as `"x0^2, x0*x1^7"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn heptic_ideal_parse(
    text: *const c_char,
    num_vars: u32,
    out: *mut *mut HepticIdeal,
) -> HepticStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let text = read_str(text, "text")?;
        let ideal = MonomialIdeal::parse(text, num_vars as usize).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(HepticIdeal(ideal)));
        Ok(())
    })
}

/// # Safety
/// `ideal` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn heptic_ideal_generator_count(
    ideal: *const HepticIdeal,
    out: *mut usize,
) -> HepticStatus {
    guard(|| {
        let i = ideal.as_ref().ok_or_else(|| null("ideal"))?;
        *out.as_mut().ok_or_else(|| null("out"))? = i.0.generators().len();
        Ok(())
    })
}

/// # Safety
/// `ideal` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn heptic_ideal_is_borel_fixed(
    ideal: *const HepticIdeal,
    out: *mut bool,
) -> HepticStatus {
    guard(|| {
        let i = ideal.as_ref().ok_or_else(|| null("ideal"))?;
        *out.as_mut().ok_or_else(|| null("out"))? = i.0.is_borel_fixed();
        Ok(())
    })
}

/// Number of degree-`m` monomials inside the ideal (`quotient = false`) or
/// outside it (`quotient = true`).
///
/// # Safety
/// `ideal` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn heptic_ideal_hilbert_count(
    ideal: *const HepticIdeal,
    m: u32,
    quotient: bool,
    out: *mut u64,
) -> HepticStatus {
    guard(|| {
        let i = ideal.as_ref().ok_or_else(|| null("ideal"))?;
        let side = if quotient {
            Side::Quotient
        } else {
            Side::Ideal
        };
        *out.as_mut().ok_or_else(|| null("out"))? = i.0.hilbert_count(m, side);
        Ok(())
    })
}

/// # Safety
/// `ideal` must come from [`heptic_ideal_parse`] and not be used afterwards.
/// Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn heptic_ideal_free(ideal: *mut HepticIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Castelnuovo genus bound for degree `d` in `P^n`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn heptic_castelnuovo_bound(d: u32, n: u32, out: *mut u32) -> HepticStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = heptic_core::dimension::castelnuovo_bound(d, n).map_err(lib_err)?;
        Ok(())
    })
}

/// Gap count of the numerical semigroup generated by `len` exponents.
///
/// # Safety
/// `exponents` must point to `len` readable values and `out` be valid for a
/// write.
#[no_mangle]
pub unsafe extern "C" fn heptic_semigroup_delta(
    exponents: *const u32,
    len: usize,
    out: *mut u32,
) -> HepticStatus {
    guard(|| {
        if exponents.is_null() {
            return Err(null("exponents"));
        }
        if len == 0 {
            return Err((HepticStatus::InvalidArgument, "no exponents".into()));
        }
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let exps = std::slice::from_raw_parts(exponents, len);
        *out = heptic_core::singularity::semigroup_delta(exps).map_err(lib_err)?;
        Ok(())
    })
}
