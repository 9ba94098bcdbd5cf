//! C ABI for `schurq`.
//!
//! Values cross the boundary as opaque handles (`SchurqPoly`,
//! `SchurqLinComb`) or as JSON strings in the library's canonical form.
//! Every fallible call returns a [`SchurqStatus`]; on failure
//! `schurq_last_error()` describes the problem. Strings returned through
//! `char **` out-parameters must be released with `schurq_string_free`,
//! handles with their matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use schurq::inner::lincomb_to_poly;
use schurq::json::{lincomb_to_json, poly_from_json, poly_to_json, series_to_json};
use schurq::lincomb::{Basis, LinComb};
use schurq::poly::Poly;
use schurq::tau::{tau_bgw, tau_kw, Method};
use schurq::verify::{run_suite, Config, Report, Suite};
use schurq::vertex::{characters, hall_littlewood, Rho};
use schurq::wops::{apply_named, apply_p_brute, apply_p_closed, apply_p_modes, NamedOp};
use schurq::{Error, IntVector, Rational};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurqStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed JSON, rational or label.
    Parse = 3,
    /// Arguments outside the operation's domain.
    InvalidArgument = 4,
    /// Two independent computations disagreed.
    Discrepancy = 5,
    /// A verification suite reported failures.
    VerificationFailed = 6,
    /// Internal panic; the library state is still usable.
    Panic = 7,
}

/// Character basis selector.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurqBasis {
    Schur = 0,
    Q = 1,
}

impl From<SchurqBasis> for Basis {
    fn from(b: SchurqBasis) -> Basis {
        match b {
            SchurqBasis::Schur => Basis::Schur,
            SchurqBasis::Q => Basis::Q,
        }
    }
}

/// How `schurq_apply_p` evaluates `P^(k)_m`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurqMethod {
    /// Sum of vertex-operator bilinears.
    Brute = 0,
    /// Normal-ordered current modes (k <= 3).
    Modes = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurqModel {
    Bgw = 0,
    Kw = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurqTauMethod {
    CutJoin = 0,
    Closed = 1,
    Both = 2,
}

/// Opaque polynomial handle.
pub struct SchurqPoly(Poly);

/// Opaque linear combination of basis elements.
pub struct SchurqLinComb(LinComb);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SchurqStatus {
    match e {
        Error::Parse(_) => SchurqStatus::Parse,
        Error::Discrepancy(_) => SchurqStatus::Discrepancy,
        _ => SchurqStatus::InvalidArgument,
    }
}

struct Fail(SchurqStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type FfiResult<T> = std::result::Result<T, Fail>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> SchurqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SchurqStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SchurqStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(SchurqStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| Fail(SchurqStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn label_arg(parts: *const i64, len: usize) -> FfiResult<IntVector> {
    if len == 0 {
        return Ok(IntVector::empty());
    }
    if parts.is_null() {
        return Err(null("parts"));
    }
    Ok(IntVector::new(
        unsafe { std::slice::from_raw_parts(parts, len) }.to_vec(),
    ))
}

unsafe fn poly_arg<'a>(p: *const SchurqPoly, what: &str) -> FfiResult<&'a Poly> {
    unsafe { p.as_ref() }
        .map(|h| &h.0)
        .ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c =
        CString::new(s).map_err(|_| Fail(SchurqStatus::InvalidArgument, "interior NUL".into()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message for the most recent failure on this thread; empty after a
/// success. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn schurq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn schurq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Release a polynomial handle. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn schurq_poly_free(p: *mut SchurqPoly) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Release a linear-combination handle. Null is ignored.
///
/// # Safety
/// `l` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn schurq_lincomb_free(l: *mut SchurqLinComb) {
    if !l.is_null() {
        drop(unsafe { Box::from_raw(l) });
    }
}

/// Parse a polynomial from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_poly_from_json(
    json: *const c_char,
    out: *mut *mut SchurqPoly,
) -> SchurqStatus {
    guard(|| {
        let s = unsafe { str_arg(json, "json") }?;
        let v: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Fail(SchurqStatus::Parse, e.to_string()))?;
        unsafe { put(out, SchurqPoly(poly_from_json(&v)?)) }
    })
}

/// Canonical JSON of a polynomial.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_poly_to_json(
    p: *const SchurqPoly,
    out: *mut *mut c_char,
) -> SchurqStatus {
    guard(|| {
        let p = unsafe { poly_arg(p, "p") }?;
        unsafe { put_string(out, poly_to_json(p).to_string()) }
    })
}

/// `S_lambda` or `Q_lambda` for an arbitrary integer label.
///
/// # Safety
/// `parts` must point to `len` integers (may be null when `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn schurq_character(
    basis: SchurqBasis,
    parts: *const i64,
    len: usize,
    out: *mut *mut SchurqPoly,
) -> SchurqStatus {
    guard(|| {
        let lam = unsafe { label_arg(parts, len) }?;
        let p = (*characters().get(basis.into(), lam.parts())).clone();
        unsafe { put(out, SchurqPoly(p)) }
    })
}

/// `H_lambda(t; rho)` with `rho = rho_num / rho_den`, `rho != 1`.
///
/// # Safety
/// As for [`schurq_character`].
#[no_mangle]
pub unsafe extern "C" fn schurq_hall_littlewood(
    parts: *const i64,
    len: usize,
    rho_num: i64,
    rho_den: i64,
    out: *mut *mut SchurqPoly,
) -> SchurqStatus {
    guard(|| {
        if rho_den == 0 {
            return Err(Fail(
                SchurqStatus::InvalidArgument,
                "zero denominator".into(),
            ));
        }
        let lam = unsafe { label_arg(parts, len) }?;
        let rho = Rho::new(Rational::new(rho_num, rho_den))?;
        unsafe { put(out, SchurqPoly(hall_littlewood(&lam, &rho))) }
    })
}

/// Sum, difference or product of two polynomials (`op` = '+', '-', '*').
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_poly_arith(
    op: c_char,
    a: *const SchurqPoly,
    b: *const SchurqPoly,
    out: *mut *mut SchurqPoly,
) -> SchurqStatus {
    guard(|| {
        let (a, b) = unsafe { (poly_arg(a, "a")?, poly_arg(b, "b")?) };
        let r = match op as u8 {
            b'+' => a + b,
            b'-' => a - b,
            b'*' => a * b,
            other => {
                return Err(Fail(
                    SchurqStatus::InvalidArgument,
                    format!("unknown operator {:?}", other as char),
                ))
            }
        };
        unsafe { put(out, SchurqPoly(r)) }
    })
}

/// Exact equality of two polynomials.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_poly_equal(
    a: *const SchurqPoly,
    b: *const SchurqPoly,
    out: *mut bool,
) -> SchurqStatus {
    guard(|| {
        let (a, b) = unsafe { (poly_arg(a, "a")?, poly_arg(b, "b")?) };
        if out.is_null() {
            return Err(null("out"));
        }
        unsafe { *out = a == b };
        Ok(())
    })
}

/// `P^(k)_m p` at `rho = 0` (Schur) or `rho = -1` (Q).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_apply_p(
    k: u32,
    m: i64,
    basis: SchurqBasis,
    method: SchurqMethod,
    p: *const SchurqPoly,
    out: *mut *mut SchurqPoly,
) -> SchurqStatus {
    guard(|| {
        let p = unsafe { poly_arg(p, "p") }?;
        let rho = Rho::for_basis(basis.into());
        let r = match method {
            SchurqMethod::Brute => apply_p_brute(k, m, &rho, p)?,
            SchurqMethod::Modes => apply_p_modes(k, m, &rho, p)?,
        };
        unsafe { put(out, SchurqPoly(r)) }
    })
}

/// Closed action of `P^(k)_m` on the basis element with the given label.
///
/// # Safety
/// `parts` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_apply_p_closed(
    k: u32,
    m: i64,
    basis: SchurqBasis,
    parts: *const i64,
    len: usize,
    out: *mut *mut SchurqLinComb,
) -> SchurqStatus {
    guard(|| {
        let lam = unsafe { label_arg(parts, len) }?;
        unsafe { put(out, SchurqLinComb(apply_p_closed(basis.into(), k, m, &lam))) }
    })
}

/// A named operator (e.g. "Lhat", "WKW") applied to `p`. `m` is ignored
/// by operators without a mode index.
///
/// # Safety
/// `name` must be NUL-terminated; `p` a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_apply_named(
    name: *const c_char,
    m: i64,
    p: *const SchurqPoly,
    out: *mut *mut SchurqPoly,
) -> SchurqStatus {
    guard(|| {
        let name = unsafe { str_arg(name, "name") }?;
        let p = unsafe { poly_arg(p, "p") }?;
        let op = NamedOp::parse(name, Some(m)).or_else(|_| NamedOp::parse(name, None))?;
        unsafe { put(out, SchurqPoly(apply_named(op, p)?)) }
    })
}

/// Canonical JSON of a linear combination.
///
/// # Safety
/// `l` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_lincomb_to_json(
    l: *const SchurqLinComb,
    out: *mut *mut c_char,
) -> SchurqStatus {
    guard(|| {
        let l = unsafe { l.as_ref() }.ok_or_else(|| null("l"))?;
        unsafe { put_string(out, lincomb_to_json(&l.0).to_string()) }
    })
}

/// Expand a linear combination into a polynomial.
///
/// # Safety
/// `l` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_lincomb_to_poly(
    l: *const SchurqLinComb,
    out: *mut *mut SchurqPoly,
) -> SchurqStatus {
    guard(|| {
        let l = unsafe { l.as_ref() }.ok_or_else(|| null("l"))?;
        unsafe { put(out, SchurqPoly(lincomb_to_poly(&l.0))) }
    })
}

/// Tau-function expansion up to `order`, as Series JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_tau(
    model: SchurqModel,
    order: u32,
    method: SchurqTauMethod,
    out: *mut *mut c_char,
) -> SchurqStatus {
    guard(|| {
        let method = match method {
            SchurqTauMethod::CutJoin => Method::CutJoin,
            SchurqTauMethod::Closed => Method::Closed,
            SchurqTauMethod::Both => Method::Both,
        };
        let s = match model {
            SchurqModel::Bgw => tau_bgw(order, method)?,
            SchurqModel::Kw => tau_kw(order, method)?,
        };
        unsafe { put_string(out, series_to_json(&s).to_string()) }
    })
}

/// Run a verification suite by name ("thm1", ..., "all"). `max_weight < 0`
/// selects the default sizes. The JSON report is written to `out` even when
/// the suite fails, in which case the status is `VerificationFailed`.
///
/// # Safety
/// `suite` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schurq_verify(
    suite: *const c_char,
    max_weight: i64,
    out: *mut *mut c_char,
) -> SchurqStatus {
    guard(|| {
        let suite: Suite = unsafe { str_arg(suite, "suite") }?.parse()?;
        let cfg = if max_weight < 0 {
            Config::default()
        } else {
            Config::with_max_weight(max_weight)
        };
        let reports = run_suite(suite, &cfg);
        let passed = reports.iter().all(Report::passed);
        let doc = serde_json::json!({
            "suite": suite.name(),
            "passed": passed,
            "checks": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
        });
        unsafe { put_string(out, doc.to_string()) }?;
        if passed {
            Ok(())
        } else {
            Err(Fail(
                SchurqStatus::VerificationFailed,
                format!("suite {suite} failed"),
            ))
        }
    })
}
