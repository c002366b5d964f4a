//! C ABI for qpknot.
//!
//! Polynomials cross the boundary as opaque [`QpkPoly`] handles. A handle
//! written to an out-parameter is owned by the caller and released with
//! [`qpk_poly_free`]; strings written to out-parameters are released with
//! [`qpk_string_free`]. Every fallible call returns a [`QpkStatus`] and
//! leaves its out-parameters untouched on failure. The message of the most
//! recent failure on the calling thread is available from [`qpk_last_error`].
//!
//! Handles are immutable, so a handle may be read from several threads at
//! once.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qpknot::expr::parse_and_eval;
use qpknot::qp::{family_spec, qp_number, Family};
use qpknot::skein::{knot_series, link_coeffs, InvariantKind};
use qpknot::verify::{run_all, run_check};
use qpknot::{Error, LaurentPoly};

/// An exact Laurent polynomial.
pub struct QpkPoly(LaurentPoly);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QpkStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// An expression failed to parse.
    Parse = 3,
    NotDivisible = 4,
    DivByZero = 5,
    NotAPerfectSquare = 6,
    /// An index, range, name, or pair argument was rejected.
    BadArgument = 7,
    /// A value has no form in the requested variables.
    NotExpressible = 8,
    /// A JSON document was malformed.
    Json = 9,
    /// Verification ran and at least one check failed.
    CheckFailed = 10,
    Internal = 11,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    let c = CString::new(msg).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(QpkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Syntax { .. } | Error::NonMonomialFractionalPower { .. } | Error::InvalidVariable(_) => {
                QpkStatus::Parse
            }
            Error::NotDivisible => QpkStatus::NotDivisible,
            Error::DivByZero => QpkStatus::DivByZero,
            Error::NotAPerfectSquare => QpkStatus::NotAPerfectSquare,
            Error::NotExpressible(_) => QpkStatus::NotExpressible,
            Error::Json(_) => QpkStatus::Json,
            Error::Internal(_) => QpkStatus::Internal,
            Error::MissingImage(_)
            | Error::NegativeIndex(_)
            | Error::BadRange(_)
            | Error::DegenerateSpec
            | Error::SpecMismatch { .. }
            | Error::UnknownCheck(_) => QpkStatus::BadArgument,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status and a thread-local message.
fn guard<F>(f: F) -> QpkStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QpkStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(format!("internal error: {msg}"));
            QpkStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(QpkStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(QpkStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn poly_arg<'a>(p: *const QpkPoly, what: &str) -> Result<&'a LaurentPoly, Failure> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| Failure(QpkStatus::NullArgument, format!("{what} is null")))
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(QpkStatus::NullArgument, "out-parameter is null".into()))
    } else {
        Ok(())
    }
}

unsafe fn put_poly(out: *mut *mut QpkPoly, p: LaurentPoly) {
    *out = Box::into_raw(Box::new(QpkPoly(p)));
}

unsafe fn put_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior NULs").into_raw();
}

/// The message of the most recent failure on this thread, or null. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qpk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qpk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn qpk_poly_free(p: *mut QpkPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn qpk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and evaluates an expression such as `"(q^3 - p^3)/(q - p)"`.
///
/// # Safety
/// `expr` must be null or NUL-terminated; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_parse(expr: *const c_char, out: *mut *mut QpkPoly) -> QpkStatus {
    guard(|| {
        check_out(out)?;
        let p = parse_and_eval(str_arg(expr, "expr")?)?;
        put_poly(out, p);
        Ok(())
    })
}

/// Reads the JSON form produced by [`qpk_to_json`].
///
/// # Safety
/// `json` must be null or NUL-terminated; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_from_json(json: *const c_char, out: *mut *mut QpkPoly) -> QpkStatus {
    guard(|| {
        check_out(out)?;
        let p = LaurentPoly::from_json(str_arg(json, "json")?)?;
        put_poly(out, p);
        Ok(())
    })
}

unsafe fn render(p: *const QpkPoly, out: *mut *mut c_char, f: fn(&LaurentPoly) -> String) -> QpkStatus {
    guard(|| {
        check_out(out)?;
        let s = f(poly_arg(p, "poly")?);
        put_string(out, s);
        Ok(())
    })
}

/// Canonical text, e.g. `-a^4 + a^2*t + a^2*t^-1`.
///
/// # Safety
/// `p` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_to_text(p: *const QpkPoly, out: *mut *mut c_char) -> QpkStatus {
    render(p, out, LaurentPoly::to_text)
}

/// LaTeX body with braced exponents.
///
/// # Safety
/// `p` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_to_latex(p: *const QpkPoly, out: *mut *mut c_char) -> QpkStatus {
    render(p, out, LaurentPoly::to_latex)
}

/// JSON form; reading it back with [`qpk_from_json`] gives an equal value.
///
/// # Safety
/// `p` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_to_json(p: *const QpkPoly, out: *mut *mut c_char) -> QpkStatus {
    render(p, out, LaurentPoly::to_json)
}

unsafe fn binary(
    a: *const QpkPoly,
    b: *const QpkPoly,
    out: *mut *mut QpkPoly,
    f: impl FnOnce(&LaurentPoly, &LaurentPoly) -> Result<LaurentPoly, Error>,
) -> QpkStatus {
    guard(|| {
        check_out(out)?;
        let r = f(poly_arg(a, "a")?, poly_arg(b, "b")?)?;
        put_poly(out, r);
        Ok(())
    })
}

/// `a + b`.
///
/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_add(a: *const QpkPoly, b: *const QpkPoly, out: *mut *mut QpkPoly) -> QpkStatus {
    binary(a, b, out, |x, y| Ok(x + y))
}

/// `a - b`.
///
/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_sub(a: *const QpkPoly, b: *const QpkPoly, out: *mut *mut QpkPoly) -> QpkStatus {
    binary(a, b, out, |x, y| Ok(x - y))
}

/// `a * b`.
///
/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_mul(a: *const QpkPoly, b: *const QpkPoly, out: *mut *mut QpkPoly) -> QpkStatus {
    binary(a, b, out, |x, y| Ok(x * y))
}

/// The exact quotient `a / b`; `QPK_STATUS_NOT_DIVISIBLE` when there is none.
///
/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_exact_div(a: *const QpkPoly, b: *const QpkPoly, out: *mut *mut QpkPoly) -> QpkStatus {
    binary(a, b, out, |x, y| x.exact_div(y))
}

/// The square root with positive leading coefficient.
///
/// # Safety
/// `p` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_exact_sqrt(p: *const QpkPoly, out: *mut *mut QpkPoly) -> QpkStatus {
    guard(|| {
        check_out(out)?;
        let r = poly_arg(p, "poly")?.exact_sqrt()?;
        put_poly(out, r);
        Ok(())
    })
}

/// 1 when both handles hold equal polynomials, 0 otherwise or if either is null.
///
/// # Safety
/// `a`, `b` must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn qpk_equal(a: *const QpkPoly, b: *const QpkPoly) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(x), Some(y)) => i32::from(x.0 == y.0),
        _ => 0,
    }
}

/// `[n]` of a named family: `alexander`, `jones`, `homfly`, `h1`, `h2`, `bmq`.
///
/// # Safety
/// `family` must be null or NUL-terminated; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_qp_number(family: *const c_char, n: i64, out: *mut *mut QpkPoly) -> QpkStatus {
    guard(|| {
        check_out(out)?;
        let f: Family = str_arg(family, "family")?.parse()?;
        put_poly(out, qp_number(&family_spec(f), n)?);
        Ok(())
    })
}

/// The invariant (`alexander`, `jones`, `homfly`) of the torus knot `T(2m+1,2)`.
///
/// # Safety
/// `kind` must be null or NUL-terminated; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_knot_entry(kind: *const c_char, m: usize, out: *mut *mut QpkPoly) -> QpkStatus {
    guard(|| {
        check_out(out)?;
        let kind: InvariantKind = str_arg(kind, "kind")?.parse()?;
        let p = knot_series(kind, m).laurent(m).cloned().expect("knot entries are present");
        put_poly(out, p);
        Ok(())
    })
}

/// The skein coefficients `(l1, l2)` of an invariant.
///
/// # Safety
/// `kind` must be null or NUL-terminated; `l1`, `l2` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_link_coeffs(
    kind: *const c_char,
    l1: *mut *mut QpkPoly,
    l2: *mut *mut QpkPoly,
) -> QpkStatus {
    guard(|| {
        check_out(l1)?;
        check_out(l2)?;
        let c = link_coeffs(str_arg(kind, "kind")?.parse()?);
        put_poly(l1, c.l1);
        put_poly(l2, c.l2);
        Ok(())
    })
}

/// Runs one named check, or every check when `check` is null, over
/// `1 <= n <= n_max`. Writes one JSON report per line to `report` and returns
/// `QPK_STATUS_CHECK_FAILED` when any check failed.
///
/// # Safety
/// `check` must be null or NUL-terminated; `report` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qpk_verify(check: *const c_char, n_max: usize, report: *mut *mut c_char) -> QpkStatus {
    let mut all_passed = true;
    let status = guard(|| {
        check_out(report)?;
        let reports = if check.is_null() {
            run_all(n_max)?
        } else {
            vec![run_check(str_arg(check, "check")?, n_max)?]
        };
        all_passed = reports.iter().all(|r| r.passed);
        let lines: Vec<String> = reports.iter().map(|r| r.to_json()).collect();
        put_string(report, lines.join("\n"));
        Ok(())
    });
    if status == QpkStatus::Ok && !all_passed {
        set_last_error("at least one check failed");
        return QpkStatus::CheckFailed;
    }
    status
}
