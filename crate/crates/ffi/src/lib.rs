//! C ABI for `chebyshev-expansions`.
//!
//! Conventions:
//!
//! * every function returns a [`ChebStatus`]; results go through out-pointers;
//! * handles are opaque and released with their `*_free` function;
//! * strings returned through `char **` are owned by the caller and released
//!   with [`cheb_string_free`];
//! * after a non-OK status, [`cheb_last_error`] describes the failure on the
//!   calling thread (a mismatch is described by its JSON diff);
//! * panics never cross the boundary; they surface as `CHEB_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use chebyshev_expansions::check::Mismatch;
use chebyshev_expansions::expansions::{cross_validate, expand_closed_form, expand_projection, expand_triangular};
use chebyshev_expansions::exact::render;
use chebyshev_expansions::moments::{moment, MomentKey, WeightSign};
use chebyshev_expansions::output::{to_json, ExpansionRecord, PolyFamily};
use chebyshev_expansions::verify::{run_targets, VerifyOptions, VerifyTarget};
use chebyshev_expansions::{ChebKind, Expansion, Family, Poly};

/// Largest degree accepted by the constructors.
pub const CHEB_MAX_DEGREE: u32 = 256;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    /// Two independent computations disagreed.
    Mismatch = 4,
    Internal = 5,
}

/// Which computation produces expansion coefficients.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebSource {
    ClosedForm = 0,
    Projection = 1,
    TriangularSolve = 2,
    /// All three, required to agree; the closed form is kept.
    CrossValidated = 3,
}

/// A polynomial in the monomial basis.
pub struct ChebPoly {
    poly: Poly,
}

/// Coefficients of one polynomial in the `T` or `U` basis.
pub struct ChebExpansion {
    family: Family,
    kind: ChebKind,
    n: usize,
    expansion: Expansion,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(ChebStatus, String);

impl Failure {
    fn null(what: &str) -> Self {
        Failure(ChebStatus::NullPointer, format!("{what} is null"))
    }

    fn invalid(msg: impl ToString) -> Self {
        Failure(ChebStatus::InvalidArgument, msg.to_string())
    }

    fn mismatch(m: &Mismatch) -> Self {
        Failure(ChebStatus::Mismatch, m.to_json())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `body`, records any failure for `cheb_last_error`, and maps panics to `Internal`.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ChebStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            ChebStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&format!("internal error: {msg}"));
            ChebStatus::Internal
        }
    }
}

unsafe fn arg_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure::invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn arg_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Failure(ChebStatus::Internal, "interior NUL in output".into()))?;
    out.write(c.into_raw());
    Ok(())
}

fn degree(n: u32) -> Result<usize, Failure> {
    if n > CHEB_MAX_DEGREE {
        return Err(Failure(ChebStatus::OutOfRange, format!("degree {n} exceeds {CHEB_MAX_DEGREE}")));
    }
    Ok(n as usize)
}

/// Description of the last failure on this thread, or `""`. Valid until the
/// next call into this library from the same thread; do not free.
#[no_mangle]
pub extern "C" fn cheb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn cheb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cheb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `family_n(x)` for `family` in `bernoulli`, `euler`, `hermite`,
/// `chebyshev-t`, `chebyshev-u`.
///
/// # Safety
/// `family` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cheb_poly_new(family: *const c_char, n: u32, out: *mut *mut ChebPoly) -> ChebStatus {
    guard(|| {
        let family: PolyFamily = arg_str(family, "family")?.parse().map_err(Failure::invalid)?;
        let poly = family.poly(degree(n)?);
        write_out(out, Box::into_raw(Box::new(ChebPoly { poly })))
    })
}

/// # Safety
/// `p` must be null or a live handle from [`cheb_poly_new`].
#[no_mangle]
pub unsafe extern "C" fn cheb_poly_free(p: *mut ChebPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree of `p`; `-1` for the zero polynomial.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cheb_poly_degree(p: *const ChebPoly, out: *mut i64) -> ChebStatus {
    guard(|| {
        let p = arg_ref(p, "poly")?;
        write_out(out, p.poly.degree().map_or(-1, |d| d as i64))
    })
}

/// Canonical text, e.g. `8*x^4 - 8*x^2 + 1`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cheb_poly_to_string(p: *const ChebPoly, out: *mut *mut c_char) -> ChebStatus {
    guard(|| {
        let p = arg_ref(p, "poly")?;
        write_string(out, p.poly.to_string())
    })
}

/// Coefficient of `x^k` as `p/q` text; `0` above the degree.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cheb_poly_coefficient(p: *const ChebPoly, k: usize, out: *mut *mut c_char) -> ChebStatus {
    guard(|| {
        let p = arg_ref(p, "poly")?;
        write_string(out, render(&p.poly.coeff(k)))
    })
}

/// Expands `family_n(x)` (`monomial`, `bernoulli`, `euler`, `hermite`) in
/// basis `"T"` or `"U"`. With `CHEB_SOURCE_CROSS_VALIDATED` a disagreement
/// between the three computations returns `CHEB_STATUS_MISMATCH`.
///
/// # Safety
/// `family` and `basis` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cheb_expansion_new(
    family: *const c_char,
    basis: *const c_char,
    n: u32,
    source: ChebSource,
    out: *mut *mut ChebExpansion,
) -> ChebStatus {
    guard(|| {
        let family: Family = arg_str(family, "family")?.parse().map_err(Failure::invalid)?;
        let kind: ChebKind = arg_str(basis, "basis")?.parse().map_err(Failure::invalid)?;
        let n = degree(n)?;
        let expansion = match source {
            ChebSource::ClosedForm => expand_closed_form(family, kind, n),
            ChebSource::Projection => expand_projection(&family.source_poly(n), kind),
            ChebSource::TriangularSolve => expand_triangular(&family.source_poly(n), kind),
            ChebSource::CrossValidated => {
                let report = cross_validate(family, kind, n);
                report.verdict.as_ref().map_err(Failure::mismatch)?;
                report.closed_form
            }
        };
        write_out(out, Box::into_raw(Box::new(ChebExpansion { family, kind, n, expansion })))
    })
}

/// # Safety
/// `e` must be null or a live handle from [`cheb_expansion_new`].
#[no_mangle]
pub unsafe extern "C" fn cheb_expansion_free(e: *mut ChebExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Number of coefficients, `n + 1`.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cheb_expansion_len(e: *const ChebExpansion, out: *mut usize) -> ChebStatus {
    guard(|| {
        let e = arg_ref(e, "expansion")?;
        write_out(out, e.expansion.coefficients.len())
    })
}

/// Coefficient of basis element `k` as `p/q` text.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cheb_expansion_coefficient(
    e: *const ChebExpansion,
    k: usize,
    out: *mut *mut c_char,
) -> ChebStatus {
    guard(|| {
        let e = arg_ref(e, "expansion")?;
        let c = e.expansion.coefficients.get(k).ok_or_else(|| {
            Failure(ChebStatus::OutOfRange, format!("index {k} past {} coefficients", e.expansion.coefficients.len()))
        })?;
        write_string(out, render(c))
    })
}

/// The compact JSON record, as printed by `chebexp expand --format json`.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cheb_expansion_to_json(e: *const ChebExpansion, out: *mut *mut c_char) -> ChebStatus {
    guard(|| {
        let e = arg_ref(e, "expansion")?;
        write_string(out, to_json(&ExpansionRecord::new(e.family, e.kind, e.n, &e.expansion)))
    })
}

/// Runs the three-way check for one `(family, basis, n)`. `CHEB_STATUS_OK` on
/// agreement, `CHEB_STATUS_MISMATCH` otherwise.
///
/// # Safety
/// `family` and `basis` must be NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn cheb_cross_validate(family: *const c_char, basis: *const c_char, n: u32) -> ChebStatus {
    guard(|| {
        let family: Family = arg_str(family, "family")?.parse().map_err(Failure::invalid)?;
        let kind: ChebKind = arg_str(basis, "basis")?.parse().map_err(Failure::invalid)?;
        cross_validate(family, kind, degree(n)?).verdict.map_err(|m| Failure::mismatch(&m))
    })
}

/// `∫ (1-x²)^(k∓1/2) x^m dx` over `[-1, 1]` as `(p/q)*pi` or `0`;
/// `sign` is `"minus"` or `"plus"`.
///
/// # Safety
/// `sign` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cheb_moment(k: u32, sign: *const c_char, m: u32, out: *mut *mut c_char) -> ChebStatus {
    guard(|| {
        let sign: WeightSign = arg_str(sign, "sign")?.parse().map_err(Failure::invalid)?;
        write_string(out, moment(MomentKey::new(k as usize, sign, m as usize)).to_string())
    })
}

/// Runs a verification target (or `"all"`) up to `max_n`. Counts go to
/// `passed` and `total`; `report`, if not null, receives the full text
/// report. Returns `CHEB_STATUS_MISMATCH` if any check failed.
///
/// # Safety
/// `target` must be a NUL-terminated string; `passed` and `total` must be
/// writable; `report` may be null.
#[no_mangle]
pub unsafe extern "C" fn cheb_verify(
    target: *const c_char,
    max_n: u32,
    passed: *mut usize,
    total: *mut usize,
    report: *mut *mut c_char,
) -> ChebStatus {
    guard(|| {
        let targets = VerifyTarget::parse_many(arg_str(target, "target")?).map_err(Failure::invalid)?;
        if passed.is_null() || total.is_null() {
            return Err(Failure::null("output pointer"));
        }
        let reports = run_targets(&targets, degree(max_n)?, VerifyOptions::default());
        let ok: usize = reports.iter().map(|r| r.passed()).sum();
        let all: usize = reports.iter().map(|r| r.checks.len()).sum();
        write_out(passed, ok)?;
        write_out(total, all)?;
        if !report.is_null() {
            write_string(report, reports.iter().map(|r| r.render()).collect())?;
        }
        let first = reports.iter().flat_map(|r| &r.checks).find_map(|c| c.verdict.as_ref().err());
        match first {
            Some(m) => Err(Failure::mismatch(m)),
            None => Ok(()),
        }
    })
}
