//! C ABI over the `apsum` library.
//!
//! Conventions:
//!
//! * Every fallible call returns an [`ApsumStatus`]; results come back through
//!   out-pointers, which are left untouched on failure.
//! * Exact numbers cross the boundary as NUL-terminated `p/q` strings owned by
//!   the caller and released with [`apsum_string_free`].
//! * Polynomials are opaque handles released with [`apsum_polynomial_free`].
//! * [`apsum_last_error`] describes the most recent failure on the calling
//!   thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use apsum::analysis::{cost_profile, identity_suite, FormulaId};
use apsum::bernoulli::{bernoulli_number, bernoulli_poly_eval};
use apsum::power_sum::{direct_sum, eval_binomial_form, eval_poly};
use apsum::special::{a_number, r_whitney, stirling1, stirling2};
use apsum::{BinomialForm, Error, Method, PowerSumPolynomial, PowerSumSpec, Rational};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApsumStatus {
    Ok = 0,
    NullPointer = 1,
    /// An argument is outside the operation's domain.
    Domain = 2,
    /// A string argument could not be parsed.
    Parse = 3,
    /// An internal consistency check failed.
    Internal = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApsumMethod {
    Simple = 0,
    Whitney = 1,
    Griffiths = 2,
    Bazso = 3,
    Ramirez = 4,
    Bernoulli = 5,
}

impl From<ApsumMethod> for Method {
    fn from(m: ApsumMethod) -> Self {
        match m {
            ApsumMethod::Simple => Method::Simple,
            ApsumMethod::Whitney => Method::Whitney,
            ApsumMethod::Griffiths => Method::Griffiths,
            ApsumMethod::Bazso => Method::Bazso,
            ApsumMethod::Ramirez => Method::Ramirez,
            ApsumMethod::Bernoulli => Method::Bernoulli,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApsumBinomialForm {
    Griffiths = 0,
    Bazso = 1,
    Ramirez = 2,
}

impl From<ApsumBinomialForm> for BinomialForm {
    fn from(f: ApsumBinomialForm) -> Self {
        match f {
            ApsumBinomialForm::Griffiths => BinomialForm::Griffiths,
            ApsumBinomialForm::Bazso => BinomialForm::Bazso,
            ApsumBinomialForm::Ramirez => BinomialForm::Ramirez,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApsumFormula {
    Simple6 = 0,
    Whitney7 = 1,
    Griffiths1 = 2,
    Bazso2 = 3,
    Ramirez3 = 4,
    Bernoulli4 = 5,
}

impl From<ApsumFormula> for FormulaId {
    fn from(f: ApsumFormula) -> Self {
        match f {
            ApsumFormula::Simple6 => FormulaId::Simple6,
            ApsumFormula::Whitney7 => FormulaId::Whitney7,
            ApsumFormula::Griffiths1 => FormulaId::Griffiths1,
            ApsumFormula::Bazso2 => FormulaId::Bazso2,
            ApsumFormula::Ramirez3 => FormulaId::Ramirez3,
            ApsumFormula::Bernoulli4 => FormulaId::Bernoulli4,
        }
    }
}

/// Opaque coefficient vector of a power-sum polynomial.
pub struct ApsumPolynomial(PowerSumPolynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: ApsumStatus, msg: impl Into<String>) -> ApsumStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> ApsumStatus {
    let status = match e {
        Error::Domain(_) => ApsumStatus::Domain,
        Error::NonIntegral { .. } => ApsumStatus::Internal,
    };
    fail(status, e.to_string())
}

/// Writes `value` through `out` as an owned C string.
///
/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_string(out: *mut *mut c_char, value: impl ToString) -> ApsumStatus {
    if out.is_null() {
        return fail(ApsumStatus::NullPointer, "output pointer is null");
    }
    match CString::new(value.to_string()) {
        Ok(s) => {
            *out = s.into_raw();
            ApsumStatus::Ok
        }
        Err(_) => fail(ApsumStatus::Internal, "value contains NUL"),
    }
}

unsafe fn write_result<T: ToString>(out: *mut *mut c_char, value: apsum::Result<T>) -> ApsumStatus {
    match value {
        Ok(v) => write_string(out, v),
        Err(e) => from_error(e),
    }
}

fn spec(k: i64, m: i64, r: i64) -> apsum::Result<PowerSumSpec> {
    PowerSumSpec::from_signed(k, m, r)
}

/// Message describing the last failure on this thread, or null. Valid until
/// the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn apsum_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn apsum_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Computes the coefficients `c_1..c_{k+1}` of `S(n)` by `method`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_polynomial_new(
    k: i64,
    m: i64,
    r: i64,
    method: ApsumMethod,
    out: *mut *mut ApsumPolynomial,
) -> ApsumStatus {
    if out.is_null() {
        return fail(ApsumStatus::NullPointer, "output pointer is null");
    }
    match spec(k, m, r) {
        Ok(spec) => {
            let poly = Method::from(method).coeffs(spec);
            *out = Box::into_raw(Box::new(ApsumPolynomial(poly)));
            ApsumStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Releases a polynomial handle. Null is ignored.
///
/// # Safety
/// `poly` must be null or a handle from [`apsum_polynomial_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn apsum_polynomial_free(poly: *mut ApsumPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Number of coefficients (`k + 1`), or 0 for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn apsum_polynomial_len(poly: *const ApsumPolynomial) -> usize {
    poly.as_ref().map_or(0, |p| p.0.coeffs().len())
}

/// Coefficient `c_t`, `1 <= t <= k+1`, as a string.
///
/// # Safety
/// `poly` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_polynomial_coeff(
    poly: *const ApsumPolynomial,
    t: u32,
    out: *mut *mut c_char,
) -> ApsumStatus {
    let Some(p) = poly.as_ref() else {
        return fail(ApsumStatus::NullPointer, "polynomial handle is null");
    };
    match p.0.coeff(t) {
        Some(c) => write_string(out, c),
        None => fail(
            ApsumStatus::Domain,
            format!("coefficient index t = {t} outside 1..={}", p.0.degree()),
        ),
    }
}

/// `S(n)` evaluated from the coefficient vector.
///
/// # Safety
/// `poly` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_polynomial_eval(
    poly: *const ApsumPolynomial,
    n: u64,
    out: *mut *mut c_char,
) -> ApsumStatus {
    let Some(p) = poly.as_ref() else {
        return fail(ApsumStatus::NullPointer, "polynomial handle is null");
    };
    if n == 0 {
        return fail(ApsumStatus::Domain, "number of terms n must be >= 1");
    }
    write_string(out, eval_poly(&p.0, n))
}

/// Brute-force `sum_{i<n} (i m + r)^k`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_direct_sum(k: i64, m: i64, r: i64, n: u64, out: *mut *mut c_char) -> ApsumStatus {
    write_result(out, spec(k, m, r).and_then(|s| direct_sum(s, n)))
}

/// `S(n)` through a closed binomial-basis form.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_eval_binomial_form(
    k: i64,
    m: i64,
    r: i64,
    n: u64,
    form: ApsumBinomialForm,
    out: *mut *mut c_char,
) -> ApsumStatus {
    write_result(out, spec(k, m, r).and_then(|s| eval_binomial_form(s, n, form.into())))
}

/// Bernoulli number `B_k` (`B_1 = -1/2`).
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_bernoulli_number(k: u32, out: *mut *mut c_char) -> ApsumStatus {
    write_string(out, bernoulli_number(k))
}

/// Bernoulli polynomial `B_k(x)` at a rational given as `"p/q"` or `"p"`.
///
/// # Safety
/// `x` must be a NUL-terminated string; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_bernoulli_poly_eval(k: u32, x: *const c_char, out: *mut *mut c_char) -> ApsumStatus {
    if x.is_null() {
        return fail(ApsumStatus::NullPointer, "x is null");
    }
    let parsed = CStr::from_ptr(x)
        .to_str()
        .ok()
        .and_then(|s| s.trim().parse::<Rational>().ok());
    match parsed {
        Some(x) => write_string(out, bernoulli_poly_eval(k, &x)),
        None => fail(ApsumStatus::Parse, "x is not a rational of the form p/q"),
    }
}

/// Signed Stirling number of the first kind `s(k, j)`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_stirling1(k: u32, j: u32, out: *mut *mut c_char) -> ApsumStatus {
    write_string(out, stirling1(k, j))
}

/// Stirling number of the second kind `S(k, j)`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_stirling2(k: u32, j: u32, out: *mut *mut c_char) -> ApsumStatus {
    write_string(out, stirling2(k, j))
}

/// r-Whitney number of the second kind `W_{m,r}(k, j)`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_r_whitney(k: u32, j: u32, m: u32, r: u32, out: *mut *mut c_char) -> ApsumStatus {
    write_result(out, r_whitney(k, j, m, r))
}

/// `A_{m,r}(k, j)`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn apsum_a_number(k: u32, j: u32, m: u32, r: u32, out: *mut *mut c_char) -> ApsumStatus {
    write_result(out, a_number(k, j, m, r))
}

/// Instrumented cost of `c_{k,t}` under full expansion.
///
/// # Safety
/// Both out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn apsum_cost_profile(
    formula: ApsumFormula,
    k: u32,
    t: u32,
    power_evals: *mut u64,
    total_terms: *mut u64,
) -> ApsumStatus {
    if power_evals.is_null() || total_terms.is_null() {
        return fail(ApsumStatus::NullPointer, "output pointer is null");
    }
    match cost_profile(formula.into(), k, t) {
        Ok(rep) => {
            *power_evals = rep.power_evals;
            *total_terms = rep.total_terms;
            ApsumStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Runs the identity ledger over `k <= max_k` and the given `m`, `r` sets,
/// storing the number of failed identities in `failed`.
///
/// # Safety
/// `m_set` and `r_set` must point to `m_len` / `r_len` readable values (or be
/// null with length 0); `failed` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn apsum_verify(
    max_k: u32,
    m_set: *const u32,
    m_len: usize,
    r_set: *const u32,
    r_len: usize,
    failed: *mut usize,
) -> ApsumStatus {
    if failed.is_null() || (m_set.is_null() && m_len > 0) || (r_set.is_null() && r_len > 0) {
        return fail(ApsumStatus::NullPointer, "null argument");
    }
    let slice = |p: *const u32, n: usize| {
        if n == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(p, n)
        }
    };
    match identity_suite(max_k, slice(m_set, m_len), slice(r_set, r_len)) {
        Ok(reports) => {
            *failed = reports.iter().filter(|r| !r.passed()).count();
            ApsumStatus::Ok
        }
        Err(e) => from_error(e),
    }
}
