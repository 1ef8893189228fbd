//! C ABI for the `genfrob` library.
//!
//! Every fallible function returns a [`GfStatus`] and writes its result
//! through out-pointers. Heap objects are opaque handles released with the
//! matching `*_free` function. After a non-`Ok` status,
//! [`gf_last_error_message`] describes the failure on the calling thread.
//!
//! The header `include/genfrob.h` is generated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use genfrob::{
    beck_kifer_reduce, denumerant_series, denumerant_two, denumerant_with, detect_cases,
    gen_frobenius, gen_frobenius_two, theorem1_row, DenumerantTable, Error, Limits, Method,
    Strategy, TheoremCase, Tuple,
};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    NotCoprime = 3,
    WrongArity = 4,
    Overflow = 5,
    CapacityExceeded = 6,
    NoApplicableCase = 7,
    Cancelled = 8,
    OutOfRange = 9,
    Internal = 10,
}

/// Which route `gf_gen_frobenius` takes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfStrategy {
    Auto = 0,
    Brute = 1,
    Closed = 2,
    Reduce = 3,
}

/// How a generalized Frobenius number was obtained.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfMethod {
    TwoVarClosedForm = 0,
    BruteForce = 1,
    GcdReduction = 2,
    Theorem1 = 3,
}

impl From<Method> for GfMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::TwoVarClosedForm => GfMethod::TwoVarClosedForm,
            Method::BruteForce => GfMethod::BruteForce,
            Method::GcdReduction => GfMethod::GcdReduction,
            Method::Theorem1 => GfMethod::Theorem1,
        }
    }
}

/// Opaque validated tuple.
pub struct GfTuple(Tuple);

/// Opaque table of `d(0; A) ... d(N; A)`.
pub struct GfSeries(DenumerantTable);

/// Opaque list of closed-form cases of a triple.
pub struct GfCases(Vec<TheoremCase>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GfStatus {
    match e {
        Error::InvalidTuple(_) | Error::InvalidInput(_) => GfStatus::InvalidInput,
        Error::WrongArity { .. } => GfStatus::WrongArity,
        Error::NotCoprime { .. } => GfStatus::NotCoprime,
        Error::Overflow(_) => GfStatus::Overflow,
        Error::CapacityExceeded { .. } => GfStatus::CapacityExceeded,
        Error::NoApplicableCase(_) => GfStatus::NoApplicableCase,
        Error::Cancelled => GfStatus::Cancelled,
        Error::Inconsistent(_) | Error::Io(_) => GfStatus::Internal,
    }
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), GfStatus>) -> GfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GfStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic".into());
            GfStatus::Internal
        }
    }
}

fn lift<T>(r: genfrob::Result<T>) -> Result<T, GfStatus> {
    r.map_err(|e| {
        set_last_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, GfStatus> {
    p.as_ref().ok_or_else(|| {
        set_last_error("null pointer argument".into());
        GfStatus::NullPointer
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), GfStatus> {
    if out.is_null() {
        set_last_error("null output pointer".into());
        return Err(GfStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn limits() -> Limits {
    Limits::from_env().unwrap_or_default()
}

/// ABI version, `major * 10000 + minor * 100 + patch`.
#[no_mangle]
pub extern "C" fn gf_version() -> u32 {
    100
}

/// Message for the last non-`Ok` status on this thread, or NULL.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Creates a tuple from `len >= 2` positive parts.
///
/// # Safety
/// `parts` must point to `len` readable `int64_t`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_tuple_new(parts: *const i64, len: usize, out: *mut *mut GfTuple) -> GfStatus {
    guard(|| {
        if parts.is_null() {
            set_last_error("null parts".into());
            return Err(GfStatus::NullPointer);
        }
        let parts = std::slice::from_raw_parts(parts, len).to_vec();
        let tuple = lift(Tuple::new(parts))?;
        write_out(out, Box::into_raw(Box::new(GfTuple(tuple))))
    })
}

/// # Safety
/// `tuple` must come from `gf_tuple_new` and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gf_tuple_free(tuple: *mut GfTuple) {
    if !tuple.is_null() {
        drop(Box::from_raw(tuple));
    }
}

/// Number of parts, or 0 for NULL.
///
/// # Safety
/// `tuple` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gf_tuple_len(tuple: *const GfTuple) -> usize {
    tuple.as_ref().map_or(0, |t| t.0.len())
}

/// gcd of all parts.
///
/// # Safety
/// `tuple` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_tuple_gcd(tuple: *const GfTuple, out: *mut i64) -> GfStatus {
    guard(|| write_out(out, deref(tuple)?.0.overall_gcd()))
}

/// `d(n; A)`; zero for negative `n`.
///
/// # Safety
/// `tuple` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_denumerant(tuple: *const GfTuple, n: i64, out: *mut u64) -> GfStatus {
    guard(|| {
        let count = lift(denumerant_with(n, &deref(tuple)?.0, &limits()))?;
        write_out(out, count)
    })
}

/// `d(n; a, b)` by the congruence count.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_denumerant_two(n: i64, a: i64, b: i64, out: *mut u64) -> GfStatus {
    guard(|| {
        if a < 1 || b < 1 {
            set_last_error(format!("parts ({a}, {b}) must be positive"));
            return Err(GfStatus::InvalidInput);
        }
        write_out(out, denumerant_two(n, a, b))
    })
}

/// Tabulates `d(0; A) ... d(n_max; A)`.
///
/// # Safety
/// `tuple` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_series_new(tuple: *const GfTuple, n_max: u64, out: *mut *mut GfSeries) -> GfStatus {
    guard(|| {
        let table = lift(denumerant_series(&deref(tuple)?.0, n_max, &limits()))?;
        write_out(out, Box::into_raw(Box::new(GfSeries(table))))
    })
}

/// Number of entries (`n_max + 1`), or 0 for NULL.
///
/// # Safety
/// `series` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gf_series_len(series: *const GfSeries) -> usize {
    series.as_ref().map_or(0, |s| s.0.counts().len())
}

/// # Safety
/// `series` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_series_get(series: *const GfSeries, n: u64, out: *mut u64) -> GfStatus {
    guard(|| {
        let counts = deref(series)?.0.counts();
        match counts.get(n as usize) {
            Some(&c) => write_out(out, c),
            None => {
                set_last_error(format!("n = {n} is past the end of the table"));
                Err(GfStatus::OutOfRange)
            }
        }
    })
}

/// # Safety
/// `series` must come from `gf_series_new` and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gf_series_free(series: *mut GfSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// `(s+1)ab - a - b` for coprime `a, b`; `s = -1` gives `-2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_gen_frobenius_two(a: i64, b: i64, s: i64, out: *mut i64) -> GfStatus {
    guard(|| write_out(out, lift(gen_frobenius_two(a, b, s))?))
}

/// `g(A; s)`. `out_method` may be NULL.
///
/// # Safety
/// `tuple` must be a live handle; `out_value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_gen_frobenius(
    tuple: *const GfTuple,
    s: u64,
    strategy: GfStrategy,
    out_value: *mut i64,
    out_method: *mut GfMethod,
) -> GfStatus {
    guard(|| {
        let t = &deref(tuple)?.0;
        let lim = limits();
        let result = lift(match strategy {
            GfStrategy::Auto => gen_frobenius(t, s, Strategy::Auto, &lim),
            GfStrategy::Brute => gen_frobenius(t, s, Strategy::Brute, &lim),
            GfStrategy::Closed => gen_frobenius(t, s, Strategy::Closed, &lim),
            GfStrategy::Reduce => beck_kifer_reduce(t, s, &lim),
        })?;
        write_out(out_value, result.value)?;
        if !out_method.is_null() {
            out_method.write(result.method.into());
        }
        Ok(())
    })
}

/// Closed-form cases of a coprime triple; the list may be empty.
///
/// # Safety
/// `tuple` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_cases_detect(tuple: *const GfTuple, out: *mut *mut GfCases) -> GfStatus {
    guard(|| {
        let cases = lift(detect_cases(&deref(tuple)?.0))?;
        write_out(out, Box::into_raw(Box::new(GfCases(cases))))
    })
}

/// # Safety
/// `cases` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gf_cases_len(cases: *const GfCases) -> usize {
    cases.as_ref().map_or(0, |c| c.0.len())
}

fn case_at(cases: &GfCases, index: usize) -> Result<&TheoremCase, GfStatus> {
    cases.0.get(index).ok_or_else(|| {
        set_last_error(format!("case index {index} out of range"));
        GfStatus::OutOfRange
    })
}

/// Pivot position (1-based) and `d` of case `index`.
///
/// # Safety
/// `cases` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_cases_info(
    cases: *const GfCases,
    index: usize,
    out_pivot: *mut usize,
    out_d: *mut i64,
) -> GfStatus {
    guard(|| {
        let case = case_at(deref(cases)?, index)?;
        write_out(out_pivot, case.pivot_label())?;
        write_out(out_d, case.d)
    })
}

/// Index `sigma` and value `g(A; sigma)` of case `index` at `s`.
///
/// # Safety
/// `cases` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_cases_row(
    cases: *const GfCases,
    index: usize,
    s: u64,
    out_sigma: *mut u64,
    out_g: *mut i64,
) -> GfStatus {
    guard(|| {
        let row = lift(theorem1_row(case_at(deref(cases)?, index)?, s))?;
        write_out(out_sigma, row.sigma)?;
        write_out(out_g, row.g)
    })
}

/// # Safety
/// `cases` must come from `gf_cases_detect` and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gf_cases_free(cases: *mut GfCases) {
    if !cases.is_null() {
        drop(Box::from_raw(cases));
    }
}
