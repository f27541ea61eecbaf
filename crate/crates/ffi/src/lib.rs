//! C ABI over the `ztt` engine.
//!
//! Every fallible call returns a [`ZttStatus`] and writes its result through
//! an out-pointer. On failure a description is kept per thread and can be
//! read with [`ztt_last_error_message`]. Handles are opaque and must be
//! released with the matching `*_free` function; strings returned by the
//! library must be released with [`ztt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use ztt::dist::{s_pmf, Pmf};
use ztt::exact::{format_rational, parse_rational, to_f64};
use ztt::theta::compute_theta;
use ztt::weights::parse_weight_config;
use ztt::{Algorithm, Error, Poly, Rational, WeightSequence};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZttStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    WeightConfig = 4,
    NotDistinct = 5,
    OutOfRange = 6,
    BudgetExceeded = 7,
    DivisionByZero = 8,
    Unsupported = 9,
    Panic = 10,
}

/// Algorithm selector for [`ztt_theta_compute`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZttAlgorithm {
    Product = 0,
    Newton = 1,
    Bell = 2,
    Determinant = 3,
    Convolution = 4,
}

fn algorithm_from_raw(raw: u32) -> FfiResult<Algorithm> {
    Ok(match raw {
        x if x == ZttAlgorithm::Product as u32 => Algorithm::Product,
        x if x == ZttAlgorithm::Newton as u32 => Algorithm::Newton,
        x if x == ZttAlgorithm::Bell as u32 => Algorithm::Bell,
        x if x == ZttAlgorithm::Determinant as u32 => Algorithm::Determinant,
        x if x == ZttAlgorithm::Convolution as u32 => Algorithm::Convolution,
        other => return Err(Failure::new(ZttStatus::InvalidArgument, format!("unknown algorithm {other}"))),
    })
}

/// A weight sequence.
pub struct ZttWeights(WeightSequence);

/// The polynomial `theta_{n;k}(t)`.
pub struct ZttTheta(Poly);

/// An exact probability mass function.
pub struct ZttPmf(Pmf);

struct Failure {
    status: ZttStatus,
    message: String,
}

impl Failure {
    fn new(status: ZttStatus, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::DivisionByZero => ZttStatus::DivisionByZero,
            Error::IndexOutOfRange { .. } => ZttStatus::OutOfRange,
            Error::WeightConfig(_) => ZttStatus::WeightConfig,
            Error::NotDistinct(_) => ZttStatus::NotDistinct,
            Error::BudgetExceeded { .. } => ZttStatus::BudgetExceeded,
            Error::Unsupported(_) => ZttStatus::Unsupported,
            Error::OrderMismatch { .. }
            | Error::InvalidParameter(_)
            | Error::GradeMismatch { .. }
            | Error::ParseRational(_) => ZttStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> FfiResult<()>) -> ZttStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            ZttStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(failure.message);
            failure.status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            ZttStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| Failure::new(ZttStatus::NullPointer, format!("{what} is NULL")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> FfiResult<&'a mut T> {
    p.as_mut().ok_or_else(|| Failure::new(ZttStatus::NullPointer, format!("{what} is NULL")))
}

unsafe fn as_str<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure::new(ZttStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::new(ZttStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("rendered numbers contain no NUL").into_raw()
}

fn index<'a, T>(items: &'a [T], i: usize, what: &str) -> FfiResult<&'a T> {
    items
        .get(i)
        .ok_or_else(|| Failure::new(ZttStatus::OutOfRange, format!("{what} index {i} out of range 0..{}", items.len())))
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ztt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL after a success.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn ztt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string obtained from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ztt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builtin weights: `ones`, `linear` or `zeta:<m>`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_weights_builtin(name: *const c_char, out: *mut *mut ZttWeights) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let seq = WeightSequence::builtin(as_str(name, "name")?)?;
        *out = boxed(ZttWeights(seq));
        Ok(())
    })
}

/// Weights from a JSON configuration document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_weights_from_json(json: *const c_char, out: *mut *mut ZttWeights) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let seq = parse_weight_config(as_str(json, "json")?)?;
        *out = boxed(ZttWeights(seq));
        Ok(())
    })
}

/// Custom finite weights from `len` rational strings such as `"3/4"`.
///
/// # Safety
/// `values` must point to `len` NUL-terminated strings and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ztt_weights_custom(
    values: *const *const c_char,
    len: usize,
    out: *mut *mut ZttWeights,
) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        if values.is_null() {
            return Err(Failure::new(ZttStatus::NullPointer, "values is NULL"));
        }
        let parsed = std::slice::from_raw_parts(values, len)
            .iter()
            .map(|&v| Ok(parse_rational(as_str(v, "value")?)?))
            .collect::<FfiResult<Vec<Rational>>>()?;
        *out = boxed(ZttWeights(WeightSequence::custom(parsed)?));
        Ok(())
    })
}

/// # Safety
/// `w` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ztt_weights_free(w: *mut ZttWeights) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Computes `theta_{n;k}(t)`; `algorithm` is one of the `ZttAlgorithm` values.
///
/// # Safety
/// `weights` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_theta_compute(
    weights: *const ZttWeights,
    n: usize,
    k: usize,
    algorithm: u32,
    out: *mut *mut ZttTheta,
) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let seq = &as_ref(weights, "weights")?.0;
        let theta = compute_theta(seq, n, k, algorithm_from_raw(algorithm)?)?;
        *out = boxed(ZttTheta(theta.into_poly()));
        Ok(())
    })
}

/// Number of stored coefficients (degree plus one; zero for the zero polynomial).
///
/// # Safety
/// `theta` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_theta_len(theta: *const ZttTheta, out: *mut usize) -> ZttStatus {
    guard(|| {
        *out_ptr(out, "out")? = as_ref(theta, "theta")?.0.coeffs().len();
        Ok(())
    })
}

/// Coefficient of `t^i` as an exact `p/q` string; free with [`ztt_string_free`].
///
/// # Safety
/// `theta` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_theta_coeff_string(theta: *const ZttTheta, i: usize, out: *mut *mut c_char) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let c = index(as_ref(theta, "theta")?.0.coeffs(), i, "coefficient")?;
        *out = to_c_string(format_rational(c));
        Ok(())
    })
}

/// Coefficient of `t^i` rounded to a double.
///
/// # Safety
/// `theta` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_theta_coeff_f64(theta: *const ZttTheta, i: usize, out: *mut f64) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = to_f64(index(as_ref(theta, "theta")?.0.coeffs(), i, "coefficient")?);
        Ok(())
    })
}

/// Exact value at the rational `t`, given as a string such as `"1/2"`.
///
/// # Safety
/// `theta` must be a live handle, `t` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_theta_eval_string(
    theta: *const ZttTheta,
    t: *const c_char,
    out: *mut *mut c_char,
) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let t = parse_rational(as_str(t, "t")?)?;
        *out = to_c_string(format_rational(&as_ref(theta, "theta")?.0.eval(&t)));
        Ok(())
    })
}

/// # Safety
/// `theta` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ztt_theta_free(theta: *mut ZttTheta) {
    if !theta.is_null() {
        drop(Box::from_raw(theta));
    }
}

/// Law of `S_{n,k}`.
///
/// # Safety
/// `weights` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_pmf_sigma(
    weights: *const ZttWeights,
    n: usize,
    k: usize,
    out: *mut *mut ZttPmf,
) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let pmf = s_pmf(&as_ref(weights, "weights")?.0, n, k)?;
        *out = boxed(ZttPmf(pmf));
        Ok(())
    })
}

/// Smallest support point; mass `i` sits at `offset + i`.
///
/// # Safety
/// `pmf` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_pmf_offset(pmf: *const ZttPmf, out: *mut i64) -> ZttStatus {
    guard(|| {
        *out_ptr(out, "out")? = as_ref(pmf, "pmf")?.0.offset();
        Ok(())
    })
}

/// Number of stored masses.
///
/// # Safety
/// `pmf` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_pmf_len(pmf: *const ZttPmf, out: *mut usize) -> ZttStatus {
    guard(|| {
        *out_ptr(out, "out")? = as_ref(pmf, "pmf")?.0.probs().len();
        Ok(())
    })
}

/// Mass `i` as an exact `p/q` string; free with [`ztt_string_free`].
///
/// # Safety
/// `pmf` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_pmf_prob_string(pmf: *const ZttPmf, i: usize, out: *mut *mut c_char) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = to_c_string(format_rational(index(as_ref(pmf, "pmf")?.0.probs(), i, "mass")?));
        Ok(())
    })
}

/// Mass `i` rounded to a double.
///
/// # Safety
/// `pmf` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_pmf_prob_f64(pmf: *const ZttPmf, i: usize, out: *mut f64) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = to_f64(index(as_ref(pmf, "pmf")?.0.probs(), i, "mass")?);
        Ok(())
    })
}

/// Exact mean as a `p/q` string; free with [`ztt_string_free`].
///
/// # Safety
/// `pmf` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_pmf_mean_string(pmf: *const ZttPmf, out: *mut *mut c_char) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = to_c_string(format_rational(&as_ref(pmf, "pmf")?.0.mean()));
        Ok(())
    })
}

/// Exact variance as a `p/q` string; free with [`ztt_string_free`].
///
/// # Safety
/// `pmf` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ztt_pmf_variance_string(pmf: *const ZttPmf, out: *mut *mut c_char) -> ZttStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = to_c_string(format_rational(&as_ref(pmf, "pmf")?.0.variance()));
        Ok(())
    })
}

/// # Safety
/// `pmf` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ztt_pmf_free(pmf: *mut ZttPmf) {
    if !pmf.is_null() {
        drop(Box::from_raw(pmf));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_mapping() {
        let f: Failure = Error::NotDistinct(3).into();
        assert_eq!(f.status, ZttStatus::NotDistinct);
        let f: Failure = Error::ParseRational("x".into()).into();
        assert_eq!(f.status, ZttStatus::InvalidArgument);
    }

    #[test]
    fn guard_records_and_clears_messages() {
        assert_eq!(guard(|| Err(Failure::new(ZttStatus::OutOfRange, "nope"))), ZttStatus::OutOfRange);
        let msg = unsafe { CStr::from_ptr(ztt_last_error_message()) };
        assert_eq!(msg.to_str().unwrap(), "nope");
        assert_eq!(guard(|| Ok(())), ZttStatus::Ok);
        assert!(ztt_last_error_message().is_null());
        assert_eq!(guard(|| panic!("boom")), ZttStatus::Panic);
    }
}
