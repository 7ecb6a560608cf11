//! C ABI over the tripow library. Matrices cross the boundary as opaque
//! handles freed by `tripow_matrix_free`; scalars as `TripowComplex`
//! pairs; exact sequence values as malloc-style decimal strings freed by
//! `tripow_string_free`. Every entry point returns a `TripowStatus` and
//! catches panics, so no Rust unwinding ever crosses into C frames.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use tripow::fibfact::{fib, pell};
use tripow::numkit::tridiag_det;
use tripow::powers::{power, PowerRequest};
use tripow::specmat::{build, eigenvalues, Family, FamilySpec};
use tripow::{ComplexScalar, DenseMatrix, Error};

/// Result discriminant for every call; zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripowStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Singular = 3,
    IndexOutOfRange = 4,
    DegenerateParameter = 5,
    NonFinite = 6,
    Internal = 7,
}

/// Matrix family selector matching the library's two constructions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripowFamily {
    A = 0,
    ADagger = 1,
}

/// Complex scalar passed by value in both directions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripowComplex {
    pub re: f64,
    pub im: f64,
}

/// Opaque dense matrix handle.
pub struct TripowMatrix {
    inner: DenseMatrix,
}

fn status_of(err: &Error) -> TripowStatus {
    match err {
        Error::DimensionMismatch(_) | Error::InvalidSpec(_) => TripowStatus::InvalidArgument,
        Error::Singular(_) => TripowStatus::Singular,
        Error::IndexOutOfRange(_) => TripowStatus::IndexOutOfRange,
        Error::DegenerateParameter(_) => TripowStatus::DegenerateParameter,
        Error::NonFinite(_) => TripowStatus::NonFinite,
    }
}

fn family_of(family: TripowFamily) -> Family {
    match family {
        TripowFamily::A => Family::A,
        TripowFamily::ADagger => Family::ADagger,
    }
}

fn scalar_of(z: TripowComplex) -> ComplexScalar {
    ComplexScalar::new(z.re, z.im)
}

fn scalar_out(z: ComplexScalar) -> TripowComplex {
    TripowComplex { re: z.re, im: z.im }
}

/// Runs `body` with panics converted to `Internal`, forwarding its status.
fn guarded(body: impl FnOnce() -> TripowStatus) -> TripowStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(TripowStatus::Internal)
}

/// Writes the `n` closed-form eigenvalues of the selected family into
/// `out`, which must point to space for `n` values.
///
/// # Safety
/// `out` must be valid for `n` writes of `TripowComplex`.
#[no_mangle]
pub unsafe extern "C" fn tripow_eigenvalues(
    family: TripowFamily,
    n: usize,
    a: TripowComplex,
    b: TripowComplex,
    out: *mut TripowComplex,
) -> TripowStatus {
    if out.is_null() {
        return TripowStatus::NullPointer;
    }
    guarded(|| {
        let spec = match FamilySpec::new(family_of(family), n, scalar_of(a), scalar_of(b)) {
            Ok(spec) => spec,
            Err(err) => return status_of(&err),
        };
        match eigenvalues(&spec) {
            Ok(values) => {
                for (offset, value) in values.into_iter().enumerate() {
                    unsafe { out.add(offset).write(scalar_out(value)) };
                }
                TripowStatus::Ok
            }
            Err(err) => status_of(&err),
        }
    })
}

/// Computes the `r`-th integer power (family A only) and hands back an
/// opaque matrix handle through `out`.
///
/// # Safety
/// `out` must be a valid pointer; on `Ok` it receives a handle that must
/// be released with `tripow_matrix_free`.
#[no_mangle]
pub unsafe extern "C" fn tripow_power(
    family: TripowFamily,
    n: usize,
    a: TripowComplex,
    b: TripowComplex,
    r: i64,
    out: *mut *mut TripowMatrix,
) -> TripowStatus {
    if out.is_null() {
        return TripowStatus::NullPointer;
    }
    guarded(|| {
        let spec = match FamilySpec::new(family_of(family), n, scalar_of(a), scalar_of(b)) {
            Ok(spec) => spec,
            Err(err) => return status_of(&err),
        };
        let request = match PowerRequest::new(spec, r) {
            Ok(request) => request,
            Err(err) => return status_of(&err),
        };
        match power(&request) {
            Ok(result) => {
                let handle = Box::new(TripowMatrix { inner: result.value });
                unsafe { out.write(Box::into_raw(handle)) };
                TripowStatus::Ok
            }
            Err(err) => status_of(&err),
        }
    })
}

/// Evaluates the determinant through the band recurrence.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn tripow_det(
    family: TripowFamily,
    n: usize,
    a: TripowComplex,
    b: TripowComplex,
    out: *mut TripowComplex,
) -> TripowStatus {
    if out.is_null() {
        return TripowStatus::NullPointer;
    }
    guarded(|| {
        let spec = match FamilySpec::new(family_of(family), n, scalar_of(a), scalar_of(b)) {
            Ok(spec) => spec,
            Err(err) => return status_of(&err),
        };
        let det = tridiag_det(&build(&spec));
        unsafe { out.write(scalar_out(det)) };
        TripowStatus::Ok
    })
}

/// Returns the order of a matrix handle, or 0 for a null handle.
///
/// # Safety
/// `matrix` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn tripow_matrix_order(matrix: *const TripowMatrix) -> usize {
    if matrix.is_null() {
        return 0;
    }
    unsafe { (*matrix).inner.n() }
}

/// Reads entry (`row`, `col`), zero-based, from a matrix handle.
///
/// # Safety
/// `matrix` must be null or a live handle; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn tripow_matrix_get(
    matrix: *const TripowMatrix,
    row: usize,
    col: usize,
    out: *mut TripowComplex,
) -> TripowStatus {
    if matrix.is_null() || out.is_null() {
        return TripowStatus::NullPointer;
    }
    let inner = unsafe { &(*matrix).inner };
    if row >= inner.n() || col >= inner.n() {
        return TripowStatus::IndexOutOfRange;
    }
    unsafe { out.write(scalar_out(inner.get(row, col))) };
    TripowStatus::Ok
}

/// Releases a matrix handle; null is a no-op.
///
/// # Safety
/// `matrix` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn tripow_matrix_free(matrix: *mut TripowMatrix) {
    if !matrix.is_null() {
        drop(unsafe { Box::from_raw(matrix) });
    }
}

fn sequence_string(value: String, out: *mut *mut c_char) -> TripowStatus {
    match CString::new(value) {
        Ok(text) => {
            unsafe { out.write(text.into_raw()) };
            TripowStatus::Ok
        }
        Err(_) => TripowStatus::Internal,
    }
}

/// Writes the `n`-th Fibonacci number as a decimal string; release it with
/// `tripow_string_free`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn tripow_fib(n: u64, out: *mut *mut c_char) -> TripowStatus {
    if out.is_null() {
        return TripowStatus::NullPointer;
    }
    guarded(|| sequence_string(fib(n).to_string(), out))
}

/// Writes the `n`-th Pell number as a decimal string; release it with
/// `tripow_string_free`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn tripow_pell(n: u64, out: *mut *mut c_char) -> TripowStatus {
    if out.is_null() {
        return TripowStatus::NullPointer;
    }
    guarded(|| sequence_string(pell(n).to_string(), out))
}

/// Releases a string produced by this library; null is a no-op.
///
/// # Safety
/// `text` must be null or a string returned by this library, not freed
/// before.
#[no_mangle]
pub unsafe extern "C" fn tripow_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}
