//! Matrix exponential by scaling and squaring of a truncated Taylor series.

use nalgebra::{ComplexField, DMatrix};

use crate::error::{Error, Result};

/// Largest 1-norm fed to the Taylor series; larger inputs are halved first.
pub const SCALED_NORM_BOUND: f64 = 0.5;
const MAX_TERMS: usize = 40;

/// `max_j Σ_i |a_ij|`.
pub fn one_norm<T: ComplexField<RealField = f64>>(a: &DMatrix<T>) -> f64 {
    a.column_iter().map(|col| col.iter().map(|x| x.clone().modulus()).sum::<f64>()).fold(0.0, f64::max)
}

/// `e^A`.
///
/// `A` is scaled by `2^-s` until its 1-norm is at most [`SCALED_NORM_BOUND`],
/// the series is summed until the next term is below machine precision
/// relative to the partial sum, and the result is squared `s` times.
pub fn mat_exp<T: ComplexField<RealField = f64>>(a: &DMatrix<T>) -> Result<DMatrix<T>> {
    assert!(a.is_square(), "exponential of a non-square matrix");
    if a.iter().any(|x| !x.clone().is_finite()) {
        return Err(Error::NonFinite);
    }
    let n = a.nrows();
    let norm = one_norm(a);
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > SCALED_NORM_BOUND {
        scale *= 0.5;
        squarings += 1;
    }
    let x = a.map(|v| v.scale(scale));

    let mut term = DMatrix::<T>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..=MAX_TERMS {
        term = (&term * &x).map(|v| v.scale(1.0 / k as f64));
        sum += &term;
        if term.norm() <= f64::EPSILON * sum.norm() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    Ok(sum)
}
