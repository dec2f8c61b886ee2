use num_complex::Complex64 as C64;

use super::{hermitian_eig, ComplexMatrix};
use crate::error::{Error, Result};

/// Eigenvalues below this are treated as genuine negativity.
pub const PSD_TOL: f64 = 1e-10;
/// Eigenvalues below this fraction of the largest are roundoff; rooting them
/// would turn 1e-17 noise into 3e-9 errors.
const ROOT_FLOOR: f64 = 1e-14;

pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.ensure_same_dim(b)?;
    Ok(&(a * b) - &(b * a))
}

/// Principal square root of a positive-semidefinite Hermitian matrix.
///
/// Eigenvalues in [-1e-10, 0) are clipped to zero before rooting, as are
/// positive eigenvalues at the roundoff level of the largest one.
pub fn matrix_sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let spec = hermitian_eig(m)?;
    let min_eigenvalue = spec.eigenvalues()[0];
    if min_eigenvalue < -PSD_TOL {
        return Err(Error::NotPsd { min_eigenvalue });
    }
    let floor = ROOT_FLOOR * spec.eigenvalues().last().copied().unwrap_or(0.0).max(0.0);
    Ok(spec
        .map(|l| C64::new(if l <= floor { 0.0 } else { l.sqrt() }, 0.0))
        .hermitian_part())
}

/// exp(-i H dt) built from the spectrum of H.
pub fn unitary_step(h: &ComplexMatrix, dt: f64) -> Result<ComplexMatrix> {
    let spec = hermitian_eig(h)?;
    Ok(spec.map(|l| C64::from_polar(1.0, -l * dt)))
}
