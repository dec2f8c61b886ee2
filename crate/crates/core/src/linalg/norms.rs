use num_complex::Complex64 as C64;

use super::{hermitian_eig, ComplexMatrix};
use crate::error::{Error, Result};

/// Singular values in descending order.
///
/// Hermitian and anti-Hermitian inputs (ρ - σ, [H, ρ]) are normal, so their
/// singular values are |eigenvalues| and no Gram matrix is formed. Other
/// matrices go through the eigenvalues of M^dagger M.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let tol = 1e-13 * m.max_abs().max(f64::MIN_POSITIVE);
    let mut s: Vec<f64> = if m.hermitian_deviation() <= tol {
        hermitian_eig(&m.hermitian_part())?.eigenvalues().iter().map(|l| l.abs()).collect()
    } else {
        let im = m.scale(C64::new(0.0, 1.0));
        if im.hermitian_deviation() <= tol {
            hermitian_eig(&im.hermitian_part())?.eigenvalues().iter().map(|l| l.abs()).collect()
        } else {
            let gram = &m.adjoint() * m;
            hermitian_eig(&gram.hermitian_part())?
                .eigenvalues()
                .iter()
                .map(|l| l.max(0.0).sqrt())
                .collect()
        }
    };
    s.sort_by(|a, b| b.total_cmp(a));
    Ok(s)
}

/// Schatten p-norm (Σ s_k^p)^{1/p}; pass `f64::INFINITY` for the operator norm.
pub fn schatten_norm(m: &ComplexMatrix, p: f64) -> Result<f64> {
    check_exponent(p)?;
    if p == 2.0 {
        return Ok(m.frobenius_norm());
    }
    Ok(norm_of_values(&singular_values(m)?, p))
}

/// Schatten norm of a matrix already known to be Hermitian.
///
/// Skips the normality checks of [`schatten_norm`]; used on the hot path of
/// the coherence optimizer.
pub fn schatten_norm_hermitian(m: &ComplexMatrix, p: f64) -> Result<f64> {
    check_exponent(p)?;
    if p == 2.0 {
        return Ok(m.frobenius_norm());
    }
    let s: Vec<f64> = hermitian_eig(m)?.eigenvalues().iter().map(|l| l.abs()).collect();
    Ok(norm_of_values(&s, p))
}

fn check_exponent(p: f64) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP(p));
    }
    Ok(())
}

fn norm_of_values(s: &[f64], p: f64) -> f64 {
    let smax = s.iter().copied().fold(0.0, f64::max);
    if p.is_infinite() {
        return smax;
    }
    if p == 1.0 {
        return s.iter().sum();
    }
    if smax == 0.0 {
        return 0.0;
    }
    smax * s.iter().map(|x| (x / smax).powf(p)).sum::<f64>().powf(1.0 / p)
}
