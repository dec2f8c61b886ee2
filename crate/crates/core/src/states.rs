//! Pure states, density matrices, and the overlaps used by the bounds.

use std::sync::OnceLock;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, inner, matrix_sqrt_psd, ComplexMatrix};

const NORM_TOL: f64 = 1e-10;
const TRACE_TOL: f64 = 1e-10;
const PSD_TOL: f64 = 1e-10;
const PURITY_TOL: f64 = 1e-9;
const SQRT_TOL: f64 = 1e-9;
const ANGLE_CLAMP: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Validates that the amplitudes have unit norm (within 1e-10).
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidState("empty amplitude vector".into()));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!("squared norm {norm_sqr} differs from 1")));
        }
        Ok(Self { amplitudes })
    }

    /// Rescales a nonzero vector to unit norm.
    pub fn normalized(mut amplitudes: Vec<C64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::InvalidState("cannot normalize a zero vector".into()));
        }
        for z in &mut amplitudes {
            *z /= norm;
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state |k>.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::IndexOutOfRange { index: k, dim });
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); dim];
        amplitudes[k] = C64::new(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes)
    }

    /// <self|H|self> (real part).
    pub fn expectation(&self, h: &ComplexMatrix) -> Result<f64> {
        if h.dim() != self.dim() {
            return Err(Error::DimMismatch { left: h.dim(), right: self.dim() });
        }
        Ok(inner(&self.amplitudes, &h.apply(&self.amplitudes)).re)
    }
}

/// A validated density matrix with a lazily computed square root.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    sqrt: OnceLock<ComplexMatrix>,
}

impl DensityMatrix {
    /// Checks Hermiticity, unit trace, positivity and the purity range.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let rho = Self::new_unchecked(matrix, None);
        rho.validate()?;
        Ok(rho)
    }

    pub(crate) fn new_unchecked(matrix: ComplexMatrix, sqrt: Option<ComplexMatrix>) -> Self {
        let cell = OnceLock::new();
        if let Some(s) = sqrt {
            let _ = cell.set(s);
        }
        Self { matrix, sqrt: cell }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        // A normalized projector is idempotent, so it is its own square root.
        let p = psi.projector();
        Self::new_unchecked(p.clone(), Some(p))
    }

    /// Σ_k w_k |v_k><v_k| for normalized vectors `v_k`.
    pub fn mixture(components: &[(f64, PureState)]) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidState("empty mixture".into()))?;
        let mut m = ComplexMatrix::zeros(first.1.dim());
        for (w, psi) in components {
            if *w < 0.0 {
                return Err(Error::InvalidState(format!("negative mixture weight {w}")));
            }
            if psi.dim() != m.dim() {
                return Err(Error::DimMismatch { left: m.dim(), right: psi.dim() });
            }
            m = &m + &psi.projector().scale_real(*w);
        }
        Self::new(m)
    }

    pub fn validate(&self) -> Result<()> {
        let m = &self.matrix;
        let deviation = m.hermitian_deviation();
        if deviation > NORM_TOL {
            return Err(Error::InvalidState(format!("not Hermitian (deviation {deviation:e})")));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace {tr} differs from 1")));
        }
        let spec = hermitian_eig(m)?;
        let min = spec.eigenvalues()[0];
        if min < -PSD_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        let purity = self.purity();
        let n = m.dim() as f64;
        if purity < 1.0 / n - PURITY_TOL || purity > 1.0 + PURITY_TOL {
            return Err(Error::InvalidState(format!("purity {purity} outside [1/N, 1]")));
        }
        if let Some(s) = self.sqrt.get() {
            let dev = (s * s).max_abs_diff(m);
            if dev > SQRT_TOL {
                return Err(Error::InvalidState(format!("cached square root off by {dev:e}")));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Tr(ρ²).
    pub fn purity(&self) -> f64 {
        self.matrix.trace_product(&self.matrix).re
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        self.purity() > 1.0 - tol
    }

    pub fn sqrt(&self) -> Result<&ComplexMatrix> {
        if let Some(s) = self.sqrt.get() {
            return Ok(s);
        }
        let s = matrix_sqrt_psd(&self.matrix)?;
        // A concurrent initializer computes the same value; either one wins.
        let _ = self.sqrt.set(s);
        Ok(self.sqrt.get().expect("square root initialized above"))
    }

    /// U ρ U^dagger, carrying the square root along when it is cached.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Self {
        let sqrt = self.sqrt.get().map(|s| s.conjugate_by(u));
        Self::new_unchecked(self.matrix.conjugate_by(u), sqrt)
    }
}

pub fn fidelity_pure(a: &PureState, b: &PureState) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(inner(a.amplitudes(), b.amplitudes()).norm_sqr().clamp(0.0, 1.0))
}

/// Tr(ρσ)/Tr(ρ²) without range clamping.
pub fn relative_purity_raw(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    rho.matrix.ensure_same_dim(&sigma.matrix)?;
    Ok(rho.matrix.trace_product(&sigma.matrix).re / rho.purity())
}

/// Relative purity Tr(ρσ)/Tr(ρ²), clamped at zero from below.
pub fn relative_purity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    Ok(relative_purity_raw(rho, sigma)?.max(0.0))
}

/// Tr(√ρ √σ) without range clamping.
pub fn affinity_raw(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    rho.matrix.ensure_same_dim(&sigma.matrix)?;
    Ok(rho.sqrt()?.trace_product(sigma.sqrt()?).re)
}

/// Quantum affinity Tr(√ρ √σ), clamped to [0, 1].
pub fn affinity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    Ok(affinity_raw(rho, sigma)?.clamp(0.0, 1.0))
}

/// D_H(ρ, σ) = Tr[(√ρ - √σ)²] = 2 - 2 F_A(ρ, σ).
pub fn hellinger_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    Ok(2.0 - 2.0 * affinity(rho, sigma)?)
}

/// arccos √F; inputs slightly outside [0, 1] from roundoff are clamped.
pub fn bures_angle(fidelity: f64) -> Result<f64> {
    if !(-ANGLE_CLAMP..=1.0 + ANGLE_CLAMP).contains(&fidelity) {
        return Err(Error::OutOfRange { what: "fidelity", value: fidelity });
    }
    Ok(fidelity.clamp(0.0, 1.0).sqrt().acos())
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn plus() -> PureState {
        PureState::new(vec![c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)]).unwrap()
    }

    fn diag(d: &[f64]) -> DensityMatrix {
        DensityMatrix::new(ComplexMatrix::from_real_diag(d)).unwrap()
    }

    #[test]
    fn pure_state_validation() {
        assert!(PureState::new(vec![c(1.0), c(1.0)]).is_err());
        assert!(PureState::normalized(vec![c(0.0), c(0.0)]).is_err());
        assert_eq!(PureState::normalized(vec![c(3.0), c(4.0)]).unwrap().amplitudes()[0], c(0.6));
    }

    #[test]
    fn density_matrix_validation() {
        assert!(DensityMatrix::new(ComplexMatrix::from_real_diag(&[0.5, 0.6])).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::from_real_diag(&[1.2, -0.2])).is_err());
        let mut m = ComplexMatrix::from_real_diag(&[0.5, 0.5]);
        m[(0, 1)] = c(0.1);
        assert!(DensityMatrix::new(m).is_err());
    }

    #[test]
    fn fidelity_examples() {
        let zero = PureState::basis(2, 0).unwrap();
        let one = PureState::basis(2, 1).unwrap();
        assert_eq!(fidelity_pure(&zero, &zero).unwrap(), 1.0);
        assert_eq!(fidelity_pure(&zero, &one).unwrap(), 0.0);
        assert!((fidelity_pure(&zero, &plus()).unwrap() - 0.5).abs() < 1e-15);
        assert!(fidelity_pure(&zero, &PureState::basis(3, 0).unwrap()).is_err());
    }

    #[test]
    fn relative_purity_examples() {
        let rho = diag(&[0.25, 0.75]);
        assert!((relative_purity(&rho, &rho).unwrap() - 1.0).abs() < 1e-15);
        let zero = DensityMatrix::from_pure(&PureState::basis(2, 0).unwrap());
        let p = DensityMatrix::from_pure(&plus());
        assert!((relative_purity(&zero, &p).unwrap() - 0.5).abs() < 1e-15);
        // (3/16 + 3/16) / (1/16 + 9/16)
        let sigma = diag(&[0.75, 0.25]);
        assert!((relative_purity(&rho, &sigma).unwrap() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn affinity_examples() {
        let p = DensityMatrix::from_pure(&plus());
        assert!((affinity(&p, &p).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(affinity(&diag(&[1.0, 0.0]), &diag(&[0.0, 1.0])).unwrap(), 0.0);
        let expect = FRAC_1_SQRT_2 * (0.5 + 3f64.sqrt() / 2.0);
        let got = affinity(&diag(&[0.5, 0.5]), &diag(&[0.25, 0.75])).unwrap();
        assert!((got - expect).abs() < 1e-12);
        assert!((got - 0.9659).abs() < 1e-4);
    }

    #[test]
    fn hellinger_examples() {
        let p = DensityMatrix::from_pure(&plus());
        assert!(hellinger_distance(&p, &p).unwrap().abs() < 1e-12);
        assert_eq!(hellinger_distance(&diag(&[1.0, 0.0]), &diag(&[0.0, 1.0])).unwrap(), 2.0);
        let mixed = diag(&[0.5, 0.5]);
        let d = hellinger_distance(&p, &mixed).unwrap();
        assert!((d - (2.0 - 2f64.sqrt())).abs() < 1e-12);
        // Direct route Tr[(√ρ - √σ)²].
        let diff = p.sqrt().unwrap() - mixed.sqrt().unwrap();
        assert!((d - diff.trace_product(&diff).re).abs() < 1e-9);
    }

    #[test]
    fn bures_examples() {
        assert_eq!(bures_angle(1.0).unwrap(), 0.0);
        assert!((bures_angle(0.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((bures_angle(0.5).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert!(bures_angle(1.0 + 5e-13).is_ok());
        assert!(matches!(bures_angle(1.1), Err(Error::OutOfRange { .. })));
        assert!(bures_angle(-0.01).is_err());
    }

    #[test]
    fn lazy_sqrt_is_cached() {
        let rho = diag(&[0.25, 0.75]);
        let a = rho.sqrt().unwrap().clone();
        assert!(std::ptr::eq(rho.sqrt().unwrap(), rho.sqrt().unwrap()));
        assert!((&a * &a).max_abs_diff(rho.matrix()) < 1e-12);
    }
}
