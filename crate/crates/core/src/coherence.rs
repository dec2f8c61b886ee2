//! Coherence of a state relative to a reference orthonormal basis.
//!
//! The incoherent set is the set of unit-trace density matrices diagonal in
//! the basis. C_2 and the Hellinger measure have closed forms; C_p for other
//! p and the square-root measure C̃_p are computed by minimizing over the
//! weight simplex.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{commutator, inner, schatten_norm_hermitian, ComplexMatrix, Spectrum};
use crate::optim::{minimize_on_simplex, SimplexOptions};
use crate::states::DensityMatrix;

const GRAM_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct ReferenceBasis {
    /// Basis vectors as columns of a unitary matrix.
    vectors: ComplexMatrix,
}

impl ReferenceBasis {
    pub fn new(vectors: ComplexMatrix) -> Result<Self> {
        let gram = &vectors.adjoint() * &vectors;
        let dev = gram.max_abs_diff(&ComplexMatrix::identity(vectors.dim()));
        if dev > GRAM_TOL {
            return Err(Error::InvalidMatrix(format!("basis is not orthonormal (Gram deviation {dev:e})")));
        }
        Ok(Self { vectors })
    }

    pub fn computational(dim: usize) -> Self {
        Self { vectors: ComplexMatrix::identity(dim) }
    }

    /// Energy eigenbasis in the solver's deterministic order.
    pub fn from_spectrum(spec: &Spectrum) -> Self {
        Self { vectors: spec.eigenvectors().clone() }
    }

    pub fn dim(&self) -> usize {
        self.vectors.dim()
    }

    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn vector(&self, n: usize) -> Vec<C64> {
        self.vectors.column(n)
    }

    /// Matrix elements <m|A|n> in this basis.
    pub fn represent(&self, a: &ComplexMatrix) -> ComplexMatrix {
        &(&self.vectors.adjoint() * a) * &self.vectors
    }

    /// Σ_n d_n |n><n| from coefficients in this basis.
    pub fn diagonal_operator(&self, d: &[f64]) -> ComplexMatrix {
        rotate_diag(&self.vectors, d)
    }

    fn check(&self, rho: &DensityMatrix) -> Result<()> {
        if self.dim() != rho.dim() {
            return Err(Error::DimMismatch { left: rho.dim(), right: self.dim() });
        }
        Ok(())
    }
}

/// V diag(d) V^dagger.
fn rotate_diag(v: &ComplexMatrix, d: &[f64]) -> ComplexMatrix {
    let n = v.dim();
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for (k, &dk) in d.iter().enumerate() {
                acc += v[(i, k)] * dk * v[(j, k)].conj();
            }
            out[(i, j)] = acc;
        }
    }
    out
}

/// A state Σ_n w_n |n><n| diagonal in a reference basis.
#[derive(Clone, Debug, PartialEq)]
pub struct IncoherentState {
    weights: Vec<f64>,
    basis: ReferenceBasis,
}

impl IncoherentState {
    pub fn new(weights: Vec<f64>, basis: ReferenceBasis) -> Result<Self> {
        if weights.len() != basis.dim() {
            return Err(Error::DimMismatch { left: weights.len(), right: basis.dim() });
        }
        if weights.iter().any(|&w| w < 0.0 || !w.is_finite()) {
            return Err(Error::InvalidState("incoherent weights must be non-negative".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidState(format!("incoherent weights sum to {total}")));
        }
        Ok(Self { weights, basis })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn basis(&self) -> &ReferenceBasis {
        &self.basis
    }

    pub fn matrix(&self) -> ComplexMatrix {
        self.basis.diagonal_operator(&self.weights)
    }

    pub fn to_density_matrix(&self) -> Result<DensityMatrix> {
        DensityMatrix::new(self.matrix())
    }
}

/// Dephased state Σ_n <n|ρ|n> |n><n|.
pub fn dephase(rho: &DensityMatrix, basis: &ReferenceBasis) -> Result<IncoherentState> {
    basis.check(rho)?;
    let local = basis.represent(rho.matrix());
    let mut weights: Vec<f64> = local.diag().iter().map(|z| z.re.max(0.0)).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    IncoherentState::new(weights, basis.clone())
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// C_2(ρ) = ||ρ - Δ(ρ)||_2, the Hilbert-Schmidt norm of the off-diagonal part.
pub fn coherence_c2(rho: &DensityMatrix, basis: &ReferenceBasis) -> Result<f64> {
    basis.check(rho)?;
    Ok(off_diagonal_norm(&basis.represent(rho.matrix())))
}

/// C_p(ρ) = min_σ ||ρ - σ||_p over incoherent σ, found numerically.
///
/// The first optimizer run starts at the dephased state, so the result never
/// exceeds ||ρ - Δ(ρ)||_p.
pub fn coherence_p(rho: &DensityMatrix, basis: &ReferenceBasis, p: f64, opts: &SimplexOptions) -> Result<f64> {
    basis.check(rho)?;
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP(p));
    }
    let local = basis.represent(rho.matrix()).hermitian_part();
    let n = local.dim();
    let start: Vec<f64> = dephase(rho, basis)?.weights;
    let objective = |w: &[f64]| {
        let mut m = local.clone();
        for k in 0..n {
            m[(k, k)] -= w[k];
        }
        schatten_norm_hermitian(&m, p).unwrap_or(f64::INFINITY)
    };
    Ok(minimize_on_simplex(n, objective, Some(&start), opts)?.value.max(0.0))
}

/// C_1, the trace-norm coherence.
pub fn coherence_c1(rho: &DensityMatrix, basis: &ReferenceBasis) -> Result<f64> {
    coherence_p(rho, basis, 1.0, &SimplexOptions::default())
}

/// Optimal incoherent state for the Hellinger distance:
/// λ_n = <n|√ρ|n>² / Σ_m <m|√ρ|m>².
pub fn hellinger_optimal_state(rho: &DensityMatrix, basis: &ReferenceBasis) -> Result<IncoherentState> {
    basis.check(rho)?;
    let diag: Vec<f64> = basis.represent(rho.sqrt()?).diag().iter().map(|z| z.re.max(0.0)).collect();
    let total: f64 = diag.iter().map(|d| d * d).sum();
    IncoherentState::new(diag.iter().map(|d| d * d / total).collect(), basis.clone())
}

/// C_H(ρ) = min_σ D_H(ρ, σ) = 2 - 2 sqrt(Σ_n <n|√ρ|n>²).
pub fn coherence_hellinger(rho: &DensityMatrix, basis: &ReferenceBasis) -> Result<f64> {
    basis.check(rho)?;
    let local = basis.represent(rho.sqrt()?);
    let mass: f64 = local.diag().iter().map(|z| z.re.max(0.0).powi(2)).sum();
    Ok((2.0 - 2.0 * mass.sqrt()).clamp(0.0, 2.0))
}

/// C̃_p(ρ) = min_σ ||√ρ - √σ||_p over incoherent σ, found numerically.
pub fn coherence_tilde_p(
    rho: &DensityMatrix,
    basis: &ReferenceBasis,
    p: f64,
    opts: &SimplexOptions,
) -> Result<f64> {
    basis.check(rho)?;
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP(p));
    }
    let local = basis.represent(rho.sqrt()?).hermitian_part();
    let n = local.dim();
    let start: Vec<f64> = dephase(rho, basis)?.weights;
    let objective = |w: &[f64]| {
        let mut m = local.clone();
        for k in 0..n {
            m[(k, k)] -= w[k].sqrt();
        }
        schatten_norm_hermitian(&m, p).unwrap_or(f64::INFINITY)
    };
    Ok(minimize_on_simplex(n, objective, Some(&start), opts)?.value.max(0.0))
}

/// Wigner-Yanase skew information I(ρ, H) = ½ ||[H, √ρ]||_2².
pub fn wysi(rho: &DensityMatrix, h: &ComplexMatrix) -> Result<f64> {
    h.ensure_hermitian()?;
    let c = commutator(h, rho.sqrt()?)?;
    Ok((0.5 * c.frobenius_norm().powi(2)).max(0.0))
}

/// Energy variance Tr(ρH²) - Tr(ρH)²; ΔH is its square root.
pub fn energy_variance(rho: &DensityMatrix, h: &ComplexMatrix) -> Result<f64> {
    h.ensure_hermitian()?;
    rho.matrix().ensure_same_dim(h)?;
    let rh = rho.matrix() * h;
    let mean = rh.trace().re;
    let second = rh.trace_product(h).re;
    Ok((second - mean * mean).max(0.0))
}

/// Variance of H in a pure state, <ψ|H²|ψ> - <ψ|H|ψ>².
pub fn energy_variance_pure(psi: &[C64], h: &ComplexMatrix) -> f64 {
    let hpsi = h.apply(psi);
    let mean = inner(psi, &hpsi).re;
    let second = inner(&hpsi, &hpsi).re;
    (second - mean * mean).max(0.0)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_1_SQRT_2;

    use super::*;
    use crate::linalg::{hermitian_eig, pauli};
    use crate::states::PureState;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn plus() -> DensityMatrix {
        DensityMatrix::from_pure(&PureState::new(vec![c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)]).unwrap())
    }

    fn diag(d: &[f64]) -> DensityMatrix {
        DensityMatrix::new(ComplexMatrix::from_real_diag(d)).unwrap()
    }

    fn x_basis() -> ReferenceBasis {
        ReferenceBasis::from_spectrum(&hermitian_eig(&pauli::x()).unwrap())
    }

    fn z_basis() -> ReferenceBasis {
        ReferenceBasis::computational(2)
    }

    #[test]
    fn basis_must_be_orthonormal() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = c(0.1);
        assert!(ReferenceBasis::new(m).is_err());
    }

    #[test]
    fn dephase_examples() {
        let rho = diag(&[0.25, 0.75]);
        assert_eq!(dephase(&rho, &z_basis()).unwrap().weights(), &[0.25, 0.75]);
        let w = dephase(&plus(), &z_basis()).unwrap();
        assert!((w.weights()[0] - 0.5).abs() < 1e-15 && (w.weights()[1] - 0.5).abs() < 1e-15);
        // <±|diag(1/4, 3/4)|±> = 1/2.
        let w = dephase(&rho, &x_basis()).unwrap();
        assert!((w.weights()[0] - 0.5).abs() < 1e-14 && (w.weights()[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn dephase_dim_mismatch() {
        let err = dephase(&plus(), &ReferenceBasis::computational(3)).unwrap_err();
        assert!(matches!(err, Error::DimMismatch { .. }));
    }

    #[test]
    fn c2_examples() {
        assert_eq!(coherence_c2(&diag(&[0.25, 0.75]), &z_basis()).unwrap(), 0.0);
        assert!((coherence_c2(&plus(), &z_basis()).unwrap() - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn c2_equals_distance_to_dephased() {
        let rho = diag(&[0.25, 0.75]);
        let b = x_basis();
        let sigma = dephase(&rho, &b).unwrap().matrix();
        let direct = (rho.matrix() - &sigma).frobenius_norm();
        assert!((coherence_c2(&rho, &b).unwrap() - direct).abs() < 1e-14);
    }

    #[test]
    fn c1_examples() {
        assert!(coherence_c1(&diag(&[0.25, 0.75]), &z_basis()).unwrap() < 1e-12);
        assert!((coherence_c1(&plus(), &z_basis()).unwrap() - 1.0).abs() < 1e-6);
        let mut m = ComplexMatrix::from_real_diag(&[0.5, 0.5]);
        m[(0, 1)] = c(0.3);
        m[(1, 0)] = c(0.3);
        let rho = DensityMatrix::new(m).unwrap();
        assert!((coherence_c1(&rho, &z_basis()).unwrap() - 0.6).abs() < 1e-6);
    }

    #[test]
    fn hellinger_examples() {
        assert!(coherence_hellinger(&diag(&[0.25, 0.75]), &z_basis()).unwrap() < 1e-14);
        let v = coherence_hellinger(&plus(), &z_basis()).unwrap();
        assert!((v - (2.0 - 2f64.sqrt())).abs() < 1e-12);
        let opt = hellinger_optimal_state(&plus(), &z_basis()).unwrap();
        assert!((opt.weights()[0] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn hellinger_closed_form_matches_explicit_distance() {
        let rho = diag(&[0.25, 0.75]);
        let b = x_basis();
        let sigma = hellinger_optimal_state(&rho, &b).unwrap().to_density_matrix().unwrap();
        let explicit = crate::states::hellinger_distance(&rho, &sigma).unwrap();
        assert!((coherence_hellinger(&rho, &b).unwrap() - explicit).abs() < 1e-9);
    }

    #[test]
    fn tilde_examples() {
        let opts = SimplexOptions::default();
        assert!(coherence_tilde_p(&diag(&[0.25, 0.75]), &z_basis(), 1.0, &opts).unwrap() < 1e-12);
        let v = coherence_tilde_p(&plus(), &z_basis(), 2.0, &opts).unwrap();
        assert!((v - (2.0 - 2f64.sqrt()).sqrt()).abs() < 1e-6);
        let rho = diag(&[0.25, 0.75]);
        let v = coherence_tilde_p(&rho, &x_basis(), 2.0, &opts).unwrap();
        let closed = coherence_hellinger(&rho, &x_basis()).unwrap().sqrt();
        assert!((v - closed).abs() < 1e-6);
        assert!(coherence_tilde_p(&rho, &x_basis(), 0.5, &opts).is_err());
    }

    #[test]
    fn wysi_examples() {
        let rho = diag(&[0.25, 0.75]);
        assert!(wysi(&rho, &pauli::z()).unwrap() < 1e-15);
        assert!((wysi(&plus(), &pauli::z()).unwrap() - 1.0).abs() < 1e-12);
        // Dual route through the Schatten kernel.
        let rx = DensityMatrix::new(x_basis().diagonal_operator(&[0.25, 0.75])).unwrap();
        let comm = commutator(&pauli::z(), rx.sqrt().unwrap()).unwrap();
        let via_norm = 0.5 * crate::linalg::schatten_norm(&comm, 2.0).unwrap().powi(2);
        assert!((wysi(&rx, &pauli::z()).unwrap() - via_norm).abs() < 1e-12);
        assert!(wysi(&rx, &ComplexMatrix::from_rows(&[vec![c(0.0), c(1.0)], vec![c(0.0), c(0.0)]]).unwrap()).is_err());
    }

    #[test]
    fn variance_examples() {
        let zero = DensityMatrix::from_pure(&PureState::basis(2, 0).unwrap());
        assert_eq!(energy_variance(&zero, &pauli::z()).unwrap(), 0.0);
        assert!((energy_variance(&plus(), &pauli::z()).unwrap() - 1.0).abs() < 1e-15);
        assert!((energy_variance(&zero, &pauli::x()).unwrap() - 1.0).abs() < 1e-15);
    }
}
