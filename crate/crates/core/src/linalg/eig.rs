use std::cmp::Ordering;

use num_complex::Complex64 as C64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;
/// Off-diagonal Frobenius mass (relative to ||H||_F) at which Jacobi stops.
const CONV_TOL: f64 = 1e-12;
/// Eigenvalues closer than this (relative) are ordered by eigenvector.
const DEGENERACY_TOL: f64 = 1e-10;

/// Eigendecomposition H = V diag(λ) V^dagger of a Hermitian matrix.
///
/// Eigenvalues ascend. Each eigenvector has its first non-negligible
/// component made real positive; within a degenerate cluster the vectors
/// are ordered lexicographically (descending), so the basis is reproducible.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose k-th column is the k-th eigenvector.
    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn vector(&self, k: usize) -> Vec<C64> {
        self.eigenvectors.column(k)
    }

    /// V f(λ) V^dagger for a complex-valued spectral function.
    pub fn map(&self, f: impl Fn(f64) -> C64) -> ComplexMatrix {
        let n = self.dim();
        let v = &self.eigenvectors;
        let fl: Vec<C64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..n {
                    acc += v[(i, k)] * fl[k] * v[(j, k)].conj();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map(|l| C64::new(l, 0.0))
    }
}

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<Spectrum> {
    h.ensure_hermitian()?;
    let n = h.dim();
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    let mut converged = off_diagonal_mass(&a) <= CONV_TOL * scale;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual: off_diagonal_mass(&a) });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_mass(&a) <= CONV_TOL * scale;
    }

    let eigenvalues: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    let mut columns: Vec<(f64, Vec<C64>)> = (0..n)
        .map(|k| {
            let mut col = v.column(k);
            fix_phase(&mut col);
            (eigenvalues[k], col)
        })
        .collect();
    order_columns(&mut columns);

    let eigenvalues = columns.iter().map(|(l, _)| *l).collect();
    let vecs: Vec<Vec<C64>> = columns.into_iter().map(|(_, c)| c).collect();
    Ok(Spectrum { eigenvalues, eigenvectors: ComplexMatrix::from_columns(&vecs)? })
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilates a[p][q] with the unitary J = diag-phase · real rotation,
/// updating a <- J^dagger a J and v <- v J.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J = [[c, s], [-s e^{-iφ}, c e^{-iφ}]] on the (p, q) plane.
    let jpp = C64::new(c, 0.0);
    let jpq = C64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let n = a.dim();
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * jpp + aiq * jqp;
        a[(i, q)] = aip * jpq + aiq * jqq;
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * jpp + viq * jqp;
        v[(i, q)] = vip * jpq + viq * jqq;
    }
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = jpp.conj() * apj + jqp.conj() * aqj;
        a[(q, j)] = jpq.conj() * apj + jqq.conj() * aqj;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}

fn fix_phase(col: &mut [C64]) {
    if let Some(lead) = col.iter().copied().find(|z| z.norm() > 1e-12) {
        let rot = lead.conj() / lead.norm();
        for z in col.iter_mut() {
            *z *= rot;
        }
    }
}

fn lexicographic(a: &[C64], b: &[C64]) -> Ordering {
    const EQ_TOL: f64 = 1e-12;
    for (x, y) in a.iter().zip(b) {
        for (u, w) in [(x.re, y.re), (x.im, y.im)] {
            if (u - w).abs() > EQ_TOL {
                return u.total_cmp(&w);
            }
        }
    }
    Ordering::Equal
}

fn order_columns(columns: &mut [(f64, Vec<C64>)]) {
    columns.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut start = 0;
    while start < columns.len() {
        let mut end = start + 1;
        while end < columns.len() {
            let (l0, l1) = (columns[end - 1].0, columns[end].0);
            if (l1 - l0).abs() > DEGENERACY_TOL * l0.abs().max(l1.abs()).max(1.0) {
                break;
            }
            end += 1;
        }
        if end - start > 1 {
            columns[start..end].sort_by(|a, b| lexicographic(&b.1, &a.1));
        }
        start = end;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn pauli_z_spectrum() {
        let s = hermitian_eig(&pauli::z()).unwrap();
        assert_eq!(s.eigenvalues(), &[-1.0, 1.0]);
        assert!((s.vector(0)[1] - c(1.0)).norm() < 1e-15);
        assert!((s.vector(1)[0] - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn pauli_x_spectrum() {
        let s = hermitian_eig(&pauli::x()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.eigenvalues()[0] + 1.0).abs() < 1e-14);
        assert!((s.eigenvalues()[1] - 1.0).abs() < 1e-14);
        let minus = s.vector(0);
        let plus = s.vector(1);
        assert!((minus[0] - c(h)).norm() < 1e-14 && (minus[1] + c(h)).norm() < 1e-14);
        assert!((plus[0] - c(h)).norm() < 1e-14 && (plus[1] - c(h)).norm() < 1e-14);
    }

    #[test]
    fn pauli_y_reconstructs() {
        let y = pauli::y();
        let s = hermitian_eig(&y).unwrap();
        assert!(s.reconstruct().max_abs_diff(&y) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = pauli::x();
        m[(0, 1)] = c(2.0);
        assert!(matches!(hermitian_eig(&m), Err(Error::NonHermitian { .. })));
    }

    #[test]
    fn degenerate_basis_is_deterministic() {
        let xx = pauli::x().kron(&pauli::x()).scale_real(-1.0);
        let a = hermitian_eig(&xx).unwrap();
        let b = hermitian_eig(&xx).unwrap();
        assert_eq!(a, b);
        assert!(a.reconstruct().max_abs_diff(&xx) < 1e-13);
        // Jacobi only mixes the coupled pairs, so the basis is the Bell-like one.
        for k in 0..4 {
            let v = a.vector(k);
            let nonzero = v.iter().filter(|z| z.norm() > 1e-12).count();
            assert_eq!(nonzero, 2);
        }
    }

    #[test]
    fn zero_matrix() {
        let s = hermitian_eig(&ComplexMatrix::zeros(3)).unwrap();
        assert_eq!(s.eigenvalues(), &[0.0, 0.0, 0.0]);
        assert_eq!(s.eigenvectors(), &ComplexMatrix::identity(3));
    }
}
