//! Single-qubit Pauli operators and multi-qubit embeddings.
//!
//! Qubit 1 is the most significant tensor factor, so `embed(&z(), 0, 2)`
//! is Z ⊗ I.

use num_complex::Complex64 as C64;

use super::ComplexMatrix;

pub fn x() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = C64::new(1.0, 0.0);
    m[(1, 0)] = C64::new(1.0, 0.0);
    m
}

pub fn y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = C64::new(0.0, -1.0);
    m[(1, 0)] = C64::new(0.0, 1.0);
    m
}

pub fn z() -> ComplexMatrix {
    ComplexMatrix::from_real_diag(&[1.0, -1.0])
}

/// `op` acting on qubit `site` of an `n_qubits` register.
pub fn embed(op: &ComplexMatrix, site: usize, n_qubits: usize) -> ComplexMatrix {
    assert!(site < n_qubits, "qubit index out of range");
    let id = ComplexMatrix::identity(2);
    let mut acc = if site == 0 { op.clone() } else { id.clone() };
    for k in 1..n_qubits {
        acc = acc.kron(if k == site { op } else { &id });
    }
    acc
}
