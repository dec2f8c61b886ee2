#![allow(dead_code)]

use qsl_core::dynamics::haar_random_hamiltonian;
use qsl_core::linalg::{hermitian_eig, unitary_step, ComplexMatrix};
use qsl_core::states::{DensityMatrix, PureState};
use qsl_core::C64;
use rand::SeedableRng;
use rand_distr::{Distribution, StandardNormal};
use rand_xoshiro::Xoshiro256PlusPlus;

pub fn rng(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

pub fn gaussian_vector(dim: usize, rng: &mut Xoshiro256PlusPlus) -> Vec<C64> {
    (0..dim)
        .map(|_| C64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)))
        .collect()
}

pub fn random_pure(dim: usize, seed: u64) -> PureState {
    PureState::normalized(gaussian_vector(dim, &mut rng(seed))).unwrap()
}

/// Hilbert-Schmidt random state G G† / Tr(G G†), optionally of reduced rank.
pub fn random_mixed(dim: usize, rank: usize, seed: u64) -> DensityMatrix {
    let mut r = rng(seed);
    let mut acc = ComplexMatrix::zeros(dim);
    for _ in 0..rank {
        let v = gaussian_vector(dim, &mut r);
        acc = &acc + &ComplexMatrix::outer(&v);
    }
    let tr = acc.trace().re;
    DensityMatrix::new(acc.scale_real(1.0 / tr).hermitian_part()).unwrap()
}

/// Haar-random unitary obtained as exp(-i H) of a GUE sample.
pub fn random_unitary(dim: usize, seed: u64) -> ComplexMatrix {
    unitary_step(&haar_random_hamiltonian(dim, seed), 1.0).unwrap()
}

pub fn ascending_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let mut e = hermitian_eig(m).unwrap().eigenvalues().to_vec();
    e.sort_by(f64::total_cmp);
    e
}
