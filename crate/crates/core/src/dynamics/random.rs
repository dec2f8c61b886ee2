use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_distr::{Distribution, StandardNormal};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::states::PureState;

/// Label written to output metadata for the random-Hamiltonian ensemble.
pub const ENSEMBLE_TAG: &str = "GUE(unit complex variance, H=(A+A^dagger)/2)";

/// Seed for the `index`-th independent draw derived from a base seed.
pub fn instance_seed(base: u64, index: u64) -> u64 {
    base ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// GUE sample H = (A + A^dagger)/2 where A has i.i.d. standard complex
/// Gaussian entries (E|a_ij|² = 1). Its eigenbasis is Haar distributed.
pub fn haar_random_hamiltonian(dim: usize, seed: u64) -> ComplexMatrix {
    assert!(dim >= 1, "dimension must be positive");
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut a = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            a[(i, j)] = C64::new(re, im) * scale;
        }
    }
    (&a + &a.adjoint()).scale_real(0.5).hermitian_part()
}

/// k-th eigenvector of H in ascending eigenvalue order.
pub fn eigenstate_prep(h: &ComplexMatrix, k: usize) -> Result<PureState> {
    if k >= h.dim() {
        return Err(Error::IndexOutOfRange { index: k, dim: h.dim() });
    }
    let spec = hermitian_eig(h)?;
    PureState::normalized(spec.vector(k))
}
