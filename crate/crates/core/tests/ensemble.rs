use qsl_core::dynamics::{haar_random_hamiltonian, instance_seed};
use qsl_core::linalg::hermitian_eig;

const SAMPLES: u64 = 10_000;
const BASE_SEED: u64 = 0x0A11_CE5E_ED5E_ED00;

#[test]
fn gue_entries_have_expected_moments() {
    let dim = 3;
    let n = SAMPLES as f64;
    let mut trace_sum = 0.0;
    let mut diag_sq = 0.0;
    let mut off_sq = 0.0;
    for i in 0..SAMPLES {
        let h = haar_random_hamiltonian(dim, instance_seed(BASE_SEED, i));
        assert_eq!(h.hermitian_deviation(), 0.0);
        trace_sum += h.trace().re;
        diag_sq += h[(0, 0)].norm_sqr();
        off_sq += h[(0, 1)].norm_sqr();
    }
    // Tr H has variance dim/2; every entry has E|H_ij|² = 1/2.
    let sigma = (dim as f64 / 2.0 / n).sqrt();
    assert!((trace_sum / n).abs() < 3.0 * sigma, "mean trace {}", trace_sum / n);
    assert!((diag_sq / n - 0.5).abs() < 0.03);
    assert!((off_sq / n - 0.5).abs() < 0.03);
}

#[test]
fn ground_state_overlap_is_uniform() {
    let mut overlaps: Vec<f64> = (0..SAMPLES)
        .map(|i| {
            let spec = hermitian_eig(&haar_random_hamiltonian(2, instance_seed(BASE_SEED, i))).unwrap();
            spec.vector(0)[0].norm_sqr()
        })
        .collect();
    overlaps.sort_by(f64::total_cmp);
    let n = overlaps.len() as f64;
    let d = overlaps
        .iter()
        .enumerate()
        .map(|(k, &x)| (x - k as f64 / n).abs().max(((k + 1) as f64 / n - x).abs()))
        .fold(0.0, f64::max);
    // Kolmogorov-Smirnov critical value at the 1% level.
    assert!(d < 1.628 / n.sqrt(), "KS statistic {d}");
}

#[test]
fn sampling_is_reproducible() {
    for i in 0..8 {
        let seed = instance_seed(42, i);
        assert_eq!(haar_random_hamiltonian(4, seed), haar_random_hamiltonian(4, seed));
    }
    assert_ne!(haar_random_hamiltonian(2, instance_seed(42, 0)), haar_random_hamiltonian(2, instance_seed(42, 1)));
}
