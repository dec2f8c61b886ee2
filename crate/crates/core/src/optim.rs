//! Derivative-free minimization over the probability simplex.
//!
//! Nelder-Mead runs in unconstrained softmax coordinates: a point
//! x ∈ R^{N-1} maps to weights w_r ∝ 1 for a reference index r and
//! w_k ∝ exp(x_k) for the others. Every iterate is therefore a valid
//! probability vector.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SimplexOptions {
    pub restarts: usize,
    pub max_iterations: usize,
    /// Spread of objective values across the Nelder-Mead simplex at which a
    /// run counts as converged.
    pub tolerance: f64,
    pub seed: u64,
    pub initial_step: f64,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            restarts: 8,
            max_iterations: 2000,
            tolerance: 1e-9,
            seed: 0x51AB_1E5E_ED00_0001,
            initial_step: 0.25,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimplexMinimum {
    pub weights: Vec<f64>,
    pub value: f64,
    pub converged_runs: usize,
}

#[derive(Clone, Debug)]
struct NelderMeadOutcome {
    x: Vec<f64>,
    value: f64,
    spread: f64,
    converged: bool,
}

/// Plain Nelder-Mead with standard coefficients (1, 2, 1/2, 1/2).
fn nelder_mead<F>(f: &F, start: &[f64], step: f64, max_iterations: usize, tol: f64) -> NelderMeadOutcome
where
    F: Fn(&[f64]) -> f64,
{
    let d = start.len();
    if d == 0 {
        return NelderMeadOutcome { x: vec![], value: f(start), spread: 0.0, converged: true };
    }
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(d + 1);
    simplex.push(start.to_vec());
    for k in 0..d {
        let mut v = start.to_vec();
        v[k] += step;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|v| f(v)).collect();

    let mut converged = false;
    for _ in 0..max_iterations {
        let mut order: Vec<usize> = (0..=d).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        if values[d] - values[0] <= tol {
            converged = true;
            break;
        }

        let centroid: Vec<f64> = (0..d)
            .map(|j| simplex[..d].iter().map(|v| v[j]).sum::<f64>() / d as f64)
            .collect();
        let along = |t: f64| -> Vec<f64> {
            centroid.iter().zip(&simplex[d]).map(|(c, w)| c + t * (w - c)).collect()
        };

        let reflected = along(-1.0);
        let fr = f(&reflected);
        if fr < values[0] {
            let expanded = along(-2.0);
            let fe = f(&expanded);
            if fe < fr {
                simplex[d] = expanded;
                values[d] = fe;
            } else {
                simplex[d] = reflected;
                values[d] = fr;
            }
        } else if fr < values[d - 1] {
            simplex[d] = reflected;
            values[d] = fr;
        } else {
            let (contracted, fc) = if fr < values[d] {
                let c = along(-0.5);
                let fc = f(&c);
                (c, fc)
            } else {
                let c = along(0.5);
                let fc = f(&c);
                (c, fc)
            };
            if fc < fr.min(values[d]) {
                simplex[d] = contracted;
                values[d] = fc;
            } else {
                let best = simplex[0].clone();
                for i in 1..=d {
                    for j in 0..d {
                        simplex[i][j] = best[j] + 0.5 * (simplex[i][j] - best[j]);
                    }
                    values[i] = f(&simplex[i]);
                }
            }
        }
    }
    let best = (0..=d).min_by(|&a, &b| values[a].total_cmp(&values[b])).unwrap_or(0);
    let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    NelderMeadOutcome { x: simplex[best].clone(), value: values[best], spread: worst - values[best], converged }
}

fn softmax(x: &[f64], reference: usize) -> Vec<f64> {
    let n = x.len() + 1;
    let mut logits = Vec::with_capacity(n);
    let mut it = x.iter();
    for k in 0..n {
        logits.push(if k == reference { 0.0 } else { *it.next().expect("length n-1") });
    }
    let m = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|l| (l - m).exp()).collect();
    let z: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / z).collect()
}

fn inverse_softmax(w: &[f64], reference: usize) -> Vec<f64> {
    const FLOOR: f64 = 1e-14;
    let wr = w[reference].max(FLOOR);
    w.iter()
        .enumerate()
        .filter(|&(k, _)| k != reference)
        .map(|(_, &wk)| (wk.max(FLOOR) / wr).ln())
        .collect()
}

/// Minimizes `objective` over probability vectors of length `n`.
///
/// The first run starts at `warm_start` (when given); the remaining runs
/// start from seeded random points. A final run polishes the best point
/// found. Fails only if no run met the tolerance.
pub fn minimize_on_simplex<F>(
    n: usize,
    objective: F,
    warm_start: Option<&[f64]>,
    opts: &SimplexOptions,
) -> Result<SimplexMinimum>
where
    F: Fn(&[f64]) -> f64,
{
    assert!(n >= 1, "simplex dimension must be positive");
    if n == 1 {
        return Ok(SimplexMinimum { weights: vec![1.0], value: objective(&[1.0]), converged_runs: 1 });
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(opts.seed);
    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut converged_runs = 0;
    let mut worst_spread: f64 = 0.0;

    let mut run = |start_w: &[f64], best: &mut Option<(Vec<f64>, f64)>| {
        let reference = argmax(start_w);
        let f = |x: &[f64]| objective(&softmax(x, reference));
        let x0 = inverse_softmax(start_w, reference);
        let out = nelder_mead(&f, &x0, opts.initial_step, opts.max_iterations, opts.tolerance);
        if out.converged {
            converged_runs += 1;
        } else {
            worst_spread = worst_spread.max(out.spread);
        }
        let w = softmax(&out.x, reference);
        if best.as_ref().map_or(true, |(_, v)| out.value < *v) {
            *best = Some((w, out.value));
        }
    };

    let mut remaining = opts.restarts.max(1);
    if let Some(w) = warm_start {
        assert_eq!(w.len(), n, "warm start has wrong length");
        run(w, &mut best);
        remaining -= 1;
    }
    for _ in 0..remaining {
        let x: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-4.0..4.0)).collect();
        run(&softmax(&x, 0), &mut best);
    }
    let (w, _) = best.clone().expect("at least one run");
    run(&w, &mut best);

    let (weights, value) = best.expect("at least one run");
    if converged_runs == 0 {
        return Err(Error::OptimizerFailure { restarts: opts.restarts, spread: worst_spread });
    }
    Ok(SimplexMinimum { weights, value, converged_runs })
}

fn argmax(w: &[f64]) -> usize {
    w.iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn softmax_round_trip() {
        let w = [0.2, 0.5, 0.3];
        let x = inverse_softmax(&w, 1);
        let back = softmax(&x, 1);
        for (a, b) in w.iter().zip(&back) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let out = nelder_mead(&f, &[-1.2, 1.0], 0.5, 5000, 1e-14);
        assert!(out.converged);
        assert!((out.x[0] - 1.0).abs() < 1e-4 && (out.x[1] - 1.0).abs() < 1e-4);
    }

    #[test]
    fn quadratic_on_simplex() {
        let target = [0.1, 0.6, 0.3];
        let f = |w: &[f64]| w.iter().zip(&target).map(|(a, b)| (a - b).powi(2)).sum::<f64>();
        let out = minimize_on_simplex(3, f, None, &SimplexOptions::default()).unwrap();
        assert!(out.value < 1e-9);
        for (a, b) in out.weights.iter().zip(&target) {
            assert!((a - b).abs() < 1e-4);
        }
    }

    #[test]
    fn warm_start_never_worsens() {
        let f = |w: &[f64]| (w[0] - 0.3).abs() + 0.01;
        let start = [0.3, 0.7];
        let out = minimize_on_simplex(2, f, Some(&start), &SimplexOptions::default()).unwrap();
        assert!(out.value <= f(&start) + 1e-15);
    }

    #[test]
    fn boundary_minimum() {
        // Optimum at a vertex; softmax approaches it asymptotically.
        let f = |w: &[f64]| w[1];
        let out = minimize_on_simplex(2, f, None, &SimplexOptions::default()).unwrap();
        assert!(out.value < 1e-8);
    }
}
