//! Composite trapezoid rule on sampled integrands.

/// ∫ y dt over the sample grid `t` (which need not be uniform).
pub fn trapezoid(t: &[f64], y: &[f64]) -> f64 {
    assert_eq!(t.len(), y.len(), "trapezoid: unequal sample counts");
    t.windows(2)
        .zip(y.windows(2))
        .map(|(tw, yw)| 0.5 * (tw[1] - tw[0]) * (yw[0] + yw[1]))
        .sum()
}

/// (1/T) ∫_0^T y dt with T = t_last - t_first.
pub fn time_average(t: &[f64], y: &[f64]) -> f64 {
    let span = t[t.len() - 1] - t[0];
    trapezoid(t, y) / span
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_linear() {
        let t: Vec<f64> = (0..=10).map(|k| k as f64 * 0.3).collect();
        let y: Vec<f64> = t.iter().map(|x| 2.0 * x + 1.0).collect();
        assert!((trapezoid(&t, &y) - (9.0 + 3.0)).abs() < 1e-12);
        assert!((time_average(&t, &y) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn second_order_convergence() {
        let err = |n: usize| {
            let t: Vec<f64> = (0..=n).map(|k| k as f64 / n as f64).collect();
            let y: Vec<f64> = t.iter().map(|x| x.exp()).collect();
            (trapezoid(&t, &y) - (1f64.exp() - 1.0)).abs()
        };
        let ratio = err(64) / err(128);
        assert!((ratio - 4.0).abs() < 0.05);
    }
}
