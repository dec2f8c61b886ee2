//! Speed-limit bounds evaluated on a propagated trajectory.
//!
//! Every bound has the form numerator / mean_denominator, where the mean
//! denominator is a time-averaged speed (1/T)∫ v(t) dt computed with the
//! trapezoid rule over the trajectory grid. The coherence basis at each
//! sample is the eigenbasis of H_t.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, SQRT_2};
use std::fmt;

use crate::coherence::{
    coherence_c2, coherence_hellinger, coherence_p, coherence_tilde_p, energy_variance, wysi, ReferenceBasis,
};
use crate::dynamics::Trajectory;
use crate::error::{Error, Result};
use crate::linalg::{commutator, hermitian_eig, schatten_norm, ComplexMatrix};
use crate::optim::SimplexOptions;
use crate::quadrature::time_average;
use crate::states::{affinity_raw, bures_angle, relative_purity_raw, DensityMatrix, PureState};

/// Below this the averaged speed is treated as zero.
pub const DEGENERATE_DENOMINATOR: f64 = 1e-14;
/// Purity above 1 - PURE_TOL counts as a pure state.
pub const PURE_TOL: f64 = 1e-8;
const CONJUGATE_TOL: f64 = 1e-9;
const RANGE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundName {
    /// Schatten family, mixed states.
    TS,
    /// Schatten family specialized to pure states (ΔH_t of the initial state).
    TSPure,
    /// Time-independent pure-state Schatten bound (no time integral).
    TSTilde,
    /// Affinity family with the square-root coherence C̃_p.
    TH,
    /// Affinity family at p = q = 2 written with C_H and the skew information.
    TH22,
    TAA,
    TRPPure,
    TRP,
    TWY,
    TMTML,
}

impl BoundName {
    pub fn label(self) -> &'static str {
        match self {
            BoundName::TS => "T_S",
            BoundName::TSPure => "T_S_PURE",
            BoundName::TSTilde => "T_S_TILDE",
            BoundName::TH => "T_H",
            BoundName::TH22 => "T_H_22",
            BoundName::TAA => "T_AA",
            BoundName::TRPPure => "T_RP_PURE",
            BoundName::TRP => "T_RP",
            BoundName::TWY => "T_WY",
            BoundName::TMTML => "T_MTML",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The two Hölder pairs with pure-state specializations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PureCase {
    /// p = 1, q = ∞.
    P1Inf,
    /// p = q = 2.
    P2_2,
}

impl PureCase {
    pub fn exponents(self) -> (f64, f64) {
        match self {
            PureCase::P1Inf => (1.0, f64::INFINITY),
            PureCase::P2_2 => (2.0, 2.0),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub name: BoundName,
    pub p: Option<f64>,
    pub q: Option<f64>,
    pub value: f64,
    pub numerator: f64,
    pub mean_denominator: f64,
    /// Speed samples (t, v(t)) whose time average is `mean_denominator`.
    pub integrand: Vec<(f64, f64)>,
    pub metadata: BTreeMap<String, String>,
}

impl BoundReport {
    fn new(name: BoundName, exps: Option<(f64, f64)>, numerator: f64, mean_denominator: f64) -> Result<Self> {
        if !(mean_denominator >= DEGENERATE_DENOMINATOR) {
            return Err(Error::DegenerateDenominator { value: mean_denominator });
        }
        let numerator = numerator.max(0.0);
        Ok(Self {
            name,
            p: exps.map(|e| e.0),
            q: exps.map(|e| e.1),
            value: numerator / mean_denominator,
            numerator,
            mean_denominator,
            integrand: Vec::new(),
            metadata: BTreeMap::new(),
        })
    }

    fn with_integrand(mut self, times: &[f64], values: &[f64]) -> Self {
        self.integrand = times.iter().copied().zip(values.iter().copied()).collect();
        self.metadata.insert("quadrature".into(), "trapezoid".into());
        self.metadata.insert("samples".into(), times.len().to_string());
        self
    }

    fn meta(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.insert(key.into(), value.to_string());
        self
    }
}

/// Checks 1/p + 1/q = 1 (with 1/∞ = 0) and p, q ≥ 1.
pub fn check_conjugate(p: f64, q: f64) -> Result<()> {
    let inv = |x: f64| if x.is_infinite() { 0.0 } else { 1.0 / x };
    if p.is_nan() || q.is_nan() || p < 1.0 || q < 1.0 || (inv(p) + inv(q) - 1.0).abs() > CONJUGATE_TOL {
        return Err(Error::ConjugateMismatch { p, q });
    }
    Ok(())
}

fn basis_at(traj: &Trajectory, k: usize) -> ReferenceBasis {
    ReferenceBasis::from_spectrum(traj.spectrum(k))
}

fn ensure_pure(rho: &DensityMatrix) -> Result<()> {
    let purity = rho.purity();
    if purity <= 1.0 - PURE_TOL {
        return Err(Error::NotPure { purity });
    }
    Ok(())
}

fn checked_unit(value: f64, what: &'static str, lo: f64) -> Result<f64> {
    if value < lo - RANGE_TOL || value > 1.0 + RANGE_TOL || value.is_nan() {
        return Err(Error::OutOfRange { what, value });
    }
    Ok(value.clamp(lo, 1.0))
}

/// C_p in the eigenbasis of H_t: closed form at p = 2, optimizer otherwise.
fn coherence_at(rho: &DensityMatrix, basis: &ReferenceBasis, p: f64) -> Result<f64> {
    if p == 2.0 {
        coherence_c2(rho, basis)
    } else {
        coherence_p(rho, basis, p, &SimplexOptions::default())
    }
}

fn endpoint_relative_purity(traj: &Trajectory) -> Result<(f64, f64)> {
    let raw = relative_purity_raw(traj.initial(), traj.final_state())?;
    Ok((raw, checked_unit(raw, "relative purity", 0.0)?))
}

fn endpoint_affinity(traj: &Trajectory) -> Result<(f64, f64)> {
    let raw = affinity_raw(traj.initial(), traj.final_state())?;
    Ok((raw, checked_unit(raw, "affinity", -1.0)?))
}

/// Schatten-norm family: [1 - F_RP(ρ_0, ρ_T)] Tr ρ_0² / (1/T)∫ C_p(ρ_t) ||[H_t, ρ_0]||_q dt.
pub fn schatten_bound(traj: &Trajectory, p: f64, q: f64) -> Result<BoundReport> {
    check_conjugate(p, q)?;
    let rho0 = traj.initial();
    let (raw, f_rp) = endpoint_relative_purity(traj)?;
    let numerator = (1.0 - f_rp) * rho0.purity();
    let speeds = (0..traj.len())
        .map(|k| {
            let c = coherence_at(traj.state(k), &basis_at(traj, k), p)?;
            let comm = commutator(traj.hamiltonian(k), rho0.matrix())?;
            Ok(c * schatten_norm(&comm, q)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let mean = time_average(traj.times(), &speeds);
    Ok(BoundReport::new(BoundName::TS, Some((p, q)), numerator, mean)?
        .with_integrand(traj.times(), &speeds)
        .meta("relative_purity_raw", raw))
}

/// Pure-state Schatten bounds with ΔH_t measured in the initial state.
pub fn schatten_bound_pure(traj: &Trajectory, case: PureCase) -> Result<BoundReport> {
    let rho0 = traj.initial();
    ensure_pure(rho0)?;
    let (raw, fidelity) = endpoint_relative_purity(traj)?;
    let speeds = (0..traj.len())
        .map(|k| {
            let basis = basis_at(traj, k);
            let dh = energy_variance(rho0, traj.hamiltonian(k))?.sqrt();
            Ok(match case {
                PureCase::P1Inf => coherence_at(traj.state(k), &basis, 1.0)? * dh,
                PureCase::P2_2 => SQRT_2 * coherence_c2(traj.state(k), &basis)? * dh,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mean = time_average(traj.times(), &speeds);
    Ok(BoundReport::new(BoundName::TSPure, Some(case.exponents()), 1.0 - fidelity, mean)?
        .with_integrand(traj.times(), &speeds)
        .meta("fidelity_raw", raw))
}

/// Time-independent pure-state Schatten bounds; coherence is conserved so
/// only the initial state enters the denominator.
pub fn schatten_bound_static_pure(traj: &Trajectory, case: PureCase) -> Result<BoundReport> {
    if !traj.protocol().is_static() {
        return Err(Error::NotStatic);
    }
    let rho0 = traj.initial();
    ensure_pure(rho0)?;
    let (raw, fidelity) = endpoint_relative_purity(traj)?;
    let basis = basis_at(traj, 0);
    let dh = energy_variance(rho0, traj.hamiltonian(0))?.sqrt();
    let speed = match case {
        PureCase::P1Inf => coherence_at(rho0, &basis, 1.0)? * dh,
        PureCase::P2_2 => SQRT_2 * coherence_c2(rho0, &basis)? * dh,
    };
    Ok(BoundReport::new(BoundName::TSTilde, Some(case.exponents()), 1.0 - fidelity, speed)?
        .meta("fidelity_raw", raw))
}

/// Affinity family: [1 - F_A(ρ_0, ρ_T)] / (1/T)∫ C̃_p(ρ_t) ||[H_t, √ρ_0]||_q dt.
pub fn affinity_bound(traj: &Trajectory, p: f64, q: f64) -> Result<BoundReport> {
    check_conjugate(p, q)?;
    let sqrt0 = traj.initial().sqrt()?;
    let (raw, f_a) = endpoint_affinity(traj)?;
    let opts = SimplexOptions::default();
    let speeds = (0..traj.len())
        .map(|k| {
            let c = coherence_tilde_p(traj.state(k), &basis_at(traj, k), p, &opts)?;
            let comm = commutator(traj.hamiltonian(k), sqrt0)?;
            Ok(c * schatten_norm(&comm, q)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let mean = time_average(traj.times(), &speeds);
    Ok(BoundReport::new(BoundName::TH, Some((p, q)), 1.0 - f_a, mean)?
        .with_integrand(traj.times(), &speeds)
        .meta("affinity_raw", raw))
}

/// Affinity family at p = q = 2:
/// [1 - F_A] / (√2/T)∫ √C_H(ρ_t) √I(ρ_0, H_t) dt.
pub fn hellinger_bound(traj: &Trajectory) -> Result<BoundReport> {
    let rho0 = traj.initial();
    let (raw, f_a) = endpoint_affinity(traj)?;
    let speeds = (0..traj.len())
        .map(|k| {
            let ch = coherence_hellinger(traj.state(k), &basis_at(traj, k))?;
            let skew = wysi(rho0, traj.hamiltonian(k))?;
            Ok(SQRT_2 * ch.sqrt() * skew.sqrt())
        })
        .collect::<Result<Vec<_>>>()?;
    let mean = time_average(traj.times(), &speeds);
    Ok(BoundReport::new(BoundName::TH22, Some((2.0, 2.0)), 1.0 - f_a, mean)?
        .with_integrand(traj.times(), &speeds)
        .meta("affinity_raw", raw))
}

/// Anandan-Aharonov: arccos √F / ΔH for a pure state and a static Hamiltonian.
pub fn anandan_aharonov_bound(traj: &Trajectory) -> Result<BoundReport> {
    if !traj.protocol().is_static() {
        return Err(Error::NotStatic);
    }
    let rho0 = traj.initial();
    ensure_pure(rho0)?;
    let (raw, fidelity) = endpoint_relative_purity(traj)?;
    let dh = energy_variance(rho0, traj.hamiltonian(0))?.sqrt();
    Ok(BoundReport::new(BoundName::TAA, None, bures_angle(fidelity)?, dh)?.meta("fidelity_raw", raw))
}

/// Relative-purity bound. The pure variant averages ΔH_t in the evolved
/// state; the mixed variant averages sqrt(Tr(ρ_t² H_t² - (ρ_t H_t)²)/Tr ρ_t²).
pub fn relative_purity_bound(traj: &Trajectory, pure_variant: bool) -> Result<BoundReport> {
    if pure_variant {
        ensure_pure(traj.initial())?;
    }
    let (raw, f_rp) = endpoint_relative_purity(traj)?;
    let speeds = (0..traj.len())
        .map(|k| {
            let rho = traj.state(k);
            let h = traj.hamiltonian(k);
            if pure_variant {
                return Ok(energy_variance(rho, h)?.sqrt());
            }
            let r = rho.matrix();
            let rh = r * h;
            let r2 = r * r;
            let h2 = h * h;
            let spread = r2.trace_product(&h2).re - rh.trace_product(&rh).re;
            Ok((spread.max(0.0) / rho.purity()).sqrt())
        })
        .collect::<Result<Vec<_>>>()?;
    let mean = time_average(traj.times(), &speeds);
    let name = if pure_variant { BoundName::TRPPure } else { BoundName::TRP };
    Ok(BoundReport::new(name, None, bures_angle(f_rp)?, mean)?
        .with_integrand(traj.times(), &speeds)
        .meta("relative_purity_raw", raw))
}

/// Wigner-Yanase bound: arccos F_A / (√2/T)∫ √I(ρ_t, H_t) dt.
pub fn wigner_yanase_bound(traj: &Trajectory) -> Result<BoundReport> {
    let (raw, f_a) = endpoint_affinity(traj)?;
    let speeds = (0..traj.len())
        .map(|k| Ok(SQRT_2 * wysi(traj.state(k), traj.hamiltonian(k))?.sqrt()))
        .collect::<Result<Vec<_>>>()?;
    let mean = time_average(traj.times(), &speeds);
    Ok(BoundReport::new(BoundName::TWY, None, f_a.acos(), mean)?
        .with_integrand(traj.times(), &speeds)
        .meta("affinity_raw", raw))
}

/// Combined Mandelstam-Tamm / Margolus-Levitin time to reach an orthogonal
/// state: max{π/(2ΔH), π/(2(<H> - E_g))}. A vanishing speed drops its term.
pub fn mt_ml_bound(h: &ComplexMatrix, psi0: &PureState) -> Result<BoundReport> {
    h.ensure_hermitian()?;
    let rho0 = DensityMatrix::from_pure(psi0);
    let dh = energy_variance(&rho0, h)?.sqrt();
    let ground = hermitian_eig(h)?.eigenvalues()[0];
    let mean_energy = (psi0.expectation(h)? - ground).max(0.0);
    let slowest = [dh, mean_energy]
        .into_iter()
        .filter(|&v| v >= DEGENERATE_DENOMINATOR)
        .fold(f64::INFINITY, f64::min);
    if slowest.is_infinite() {
        return Err(Error::DegenerateDenominator { value: dh.max(mean_energy) });
    }
    Ok(BoundReport::new(BoundName::TMTML, None, FRAC_PI_2, slowest)?
        .meta("delta_h", dh)
        .meta("mean_energy_above_ground", mean_energy))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

    use num_complex::Complex64 as C64;

    use super::*;
    use crate::dynamics::{propagate, Protocol};
    use crate::linalg::pauli;

    fn plus() -> PureState {
        PureState::new(vec![C64::new(FRAC_1_SQRT_2, 0.0); 2]).unwrap()
    }

    fn precession(t: f64, steps: usize) -> Trajectory {
        let proto = Protocol::constant(pauli::z()).unwrap();
        propagate(&DensityMatrix::from_pure(&plus()), &proto, t, steps).unwrap()
    }

    #[test]
    fn conjugate_pairs() {
        assert!(check_conjugate(2.0, 2.0).is_ok());
        assert!(check_conjugate(1.0, f64::INFINITY).is_ok());
        assert!(check_conjugate(f64::INFINITY, 1.0).is_ok());
        assert!(check_conjugate(3.0, 1.5).is_ok());
        assert!(matches!(check_conjugate(2.0, 3.0), Err(Error::ConjugateMismatch { .. })));
        assert!(check_conjugate(0.5, -1.0).is_err());
    }

    #[test]
    fn incoherent_initial_state_is_degenerate() {
        let proto = Protocol::constant(pauli::z()).unwrap();
        let rho0 = DensityMatrix::from_pure(&PureState::basis(2, 0).unwrap());
        let traj = propagate(&rho0, &proto, 1.0, 64).unwrap();
        assert!(matches!(schatten_bound(&traj, 2.0, 2.0), Err(Error::DegenerateDenominator { .. })));
        assert!(matches!(anandan_aharonov_bound(&traj), Err(Error::DegenerateDenominator { .. })));
        assert!(matches!(wigner_yanase_bound(&traj), Err(Error::DegenerateDenominator { .. })));
        assert!(matches!(affinity_bound(&traj, 2.0, 2.0), Err(Error::DegenerateDenominator { .. })));
    }

    #[test]
    fn mixed_incoherent_state_is_degenerate() {
        let proto = Protocol::constant(pauli::z()).unwrap();
        let rho0 = DensityMatrix::new(ComplexMatrix::from_real_diag(&[0.3, 0.7])).unwrap();
        let traj = propagate(&rho0, &proto, 1.0, 64).unwrap();
        assert!(matches!(affinity_bound(&traj, 2.0, 2.0), Err(Error::DegenerateDenominator { .. })));
        assert!(matches!(hellinger_bound(&traj), Err(Error::DegenerateDenominator { .. })));
    }

    #[test]
    fn precession_schatten_values() {
        let traj = precession(FRAC_PI_2, 256);
        let r = schatten_bound(&traj, 2.0, 2.0).unwrap();
        assert!((r.value - 1.0).abs() < 1e-6);
        assert!((r.value - r.numerator / r.mean_denominator).abs() < 1e-12);
        assert_eq!(r.integrand.len(), 257);
        let r = schatten_bound(&traj, 1.0, f64::INFINITY).unwrap();
        assert!((r.value - 1.0).abs() < 1e-6);
    }

    #[test]
    fn precession_pure_values() {
        let traj = precession(FRAC_PI_2, 256);
        assert!((schatten_bound_pure(&traj, PureCase::P2_2).unwrap().value - 1.0).abs() < 1e-6);
        let quarter = precession(FRAC_PI_4, 256);
        assert!((schatten_bound_pure(&quarter, PureCase::P1Inf).unwrap().value - 0.5).abs() < 1e-6);
        for case in [PureCase::P1Inf, PureCase::P2_2] {
            assert!((schatten_bound_static_pure(&traj, case).unwrap().value - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn static_only_bounds_reject_time_dependence() {
        let proto = Protocol::single_qubit_rqa(1.0, 0.5, 2.0).unwrap();
        let traj = propagate(&DensityMatrix::from_pure(&plus()), &proto, 2.0, 64).unwrap();
        assert_eq!(anandan_aharonov_bound(&traj), Err(Error::NotStatic));
        assert_eq!(schatten_bound_static_pure(&traj, PureCase::P2_2), Err(Error::NotStatic));
    }

    #[test]
    fn pure_only_bounds_reject_mixed() {
        let proto = Protocol::constant(pauli::x()).unwrap();
        let rho0 = DensityMatrix::new(ComplexMatrix::from_real_diag(&[0.3, 0.7])).unwrap();
        let traj = propagate(&rho0, &proto, 1.0, 64).unwrap();
        assert!(matches!(anandan_aharonov_bound(&traj), Err(Error::NotPure { .. })));
        assert!(matches!(relative_purity_bound(&traj, true), Err(Error::NotPure { .. })));
        assert!(matches!(schatten_bound_pure(&traj, PureCase::P2_2), Err(Error::NotPure { .. })));
        assert!(relative_purity_bound(&traj, false).is_ok());
    }

    #[test]
    fn precession_baselines() {
        let traj = precession(FRAC_PI_2, 256);
        assert!((anandan_aharonov_bound(&traj).unwrap().value - FRAC_PI_2).abs() < 1e-6);
        assert!((relative_purity_bound(&traj, true).unwrap().value - FRAC_PI_2).abs() < 1e-6);
        let mixed = relative_purity_bound(&traj, false).unwrap().value;
        let pure = relative_purity_bound(&traj, true).unwrap().value;
        assert!((mixed - pure).abs() < 1e-9);
        let quarter = precession(FRAC_PI_4, 256);
        assert!((anandan_aharonov_bound(&quarter).unwrap().value - FRAC_PI_4).abs() < 1e-6);
    }

    #[test]
    fn precession_wigner_yanase() {
        // Pure states: F_A(ρ_0, ρ_T) = |<ψ_0|ψ_T>|² = 0 and I = ΔH² = 1,
        // so the bound is (π/2)/√2.
        let traj = precession(FRAC_PI_2, 256);
        let v = wigner_yanase_bound(&traj).unwrap().value;
        assert!((v - FRAC_PI_2 / SQRT_2).abs() < 1e-6);
    }

    #[test]
    fn precession_hellinger() {
        // C_H(|+>) = 2 - √2 in the Z basis, I = 1, F_A = 0:
        // 1 / (√2 · √(2 - √2)) = cos(π/8).
        let traj = precession(FRAC_PI_2, 256);
        let v = hellinger_bound(&traj).unwrap().value;
        assert!((v - (PI / 8.0).cos()).abs() < 1e-6);
    }

    #[test]
    fn operator_norm_of_pure_commutator_is_energy_spread() {
        let proto = Protocol::single_qubit_rqa(1.0, 0.5, 3.0).unwrap();
        let rho0 = DensityMatrix::from_pure(&plus());
        for t in [0.0, 0.7, 1.5, 2.9] {
            let h = proto.hamiltonian_at(t).unwrap();
            let norm = schatten_norm(&commutator(&h, rho0.matrix()).unwrap(), f64::INFINITY).unwrap();
            assert!((norm - energy_variance(&rho0, &h).unwrap().sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn affinity_family_matches_hellinger_form() {
        let tau = 3.0;
        let proto = Protocol::two_qubit_rqa(1.0, 1.0, tau).unwrap();
        let hi = proto.hamiltonian_at(0.0).unwrap();
        let k0 = crate::dynamics::eigenstate_prep(&hi, 0).unwrap();
        let k1 = crate::dynamics::eigenstate_prep(&hi, 1).unwrap();
        let rho0 = DensityMatrix::mixture(&[(0.25, k0), (0.75, k1)]).unwrap();
        let traj = propagate(&rho0, &proto, tau, 64).unwrap();
        let general = affinity_bound(&traj, 2.0, 2.0).unwrap().value;
        let closed = hellinger_bound(&traj).unwrap().value;
        assert!((general - closed).abs() < 1e-9, "{general} vs {closed}");
        assert!(closed <= tau);
    }

    #[test]
    fn pure_affinity_family_uses_square_root_coherence() {
        // For pure states √ρ = ρ but √σ ≠ σ, so the two families differ:
        // T_S(2,2) = 1 while T_H(2,2) = cos(π/8) on the precession fixture.
        let traj = precession(FRAC_PI_2, 256);
        let s = schatten_bound(&traj, 2.0, 2.0).unwrap().value;
        let h = affinity_bound(&traj, 2.0, 2.0).unwrap().value;
        assert!((s - 1.0).abs() < 1e-6);
        assert!((h - (PI / 8.0).cos()).abs() < 1e-6);
    }

    #[test]
    fn mt_ml_values() {
        let r = mt_ml_bound(&pauli::z(), &plus()).unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-12);
        let r = mt_ml_bound(&pauli::z(), &PureState::basis(2, 0).unwrap()).unwrap();
        assert!((r.value - FRAC_PI_4).abs() < 1e-12);
        // diag(0, 1, 2), equal superposition: ΔH = √(2/3), mean energy 1.
        let h = ComplexMatrix::from_real_diag(&[0.0, 1.0, 2.0]);
        let psi = PureState::normalized(vec![C64::new(1.0, 0.0); 3]).unwrap();
        let r = mt_ml_bound(&h, &psi).unwrap();
        let expect = (FRAC_PI_2 / (2.0f64 / 3.0).sqrt()).max(FRAC_PI_2);
        assert!((r.value - expect).abs() < 1e-12);
        let ground = PureState::basis(2, 1).unwrap();
        assert!(matches!(mt_ml_bound(&pauli::z(), &ground), Err(Error::DegenerateDenominator { .. })));
    }
}
