use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{pauli, ComplexMatrix};

/// Slack allowed past either end of the schedule window, relative to τ.
const TIME_SLACK: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub enum ProtocolKind {
    Static(ComplexMatrix),
    /// H_t = s_i(t) H_i + s_x(t) H_x + s_p(t) H_p over t ∈ [0, τ].
    ReverseAnneal { initial: ComplexMatrix, transverse: ComplexMatrix, target: ComplexMatrix, tau: f64 },
}

/// A (possibly time-dependent) Hamiltonian.
#[derive(Clone, Debug, PartialEq)]
pub struct Protocol {
    kind: ProtocolKind,
}

/// Reverse-annealing schedules (s_i, s_x, s_p) at time t of a sweep of length τ.
pub fn rqa_schedules(t: f64, tau: f64) -> Result<(f64, f64, f64)> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::OutOfRange { what: "tau", value: tau });
    }
    if t < -TIME_SLACK * tau || t > tau * (1.0 + TIME_SLACK) || t.is_nan() {
        return Err(Error::OutOfRange { what: "t", value: t });
    }
    let t = t.clamp(0.0, tau);
    let s_i = (PI * t / (2.0 * tau)).cos().powi(2);
    let s_x = (PI * t / tau).sin().powi(2);
    let s_p = (PI * t / (2.0 * tau)).sin().powi(2);
    Ok((s_i, s_x, s_p))
}

impl Protocol {
    pub fn constant(h: ComplexMatrix) -> Result<Self> {
        h.ensure_hermitian()?;
        Ok(Self { kind: ProtocolKind::Static(h.hermitian_part()) })
    }

    pub fn reverse_anneal(
        initial: ComplexMatrix,
        transverse: ComplexMatrix,
        target: ComplexMatrix,
        tau: f64,
    ) -> Result<Self> {
        for op in [&initial, &transverse, &target] {
            op.ensure_hermitian()?;
        }
        initial.ensure_same_dim(&transverse)?;
        initial.ensure_same_dim(&target)?;
        if !(tau > 0.0) || !tau.is_finite() {
            return Err(Error::OutOfRange { what: "tau", value: tau });
        }
        Ok(Self {
            kind: ProtocolKind::ReverseAnneal {
                initial: initial.hermitian_part(),
                transverse: transverse.hermitian_part(),
                target: target.hermitian_part(),
                tau,
            },
        })
    }

    /// Single qubit: H_i = J Z, H_x = -Γ X, H_p = -J Z.
    pub fn single_qubit_rqa(j: f64, gamma: f64, tau: f64) -> Result<Self> {
        let z = pauli::z();
        Self::reverse_anneal(z.scale_real(j), pauli::x().scale_real(-gamma), z.scale_real(-j), tau)
    }

    /// Two qubits: H_i = J(2 Z_1 - Z_2), H_x = -Γ X_1 X_2, H_p = -J(2 Z_1 - Z_2).
    pub fn two_qubit_rqa(j: f64, gamma: f64, tau: f64) -> Result<Self> {
        let z1 = pauli::embed(&pauli::z(), 0, 2);
        let z2 = pauli::embed(&pauli::z(), 1, 2);
        let hi = (&z1.scale_real(2.0) - &z2).scale_real(j);
        let xx = pauli::x().kron(&pauli::x());
        Self::reverse_anneal(hi.clone(), xx.scale_real(-gamma), hi.scale_real(-1.0), tau)
    }

    pub fn kind(&self) -> &ProtocolKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            ProtocolKind::Static(h) => h.dim(),
            ProtocolKind::ReverseAnneal { initial, .. } => initial.dim(),
        }
    }

    pub fn is_static(&self) -> bool {
        matches!(self.kind, ProtocolKind::Static(_))
    }

    /// Largest admissible time, if the protocol has one.
    pub fn horizon(&self) -> Option<f64> {
        match &self.kind {
            ProtocolKind::Static(_) => None,
            ProtocolKind::ReverseAnneal { tau, .. } => Some(*tau),
        }
    }

    pub fn hamiltonian_at(&self, t: f64) -> Result<ComplexMatrix> {
        match &self.kind {
            ProtocolKind::Static(h) => {
                if t < 0.0 || t.is_nan() {
                    return Err(Error::OutOfRange { what: "t", value: t });
                }
                Ok(h.clone())
            }
            ProtocolKind::ReverseAnneal { initial, transverse, target, tau } => {
                let (si, sx, sp) = rqa_schedules(t, *tau)?;
                let h = &(&initial.scale_real(si) + &transverse.scale_real(sx)) + &target.scale_real(sp);
                Ok(h.hermitian_part())
            }
        }
    }

    /// Operators multiplied by `c` and the sweep length divided by `c`.
    pub fn rescaled(&self, c: f64) -> Result<Self> {
        match &self.kind {
            ProtocolKind::Static(h) => Self::constant(h.scale_real(c)),
            ProtocolKind::ReverseAnneal { initial, transverse, target, tau } => Self::reverse_anneal(
                initial.scale_real(c),
                transverse.scale_real(c),
                target.scale_real(c),
                tau / c,
            ),
        }
    }
}
