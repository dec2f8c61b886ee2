//! Scenario construction and bound evaluation for each experiment.

use rayon::prelude::*;

use qsl_core::bounds::{
    affinity_bound, anandan_aharonov_bound, hellinger_bound, mt_ml_bound, relative_purity_bound, schatten_bound,
    schatten_bound_pure, schatten_bound_static_pure, wigner_yanase_bound, BoundReport, PureCase, PURE_TOL,
};
use qsl_core::dynamics::{
    eigenstate_prep, haar_random_hamiltonian, instance_seed, propagate, Protocol, Trajectory, ENSEMBLE_TAG,
};
use qsl_core::linalg::hermitian_eig;
use qsl_core::states::{affinity, relative_purity, DensityMatrix, PureState};
use qsl_core::Error;

use crate::config::{BoundSpec, Experiment, ExperimentConfig};
use crate::error::CliError;
use crate::protocol_file::ProtocolFile;

/// Marker written in place of a bound that exceeds its horizon.
pub const EXCEEDS_HORIZON: &str = "BoundExceedsHorizon";
const VALIDITY_SLACK: f64 = 1e-6;
/// Endpoint fidelity above which T_MTML is not reported (it bounds the time
/// to reach an orthogonal state only).
const ORTHOGONAL_TOL: f64 = 1e-6;
pub const FIG1A_RATIO_COLUMN: &str = "T_S_TILDE_2_2_over_T_AA";

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Value(f64),
    Error(&'static str),
}

impl Cell {
    pub fn value(&self) -> Option<f64> {
        match self {
            Cell::Value(v) => Some(*v),
            Cell::Error(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResultRow {
    pub scenario_id: String,
    pub tau: f64,
    /// One cell per requested bound, in request order.
    pub bounds: Vec<Cell>,
    pub extras: Vec<Cell>,
    pub relative_purity_end: Option<f64>,
    pub affinity_end: Option<f64>,
    /// Human-readable details for every error marker in the row.
    pub error: Option<String>,
}

impl ResultRow {
    pub fn bound(&self, bounds: &[BoundSpec], which: BoundSpec) -> Option<&Cell> {
        bounds.iter().position(|b| *b == which).map(|i| &self.bounds[i])
    }
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    pub config: ExperimentConfig,
    pub extra_columns: Vec<String>,
    pub rows: Vec<ResultRow>,
    pub ensemble: Option<&'static str>,
}

impl RunOutput {
    pub fn column(&self, which: BoundSpec) -> Vec<Option<f64>> {
        self.rows
            .iter()
            .map(|r| r.bound(&self.config.bounds, which).and_then(Cell::value))
            .collect()
    }
}

fn pure_part(rho: &DensityMatrix) -> Result<PureState, Error> {
    let purity = rho.purity();
    if purity <= 1.0 - PURE_TOL {
        return Err(Error::NotPure { purity });
    }
    let spec = hermitian_eig(rho.matrix())?;
    PureState::normalized(spec.vector(rho.dim() - 1))
}

fn evaluate(bound: BoundSpec, traj: &Trajectory) -> Result<BoundReport, Error> {
    match bound {
        BoundSpec::TS22 => schatten_bound(traj, 2.0, 2.0),
        BoundSpec::TS1Inf => schatten_bound(traj, 1.0, f64::INFINITY),
        BoundSpec::TSPure22 => schatten_bound_pure(traj, PureCase::P2_2),
        BoundSpec::TSPure1Inf => schatten_bound_pure(traj, PureCase::P1Inf),
        BoundSpec::TSTilde22 => schatten_bound_static_pure(traj, PureCase::P2_2),
        BoundSpec::TSTilde1Inf => schatten_bound_static_pure(traj, PureCase::P1Inf),
        BoundSpec::TH22General => affinity_bound(traj, 2.0, 2.0),
        BoundSpec::TH1Inf => affinity_bound(traj, 1.0, f64::INFINITY),
        BoundSpec::TH22 => hellinger_bound(traj),
        BoundSpec::TAA => anandan_aharonov_bound(traj),
        BoundSpec::TRP => relative_purity_bound(traj, false),
        BoundSpec::TRPPure => relative_purity_bound(traj, true),
        BoundSpec::TWY => wigner_yanase_bound(traj),
        BoundSpec::TMTML => {
            if !traj.protocol().is_static() {
                return Err(Error::NotStatic);
            }
            let psi0 = pure_part(traj.initial())?;
            let fidelity = relative_purity(traj.initial(), traj.final_state())?;
            if fidelity > ORTHOGONAL_TOL {
                return Err(Error::NotOrthogonal { fidelity });
            }
            mt_ml_bound(traj.hamiltonian(0), &psi0)
        }
    }
}

/// Propagates `rho0` under `protocol` up to `tau` and evaluates each bound.
/// Failures are recorded in the row instead of aborting.
pub fn evaluate_scenario(
    scenario_id: String,
    rho0: &DensityMatrix,
    protocol: &Protocol,
    tau: f64,
    steps: usize,
    bounds: &[BoundSpec],
) -> ResultRow {
    let mut row = ResultRow {
        scenario_id,
        tau,
        bounds: Vec::with_capacity(bounds.len()),
        extras: Vec::new(),
        relative_purity_end: None,
        affinity_end: None,
        error: None,
    };
    let traj = match propagate(rho0, protocol, tau, steps) {
        Ok(t) => t,
        Err(e) => {
            row.bounds = vec![Cell::Error(e.kind()); bounds.len()];
            row.error = Some(format!("propagation: {e}"));
            return row;
        }
    };
    row.relative_purity_end = relative_purity(traj.initial(), traj.final_state()).ok();
    row.affinity_end = affinity(traj.initial(), traj.final_state()).ok();
    let mut notes = Vec::new();
    for &b in bounds {
        let cell = match evaluate(b, &traj) {
            Ok(r) if r.value > tau * (1.0 + VALIDITY_SLACK) => {
                notes.push(format!("{b}: value {:e} exceeds tau", r.value));
                Cell::Error(EXCEEDS_HORIZON)
            }
            Ok(r) => Cell::Value(r.value),
            Err(e) => {
                notes.push(format!("{b}: {e}"));
                Cell::Error(e.kind())
            }
        };
        row.bounds.push(cell);
    }
    if !notes.is_empty() {
        row.error = Some(notes.join("; "));
    }
    row
}

/// One initial state, protocol and horizon; the unit of parallel work.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub id: String,
    pub rho0: DensityMatrix,
    pub protocol: Protocol,
    pub tau: f64,
}

/// Builds every scenario of an experiment in output order. Construction
/// failures are kept so they surface as error rows.
pub fn scenarios(
    cfg: &ExperimentConfig,
    file: Option<&ProtocolFile>,
) -> Result<Vec<(String, f64, Result<Scenario, Error>)>, CliError> {
    let grid = |prefix: &str, build: &dyn Fn(f64) -> Result<(DensityMatrix, Protocol), Error>| {
        cfg.tau_grid
            .iter()
            .enumerate()
            .map(|(k, &tau)| {
                let id = format!("{prefix}-tau{k:02}");
                let sc = build(tau).map(|(rho0, protocol)| Scenario { id: id.clone(), rho0, protocol, tau });
                (id, tau, sc)
            })
            .collect::<Vec<_>>()
    };
    Ok(match cfg.experiment {
        Experiment::Fig1a => {
            let psi0 = DensityMatrix::from_pure(&PureState::basis(2, 0)?);
            let tau = cfg.tau_grid[0];
            (0..cfg.instances)
                .map(|i| {
                    let id = format!("fig1a-{i:04}");
                    let h = haar_random_hamiltonian(2, instance_seed(cfg.seed, i as u64));
                    let sc = Protocol::constant(h).map(|protocol| Scenario {
                        id: id.clone(),
                        rho0: psi0.clone(),
                        protocol,
                        tau,
                    });
                    (id, tau, sc)
                })
                .collect()
        }
        // Single qubit, H_i = JZ, H_x = -ΓX, H_p = -JZ, from the ground state of H_i.
        Experiment::RqaSingle => grid("rqa-single", &|tau| {
            let protocol = Protocol::single_qubit_rqa(1.0, cfg.gamma_over_j, tau)?;
            let ground = eigenstate_prep(&protocol.hamiltonian_at(0.0)?, 0)?;
            Ok((DensityMatrix::from_pure(&ground), protocol))
        }),
        // Two qubits, H_i = J(2Z_1 - Z_2), H_x = -ΓX_1X_2, H_p = -H_i, from
        // ρ_0 = ¼|k_0><k_0| + ¾|k_1><k_1| in the two lowest eigenstates of H_i.
        Experiment::RqaTwo => grid("rqa-two", &|tau| {
            let protocol = Protocol::two_qubit_rqa(1.0, cfg.gamma_over_j, tau)?;
            let hi = protocol.hamiltonian_at(0.0)?;
            let rho0 =
                DensityMatrix::mixture(&[(0.25, eigenstate_prep(&hi, 0)?), (0.75, eigenstate_prep(&hi, 1)?)])?;
            Ok((rho0, protocol))
        }),
        Experiment::Custom => {
            let file = file.ok_or_else(|| CliError::Config("custom experiment needs a protocol file".into()))?;
            let rho0 = file.initial_state()?;
            grid("custom", &|tau| Ok((rho0.clone(), file.protocol(tau)?)))
        }
    })
}

fn failed_row(scenario_id: String, tau: f64, n: usize, e: Error) -> ResultRow {
    ResultRow {
        scenario_id,
        tau,
        bounds: vec![Cell::Error(e.kind()); n],
        extras: Vec::new(),
        relative_purity_end: None,
        affinity_end: None,
        error: Some(e.to_string()),
    }
}

fn execute(cfg: &ExperimentConfig, file: Option<&ProtocolFile>) -> Result<RunOutput, CliError> {
    cfg.validate()?;
    let work = scenarios(cfg, file)?;
    let mut rows: Vec<ResultRow> = work
        .into_par_iter()
        .map(|(id, tau, sc)| match sc {
            Ok(sc) => evaluate_scenario(sc.id, &sc.rho0, &sc.protocol, sc.tau, cfg.steps, &cfg.bounds),
            Err(e) => failed_row(id, tau, cfg.bounds.len(), e),
        })
        .collect();
    let mut extra_columns = Vec::new();
    let with_ratio = cfg.experiment == Experiment::Fig1a
        && cfg.bounds.contains(&BoundSpec::TAA)
        && cfg.bounds.contains(&BoundSpec::TSTilde22);
    if with_ratio {
        extra_columns.push(FIG1A_RATIO_COLUMN.to_string());
        for row in &mut rows {
            let tilde = row.bound(&cfg.bounds, BoundSpec::TSTilde22).and_then(Cell::value);
            let aa = row.bound(&cfg.bounds, BoundSpec::TAA).and_then(Cell::value);
            row.extras.push(match (tilde, aa) {
                (Some(t), Some(a)) => Cell::Value(t / a),
                _ => Cell::Error("Unavailable"),
            });
        }
    }
    let ensemble = (cfg.experiment == Experiment::Fig1a).then_some(ENSEMBLE_TAG);
    Ok(RunOutput { config: cfg.clone(), extra_columns, rows, ensemble })
}

/// Random single-qubit Hamiltonians, static evolution of |0> for time τ.
pub fn run_fig1a(cfg: &ExperimentConfig) -> Result<RunOutput, CliError> {
    execute(&ExperimentConfig { experiment: Experiment::Fig1a, ..cfg.clone() }, None)
}

pub fn run_rqa_single(cfg: &ExperimentConfig) -> Result<RunOutput, CliError> {
    execute(&ExperimentConfig { experiment: Experiment::RqaSingle, ..cfg.clone() }, None)
}

pub fn run_rqa_two(cfg: &ExperimentConfig) -> Result<RunOutput, CliError> {
    execute(&ExperimentConfig { experiment: Experiment::RqaTwo, ..cfg.clone() }, None)
}

/// Evaluates the protocol file's bounds over its τ grid. Empty grid or bound
/// lists in `cfg` fall back to those in the file.
pub fn run_custom(cfg: &ExperimentConfig, file: &ProtocolFile) -> Result<RunOutput, CliError> {
    let mut cfg = ExperimentConfig { experiment: Experiment::Custom, ..cfg.clone() };
    if cfg.tau_grid.is_empty() {
        cfg.tau_grid = file.tau_grid.clone();
    }
    if cfg.bounds.is_empty() {
        cfg.bounds = file.bounds.clone();
    }
    execute(&cfg, Some(file))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_2;

    use qsl_core::linalg::{pauli, ComplexMatrix};

    use super::*;

    #[test]
    fn single_instance_is_valid() {
        let mut cfg = ExperimentConfig::defaults(Experiment::Fig1a);
        cfg.instances = 1;
        let out = run_fig1a(&cfg).unwrap();
        assert_eq!(out.rows.len(), 1);
        for cell in &out.rows[0].bounds {
            assert!(cell.value().unwrap() <= 1.0 + 1e-6);
        }
    }

    #[test]
    fn commuting_hamiltonian_is_flagged() {
        let rho0 = DensityMatrix::from_pure(&PureState::basis(2, 0).unwrap());
        let proto = Protocol::constant(ComplexMatrix::from_real_diag(&[0.3, -1.2])).unwrap();
        let row = evaluate_scenario("x".into(), &rho0, &proto, 1.0, 64, &[BoundSpec::TAA, BoundSpec::TSTilde22]);
        assert_eq!(row.bounds, vec![Cell::Error("DegenerateDenominator"); 2]);
        assert!(row.error.unwrap().contains("T_AA"));
    }

    #[test]
    fn mt_ml_needs_orthogonal_endpoint() {
        let plus = PureState::normalized(vec![qsl_core::C64::new(1.0, 0.0); 2]).unwrap();
        let rho0 = DensityMatrix::from_pure(&plus);
        let proto = Protocol::constant(pauli::z()).unwrap();
        let row = evaluate_scenario("x".into(), &rho0, &proto, FRAC_PI_2, 256, &[BoundSpec::TMTML]);
        assert!((row.bounds[0].value().unwrap() - FRAC_PI_2).abs() < 1e-9);
        let row = evaluate_scenario("x".into(), &rho0, &proto, 1.0, 256, &[BoundSpec::TMTML]);
        assert_eq!(row.bounds[0], Cell::Error("NotOrthogonal"));
    }

    #[test]
    fn mixed_state_errors_are_isolated() {
        let rho0 = DensityMatrix::new(ComplexMatrix::from_rows(&[
            vec![qsl_core::C64::new(0.6, 0.0), qsl_core::C64::new(0.2, 0.0)],
            vec![qsl_core::C64::new(0.2, 0.0), qsl_core::C64::new(0.4, 0.0)],
        ]).unwrap())
        .unwrap();
        let proto = Protocol::constant(pauli::z()).unwrap();
        let row = evaluate_scenario("x".into(), &rho0, &proto, 1.0, 64, &[BoundSpec::TAA, BoundSpec::TRP]);
        assert_eq!(row.bounds[0], Cell::Error("NotPure"));
        assert!(row.bounds[1].value().is_some());
    }
}
