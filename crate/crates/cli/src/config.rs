use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_SEED: u64 = 20_220_101;
pub const DEFAULT_INSTANCES: usize = 500;
pub const DEFAULT_STEPS: usize = qsl_core::dynamics::DEFAULT_STEPS;
pub const MIN_STEPS: usize = 64;
/// τJ values for the annealing sweeps (J = 1).
pub const RQA_GRID: [f64; 9] = [1.0, 2.0, 3.0, 5.0, 8.0, 12.0, 20.0, 30.0, 50.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    Fig1a,
    RqaSingle,
    RqaTwo,
    Custom,
}

impl Experiment {
    pub fn name(self) -> &'static str {
        match self {
            Experiment::Fig1a => "fig1a",
            Experiment::RqaSingle => "rqa-single",
            Experiment::RqaTwo => "rqa-two",
            Experiment::Custom => "custom",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// A bound column the CLI knows how to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundSpec {
    TS22,
    TS1Inf,
    TSPure22,
    TSPure1Inf,
    TSTilde22,
    TSTilde1Inf,
    TH22General,
    TH1Inf,
    TH22,
    TAA,
    TRP,
    TRPPure,
    TWY,
    TMTML,
}

impl BoundSpec {
    pub const ALL: [BoundSpec; 14] = [
        BoundSpec::TS22,
        BoundSpec::TS1Inf,
        BoundSpec::TSPure22,
        BoundSpec::TSPure1Inf,
        BoundSpec::TSTilde22,
        BoundSpec::TSTilde1Inf,
        BoundSpec::TH22General,
        BoundSpec::TH1Inf,
        BoundSpec::TH22,
        BoundSpec::TAA,
        BoundSpec::TRP,
        BoundSpec::TRPPure,
        BoundSpec::TWY,
        BoundSpec::TMTML,
    ];

    pub fn column(self) -> &'static str {
        match self {
            BoundSpec::TS22 => "T_S_2_2",
            BoundSpec::TS1Inf => "T_S_1_inf",
            BoundSpec::TSPure22 => "T_S_PURE_2_2",
            BoundSpec::TSPure1Inf => "T_S_PURE_1_inf",
            BoundSpec::TSTilde22 => "T_S_TILDE_2_2",
            BoundSpec::TSTilde1Inf => "T_S_TILDE_1_inf",
            BoundSpec::TH22General => "T_H_2_2",
            BoundSpec::TH1Inf => "T_H_1_inf",
            BoundSpec::TH22 => "T_H_22",
            BoundSpec::TAA => "T_AA",
            BoundSpec::TRP => "T_RP",
            BoundSpec::TRPPure => "T_RP_PURE",
            BoundSpec::TWY => "T_WY",
            BoundSpec::TMTML => "T_MTML",
        }
    }
}

impl fmt::Display for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.column())
    }
}

impl FromStr for BoundSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        BoundSpec::ALL.into_iter().find(|b| b.column() == s).ok_or_else(|| {
            let known: Vec<&str> = BoundSpec::ALL.iter().map(|b| b.column()).collect();
            CliError::Config(format!("unknown bound `{s}` (expected one of {})", known.join(", ")))
        })
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub seed: u64,
    /// Number of random Hamiltonians (fig1a only).
    pub instances: usize,
    /// Transverse field Γ in units of J.
    pub gamma_over_j: f64,
    pub tau_grid: Vec<f64>,
    pub steps: usize,
    pub bounds: Vec<BoundSpec>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl ExperimentConfig {
    /// Defaults for an experiment as used in the paper's figures.
    pub fn defaults(experiment: Experiment) -> Self {
        let (tau_grid, gamma, bounds) = match experiment {
            Experiment::Fig1a => (vec![1.0], 1.0, vec![BoundSpec::TAA, BoundSpec::TSTilde22]),
            Experiment::RqaSingle => (RQA_GRID.to_vec(), 0.5, vec![BoundSpec::TSPure22, BoundSpec::TRPPure]),
            Experiment::RqaTwo => (
                RQA_GRID.to_vec(),
                1.0,
                vec![BoundSpec::TS22, BoundSpec::TRP, BoundSpec::TH22, BoundSpec::TWY],
            ),
            Experiment::Custom => (Vec::new(), 1.0, Vec::new()),
        };
        Self {
            experiment,
            seed: DEFAULT_SEED,
            instances: DEFAULT_INSTANCES,
            gamma_over_j: gamma,
            tau_grid,
            steps: DEFAULT_STEPS,
            bounds,
            output_path: None,
            format: Format::Csv,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.tau_grid.is_empty() {
            return Err(CliError::Config("tau grid is empty".into()));
        }
        if let Some(bad) = self.tau_grid.iter().find(|t| !(t.is_finite() && **t > 0.0)) {
            return Err(CliError::Config(format!("tau values must be positive and finite, got {bad}")));
        }
        if self.tau_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(CliError::Config("tau grid must be strictly increasing".into()));
        }
        if self.instances == 0 {
            return Err(CliError::Config("instances must be at least 1".into()));
        }
        if self.steps < MIN_STEPS {
            return Err(CliError::Config(format!("steps must be at least {MIN_STEPS}, got {}", self.steps)));
        }
        if !(self.gamma_over_j.is_finite() && self.gamma_over_j >= 0.0) {
            return Err(CliError::Config(format!("gamma must be finite and non-negative, got {}", self.gamma_over_j)));
        }
        if self.bounds.is_empty() {
            return Err(CliError::Config("no bounds requested".into()));
        }
        for (i, b) in self.bounds.iter().enumerate() {
            if self.bounds[..i].contains(b) {
                return Err(CliError::Config(format!("bound {b} requested twice")));
            }
        }
        Ok(())
    }
}
