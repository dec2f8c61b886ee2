//! Batch experiments for coherent quantum speed limits: the random-qubit
//! comparison, the two reverse-annealing sweeps and user-supplied protocols,
//! written out as CSV or JSON.

pub mod cli;
pub mod config;
pub mod error;
pub mod protocol_file;
pub mod report;
pub mod run;

pub use config::{BoundSpec, Experiment, ExperimentConfig, Format};
pub use error::CliError;
pub use run::{Cell, ResultRow, RunOutput};
