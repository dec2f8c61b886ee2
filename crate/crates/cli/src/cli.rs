//! Command-line surface.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args as ClapArgs, Parser, Subcommand};

use crate::config::{BoundSpec, Experiment, ExperimentConfig, Format};
use crate::error::CliError;
use crate::protocol_file::ProtocolFile;
use crate::report::{write_csv, write_json};
use crate::run::{run_custom, run_fig1a, run_rqa_single, run_rqa_two, RunOutput};

#[derive(Debug, Parser)]
#[command(name = "qsl", version, about = "Coherent quantum speed limit experiments")]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Random single-qubit Hamiltonians, static evolution from |0>.
    Fig1a(Common),
    /// Single-qubit reverse annealing from the ground state of H_i.
    RqaSingle(Common),
    /// Two-qubit reverse annealing from a mixed initial state.
    RqaTwo(Common),
    /// Bounds for a protocol described in a JSON file.
    Custom {
        /// Protocol file.
        protocol: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, ClapArgs)]
pub struct Common {
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random instances (fig1a).
    #[arg(long)]
    pub instances: Option<usize>,
    /// Transverse field strength in units of J.
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Comma-separated list of sweep times.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub tau: Option<Vec<f64>>,
    /// Integration steps per trajectory.
    #[arg(long)]
    pub steps: Option<usize>,
    /// Comma-separated bound columns, e.g. T_S_2_2,T_RP.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub bounds: Option<Vec<String>>,
    /// Output file (standard output when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

impl Common {
    /// Overlays the flags on an experiment's defaults.
    pub fn config(&self, experiment: Experiment) -> Result<ExperimentConfig, CliError> {
        let mut cfg = ExperimentConfig::defaults(experiment);
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        if let Some(n) = self.instances {
            cfg.instances = n;
        }
        if let Some(g) = self.gamma {
            cfg.gamma_over_j = g;
        }
        if let Some(t) = &self.tau {
            cfg.tau_grid = t.clone();
        }
        if let Some(s) = self.steps {
            cfg.steps = s;
        }
        if let Some(b) = &self.bounds {
            cfg.bounds = b.iter().map(|s| s.parse::<BoundSpec>()).collect::<Result<_, _>>()?;
        }
        cfg.output_path = self.out.clone();
        cfg.format = self.format;
        Ok(cfg)
    }
}

pub fn run(command: &Command) -> Result<RunOutput, CliError> {
    match command {
        Command::Fig1a(c) => run_fig1a(&c.config(Experiment::Fig1a)?),
        Command::RqaSingle(c) => run_rqa_single(&c.config(Experiment::RqaSingle)?),
        Command::RqaTwo(c) => run_rqa_two(&c.config(Experiment::RqaTwo)?),
        Command::Custom { protocol, common } => {
            let file = ProtocolFile::load(protocol)?;
            run_custom(&common.config(Experiment::Custom)?, &file)
        }
    }
}

pub fn write(out: &RunOutput) -> Result<(), CliError> {
    let sink: Box<dyn Write> = match &out.config.output_path {
        Some(path) => Box::new(File::create(path).map_err(|e| CliError::Write(format!("{}: {e}", path.display())))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    match out.config.format {
        Format::Csv => write_csv(out, &mut sink)?,
        Format::Json => write_json(out, &mut sink)?,
    }
    sink.flush().map_err(|e| CliError::Write(e.to_string()))
}

pub fn execute(args: &Args) -> Result<(), CliError> {
    write(&run(&args.command)?)
}
