//! JSON protocol descriptions for the `custom` subcommand.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "kind": "static",
//!   "hamiltonian": [[1, 0], [0, 0], [0, 0], [-1, 0]],
//!   "initial": { "pure": [[0.7071067811865476, 0], [0.7071067811865476, 0]] },
//!   "tau_grid": [1.5707963267948966],
//!   "bounds": ["T_AA", "T_S_TILDE_2_2"]
//! }
//! ```
//!
//! Matrices are row-major lists of `[re, im]` pairs. An `rqa` protocol gives
//! `h_i`, `h_x` and `h_p` instead of `hamiltonian`. A mixed initial state is
//! a list of `[weight, k]` pairs, k indexing eigenstates of H_i (or of H for
//! static protocols) in ascending energy order.

use std::path::{Path, PathBuf};

use qsl_core::dynamics::{eigenstate_prep, Protocol};
use qsl_core::linalg::ComplexMatrix;
use qsl_core::states::{DensityMatrix, PureState};
use qsl_core::C64;
use serde::Deserialize;

use crate::config::BoundSpec;
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProtocolKindTag {
    Static,
    Rqa,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum InitialSpec {
    Pure(Vec<[f64; 2]>),
    Mixed(Vec<(f64, usize)>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    dim: usize,
    kind: ProtocolKindTag,
    hamiltonian: Option<Vec<[f64; 2]>>,
    h_i: Option<Vec<[f64; 2]>>,
    h_x: Option<Vec<[f64; 2]>>,
    h_p: Option<Vec<[f64; 2]>>,
    initial: InitialSpec,
    #[serde(default)]
    tau_grid: Vec<f64>,
    #[serde(default)]
    bounds: Vec<String>,
}

#[derive(Clone, Debug)]
enum Operators {
    Static(ComplexMatrix),
    Rqa { initial: ComplexMatrix, transverse: ComplexMatrix, target: ComplexMatrix },
}

/// A validated protocol file.
#[derive(Clone, Debug)]
pub struct ProtocolFile {
    dim: usize,
    operators: Operators,
    initial: InitialSpec,
    pub tau_grid: Vec<f64>,
    pub bounds: Vec<BoundSpec>,
}

impl ProtocolFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
        Self::parse(&text, path)
    }

    /// Parses `text`; `path` only labels diagnostics.
    pub fn parse(text: &str, path: &Path) -> Result<Self, CliError> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
            path: path.into(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let field_err = |field: &str, message: String| CliError::Field {
            path: PathBuf::from(path),
            field: field.into(),
            message,
        };
        if raw.dim == 0 {
            return Err(field_err("dim", "must be at least 1".into()));
        }
        let matrix = |field: &str, entries: &Option<Vec<[f64; 2]>>| -> Result<ComplexMatrix, CliError> {
            let entries = entries.as_ref().ok_or_else(|| field_err(field, "missing".into()))?;
            let data = entries.iter().map(|&[re, im]| C64::new(re, im)).collect();
            let m = ComplexMatrix::from_vec(raw.dim, data).map_err(|e| field_err(field, e.to_string()))?;
            m.ensure_hermitian().map_err(|e| field_err(field, e.to_string()))?;
            Ok(m)
        };
        let forbid = |field: &str, entries: &Option<Vec<[f64; 2]>>| -> Result<(), CliError> {
            match entries {
                Some(_) => Err(field_err(field, format!("not allowed for kind {:?}", raw.kind).to_lowercase())),
                None => Ok(()),
            }
        };
        let operators = match raw.kind {
            ProtocolKindTag::Static => {
                forbid("h_i", &raw.h_i)?;
                forbid("h_x", &raw.h_x)?;
                forbid("h_p", &raw.h_p)?;
                Operators::Static(matrix("hamiltonian", &raw.hamiltonian)?)
            }
            ProtocolKindTag::Rqa => {
                forbid("hamiltonian", &raw.hamiltonian)?;
                Operators::Rqa {
                    initial: matrix("h_i", &raw.h_i)?,
                    transverse: matrix("h_x", &raw.h_x)?,
                    target: matrix("h_p", &raw.h_p)?,
                }
            }
        };
        let bounds = raw
            .bounds
            .iter()
            .map(|b| b.parse::<BoundSpec>().map_err(|e| field_err("bounds", e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let file = Self { dim: raw.dim, operators, initial: raw.initial, tau_grid: raw.tau_grid, bounds };
        file.initial_state().map_err(|e| field_err("initial", e.to_string()))?;
        Ok(file)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_static(&self) -> bool {
        matches!(self.operators, Operators::Static(_))
    }

    /// Protocol whose sweep lasts `tau` (ignored for static protocols).
    pub fn protocol(&self, tau: f64) -> qsl_core::Result<Protocol> {
        match &self.operators {
            Operators::Static(h) => Protocol::constant(h.clone()),
            Operators::Rqa { initial, transverse, target } => {
                Protocol::reverse_anneal(initial.clone(), transverse.clone(), target.clone(), tau)
            }
        }
    }

    fn reference_hamiltonian(&self) -> &ComplexMatrix {
        match &self.operators {
            Operators::Static(h) => h,
            Operators::Rqa { initial, .. } => initial,
        }
    }

    pub fn initial_state(&self) -> qsl_core::Result<DensityMatrix> {
        match &self.initial {
            InitialSpec::Pure(amps) => {
                let amps: Vec<C64> = amps.iter().map(|&[re, im]| C64::new(re, im)).collect();
                if amps.len() != self.dim {
                    return Err(qsl_core::Error::DimMismatch { left: amps.len(), right: self.dim });
                }
                Ok(DensityMatrix::from_pure(&PureState::new(amps)?))
            }
            InitialSpec::Mixed(parts) => {
                let h = self.reference_hamiltonian();
                let components = parts
                    .iter()
                    .map(|&(w, k)| Ok((w, eigenstate_prep(h, k)?)))
                    .collect::<qsl_core::Result<Vec<(f64, PureState)>>>()?;
                DensityMatrix::mixture(&components)
            }
        }
    }
}
