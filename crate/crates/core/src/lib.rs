//! Coherent quantum speed limits for small closed quantum systems.
//!
//! The crate evolves density matrices under (possibly time-dependent)
//! Hamiltonians and evaluates speed-limit bounds along the resulting
//! trajectories: the Schatten-norm and Hellinger/affinity coherent families
//! together with the Anandan-Aharonov, relative-purity, Wigner-Yanase and
//! Mandelstam-Tamm/Margolus-Levitin baselines.

pub mod bounds;
pub mod coherence;
pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod optim;
pub mod quadrature;
pub mod states;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
