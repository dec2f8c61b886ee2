//! Time-dependent protocols and unitary propagation of ρ and √ρ.

mod propagate;
mod protocol;
mod random;

pub use propagate::{propagate, propagate_with, Integrator, PropagateOptions, Trajectory, DEFAULT_STEPS};
pub use protocol::{rqa_schedules, Protocol, ProtocolKind};
pub use random::{eigenstate_prep, haar_random_hamiltonian, instance_seed, ENSEMBLE_TAG};
