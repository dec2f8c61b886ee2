use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |H - H^dagger| = {deviation:e})")]
    NonHermitian { deviation: f64 },
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("Schatten exponent must satisfy p >= 1, got {0}")]
    InvalidP(f64),
    #[error("matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("{what} = {value} is outside the admissible range")]
    OutOfRange { what: &'static str, value: f64 },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("optimizer failed to reach tolerance after {restarts} restarts (spread {spread:e})")]
    OptimizerFailure { restarts: usize, spread: f64 },
    #[error("trajectory validation failed at step {step}: {reason}")]
    ValidationFailure { step: usize, reason: String },
    #[error("exponents are not conjugate: 1/{p} + 1/{q} != 1")]
    ConjugateMismatch { p: f64, q: f64 },
    #[error("bound denominator {value:e} is degenerate (state does not evolve or is incoherent)")]
    DegenerateDenominator { value: f64 },
    #[error("initial state is not pure (purity {purity})")]
    NotPure { purity: f64 },
    #[error("bound requires a time-independent Hamiltonian")]
    NotStatic,
    #[error("final state is not orthogonal to the initial state (fidelity {fidelity:e})")]
    NotOrthogonal { fidelity: f64 },
}

impl Error {
    /// Short variant name, used as an error marker in tabular output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonHermitian { .. } => "NonHermitian",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::InvalidP(_) => "InvalidP",
            Error::NotPsd { .. } => "NotPSD",
            Error::DimMismatch { .. } => "DimMismatch",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::InvalidState(_) => "InvalidState",
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::OptimizerFailure { .. } => "OptimizerFailure",
            Error::ValidationFailure { .. } => "ValidationFailure",
            Error::ConjugateMismatch { .. } => "ConjugateMismatch",
            Error::DegenerateDenominator { .. } => "DegenerateDenominator",
            Error::NotPure { .. } => "NotPure",
            Error::NotStatic => "NotStatic",
            Error::NotOrthogonal { .. } => "NotOrthogonal",
        }
    }
}
