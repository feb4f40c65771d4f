use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("operator is not Hermitian (anti-Hermitian residue {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {dim} does not factor as {left} x {right}")]
    BadFactorization { dim: usize, left: usize, right: usize },

    #[error("channel has no Kraus operators")]
    EmptyChannel,

    #[error(
        "channel '{label}' is not CPTP (completeness residual {completeness_residual:.3e}, \
         Choi minimum eigenvalue {choi_min_eig:.3e})"
    )]
    NotCptp {
        label: String,
        completeness_residual: f64,
        choi_min_eig: f64,
    },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("outcome is impossible (probability {probability:.3e})")]
    OutcomeImpossible { probability: f64 },

    #[error("invalid measurement model: {0}")]
    InvalidModel(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("malformed channel spec: {0}")]
    Spec(String),
}

impl Error {
    /// True for failures of physical validity (as opposed to malformed input).
    pub fn is_physics(&self) -> bool {
        matches!(
            self,
            Error::NotCptp { .. }
                | Error::InvalidState(_)
                | Error::NotHermitian { .. }
                | Error::OutcomeImpossible { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
