use thiserror::Error;

use crate::report::{AxiomReport, Witness};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("zero denominator{}", .offset.map(|o| format!(" at byte {o}")).unwrap_or_default())]
    ZeroDenominator { offset: Option<usize> },

    #[error("division by zero scalar `{0}`")]
    DivisionByZero(String),

    #[error("denominator vanishes at a = {0}")]
    Pole(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix (rank {rank} of {size})")]
    SingularMatrix { rank: usize, size: usize },

    #[error("antipode is not invertible (rank {rank} of {size})")]
    SingularAntipode { rank: usize, size: usize },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a group algebra: {0}")]
    NotAGroupAlgebra(String),

    #[error("vector is not group-like: {0}")]
    NotGroupLike(String),

    #[error("bilinear form is not convolution-invertible")]
    NotConvolutionInvertible,

    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),

    #[error("verification failed for {}: {}", .0.subject, .0.failed_names().join(", "))]
    VerificationFailed(Box<AxiomReport>),

    #[error("inverse check failed: {0}")]
    InverseCheckFailed(String),

    #[error("{map} is not intertwined: {witness}")]
    IntertwinerFailure { map: String, witness: Witness },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by malformed input rather than a mathematical
    /// outcome; the CLI maps these to exit code 2.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::VerificationFailed(_)
                | Error::PreconditionNotMet(_)
                | Error::NotConvolutionInvertible
                | Error::SingularAntipode { .. }
                | Error::SingularMatrix { .. }
                | Error::NotGroupLike(_)
                | Error::InverseCheckFailed(_)
                | Error::IntertwinerFailure { .. }
                | Error::InternalInconsistency(_)
        )
    }
}
