use thiserror::Error;

use crate::simplicial::SimplexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),

    #[error("unknown simplex {0}")]
    UnknownSimplex(SimplexId),

    #[error("source/target mismatch: {0}")]
    Mismatch(String),

    #[error("not a simplicial map: {0}")]
    InvalidMap(String),

    #[error("invalid simplicial set: {0}")]
    InvalidSet(String),

    #[error("cocone does not commute: {0}")]
    CoconeMismatch(String),

    #[error("stage map {stage} is not injective on nondegenerate simplices")]
    NonInjectiveStage { stage: usize },

    #[error("attachment {index} of stage {stage}: {reason}")]
    BadAttachment { stage: usize, index: usize, reason: String },

    #[error("presentation mixes I- and J-attachments")]
    MixedPresentation,

    #[error("lift transfer failed: {0}")]
    LiftTransfer(String),

    #[error("stage {stage} has no lift")]
    StageUnsolvable { stage: usize },

    #[error("summand {index} has no lift")]
    MissingSummandLift { index: usize },

    #[error("retract diagram invalid: {0}")]
    InvalidRetract(String),

    #[error("factorization functoriality refused: {0}")]
    Functoriality(String),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }
}
