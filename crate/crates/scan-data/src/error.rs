use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("ungrammatical command: {0}")]
    UngrammaticalCommand(String),

    #[error("unknown command word: {0:?}")]
    UnknownCommandWord(String),

    #[error("unknown action name: {0:?}")]
    UnknownActionName(String),

    #[error("degenerate split: {0}")]
    DegenerateSplit(String),

    #[error("train fraction must be in (0, 1), got {0}")]
    InvalidTrainFraction(f64),

    #[error("malformed corpus line {line}: {reason}")]
    CorpusFormat { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
