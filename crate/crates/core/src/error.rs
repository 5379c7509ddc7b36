use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{cells} DP cells exceed the oracle cap of {cap}")]
    CellCapExceeded { cells: u128, cap: u64 },

    #[error("code 0 is reserved for the single sentinel, found another at position {position}")]
    MisplacedSentinel { position: usize },

    #[error("shared boundary mismatch: {0}")]
    SeamMismatch(String),

    #[error("matrix dimensions do not agree: {0}")]
    DimensionMismatch(String),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("{algo} reported k = {got}, the DP oracle says {expected}")]
    VerificationMismatch {
        algo: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{algo} returned different answers across repetitions ({first} vs {other})")]
    UnstableResult {
        algo: &'static str,
        first: usize,
        other: usize,
    },

    #[error("invalid generator parameters: {0}")]
    InvalidGenSpec(String),

    #[error("alphabet of {0} symbols does not fit in a byte alphabet")]
    AlphabetTooLarge(usize),

    #[error("invalid option: {0}")]
    InvalidOption(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

impl Error {
    /// Process exit status for the command-line tool: 2 for a failed
    /// verification, 3 for an exceeded resource cap, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::VerificationMismatch { .. } | Error::UnstableResult { .. } => 2,
            Error::CellCapExceeded { .. } => 3,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
