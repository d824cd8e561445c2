use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("required file missing: {0}")]
    MissingFile(PathBuf),

    #[error("unknown tracker source `{0}` (expected github or jira)")]
    UnknownSource(String),

    #[error("malformed {what} in {path}: {message}")]
    Malformed {
        what: &'static str,
        path: PathBuf,
        message: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degenerate model input: {0}")]
    Degenerate(String),

    #[error("insufficient data: {included} usable rows, at least {required} required")]
    InsufficientData { included: usize, required: usize },

    #[error("predictor {0} is not defined for the Poisson model")]
    UnsupportedPredictor(String),

    #[error("no fit named `{0}`")]
    MissingFit(String),

    #[error("empty corpus: no project directories under {0}")]
    EmptyCorpus(PathBuf),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
