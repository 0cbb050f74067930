use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank must be at least 3 (got {0})")]
    RankTooSmall(usize),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("letter '{0}' is outside rank {1}")]
    LetterOutOfRank(char, usize),

    #[error("cannot parse word: {0}")]
    WordParse(String),

    #[error("trivial conjugacy class")]
    TrivialClass,

    #[error("{0} is not primitive")]
    NotPrimitive(String),

    #[error("images do not form a free basis")]
    NotABasis,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph file error at {field}: {message}")]
    GraphFormat { field: String, message: String },

    #[error("loop {0} is not embedded")]
    NotEmbedded(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("zero step: consecutive orbit points coincide")]
    ZeroStep,

    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),

    #[error("sampler failure: {0}")]
    Sampler(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
