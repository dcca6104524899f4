use std::path::PathBuf;

use kabur_core::{LexiconError, ReviewError, StatsError};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: not valid UTF-8", path.display())]
    NotUtf8 { path: PathBuf },
    #[error("{origin}:{line}: {message}")]
    Parse {
        origin: String,
        line: usize,
        message: String,
    },
    #[error("{origin}:{line}: {source}")]
    Lexicon {
        origin: String,
        line: usize,
        #[source]
        source: LexiconError,
    },
    #[error("config: {0}")]
    Config(String),
    #[error("no input documents in {}", .0.display())]
    NoDocuments(PathBuf),
    #[error("unknown phrase(s) in decisions: {}", .0.join(", "))]
    UnknownPhrases(Vec<String>),
    #[error(transparent)]
    Review(#[from] ReviewError),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(origin: &str, line: usize, message: impl ToString) -> Self {
        Error::Parse {
            origin: origin.to_string(),
            line,
            message: message.to_string(),
        }
    }

    pub(crate) fn lexicon(origin: &str, line: usize, source: LexiconError) -> Self {
        Error::Lexicon {
            origin: origin.to_string(),
            line,
            source,
        }
    }
}
