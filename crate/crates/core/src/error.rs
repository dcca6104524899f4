use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("document id must not be empty")]
    EmptyDocumentId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("unknown sub-attribute `{sub}` for attribute {attribute}")]
    UnknownSubAttribute { attribute: String, sub: String },
    #[error("unknown part-of-speech label `{0}`")]
    UnknownPos(String),
    #[error("unknown status `{0}`")]
    UnknownStatus(String),
    #[error("unknown source `{0}`")]
    UnknownSource(String),
    #[error("invalid phrase token `{0}`: tokens must be non-empty, lower-case and free of whitespace")]
    InvalidPhraseToken(String),
    #[error("phrase must contain at least one token")]
    EmptyPhrase,
    #[error("entry `{0}` has no attribute tags")]
    EmptyTags(String),
    #[error("duplicate phrase `{0}`")]
    DuplicatePhrase(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReviewError {
    #[error("unknown phrase `{0}`: not in the repository or the candidate queue")]
    UnknownPhrase(String),
    #[error("accepting `{0}` requires at least one attribute tag")]
    AcceptWithoutTags(String),
    #[error("`{0}` has already been reviewed; re-review requires force")]
    AlreadyReviewed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("no entries in scope")]
    EmptyScope,
}
