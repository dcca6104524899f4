//! Detection of potentially ambiguous Malay words in requirement text.
//!
//! The crate is `no_std` and needs only `alloc`. It covers segmentation and
//! tokenization ([`text`]), the attribute-tagged lexicon and longest-match
//! lookup ([`lexicon`]), candidate exclusion ([`filters`]), linting
//! ([`analyzer`]), candidate mining and expert review ([`extraction`]) and
//! attribute statistics ([`stats`]). File formats and IO live in the `kabur`
//! crate.

#![no_std]

extern crate alloc;

pub mod analyzer;
pub mod error;
pub mod extraction;
pub mod filters;
pub mod lexicon;
pub mod stats;
pub mod text;

pub use analyzer::{lint_document, CriterionKind, Finding, LintConfig, LintReport, Severity};
pub use error::{LexiconError, ReviewError, StatsError, TextError};
pub use extraction::{
    extract_candidates, map_candidate_attributes, record_decision, AttributeRules, CandidateStatus, CandidateWord,
    ExtractConfig, FilterOrder, ReviewDecision, RuleList, Verdict,
};
pub use filters::{apply_filters, ExclusionReason, FilterConfig, FilterReport, Wordlist};
pub use lexicon::{
    Attribute, AttributeTag, EntrySource, EntryStatus, Lexicon, LexiconEntry, MatchMode, Phrase, PosDictionary,
    PosLabel, SubAttribute, TagSet,
};
pub use stats::{compute_attribute_stats, render_table, CorpusStats, Scope, TableFormat};
pub use text::{detect_reduplication, Document, Segmenter, Sentence, Span, Token, TokenKind};
