//! Attribute taxonomy, lexicon entries, the part-of-speech dictionary and
//! greedy longest-match phrase lookup.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::error::LexiconError;
use crate::text::{normalize, Span, Token};

/// The six ambiguity attributes, in report column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Attribute {
    /// Implicit: generic, subjective, unbounded or unquantifiable.
    Implicit,
    /// Connectives: word-class driven vagueness and dangling conditions.
    Connectives,
    /// Temporal: unbounded timing or duration.
    Temporal,
    /// Referential: undefined or unnumbered references.
    Referential,
    /// Variable: common words that are too generic.
    Variable,
    /// Weakness: weak main verbs.
    Weakness,
}

impl Attribute {
    pub const ALL: [Attribute; 6] = [
        Attribute::Implicit,
        Attribute::Connectives,
        Attribute::Temporal,
        Attribute::Referential,
        Attribute::Variable,
        Attribute::Weakness,
    ];

    pub const fn code(self) -> &'static str {
        match self {
            Attribute::Implicit => "IMP",
            Attribute::Connectives => "CON",
            Attribute::Temporal => "T",
            Attribute::Referential => "REF",
            Attribute::Variable => "VAR",
            Attribute::Weakness => "WN",
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Attribute::Implicit => "Implicit",
            Attribute::Connectives => "Connectives",
            Attribute::Temporal => "Temporal",
            Attribute::Referential => "Referential",
            Attribute::Variable => "Variable",
            Attribute::Weakness => "Weakness",
        }
    }

    pub fn from_code(code: &str) -> Result<Self, LexiconError> {
        Attribute::ALL
            .into_iter()
            .find(|a| a.code() == code)
            .ok_or_else(|| LexiconError::UnknownAttribute(code.to_owned()))
    }
}

impl fmt::Display for Attribute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubAttribute {
    // Implicit
    General,
    Subjective,
    Boundary,
    Unquantifiable,
    // Connectives
    Adjective,
    Adverb,
    Verb,
    DanglingElse,
    Preposition,
}

impl SubAttribute {
    pub const fn name(self) -> &'static str {
        match self {
            SubAttribute::General => "general",
            SubAttribute::Subjective => "subjective",
            SubAttribute::Boundary => "boundary",
            SubAttribute::Unquantifiable => "unquantifiable",
            SubAttribute::Adjective => "adjective",
            SubAttribute::Adverb => "adverb",
            SubAttribute::Verb => "verb",
            SubAttribute::DanglingElse => "dangling_else",
            SubAttribute::Preposition => "preposition",
        }
    }

    /// The attribute this sub-attribute refines.
    pub const fn parent(self) -> Attribute {
        match self {
            SubAttribute::General
            | SubAttribute::Subjective
            | SubAttribute::Boundary
            | SubAttribute::Unquantifiable => Attribute::Implicit,
            SubAttribute::Adjective
            | SubAttribute::Adverb
            | SubAttribute::Verb
            | SubAttribute::DanglingElse
            | SubAttribute::Preposition => Attribute::Connectives,
        }
    }

    const ALL: [SubAttribute; 9] = [
        SubAttribute::General,
        SubAttribute::Subjective,
        SubAttribute::Boundary,
        SubAttribute::Unquantifiable,
        SubAttribute::Adjective,
        SubAttribute::Adverb,
        SubAttribute::Verb,
        SubAttribute::DanglingElse,
        SubAttribute::Preposition,
    ];
}

/// An attribute, optionally refined by one of its sub-attributes.
///
/// Written as `ATTR` or `ATTR.sub`, e.g. `IMP.general`, `CON.preposition`, `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttributeTag {
    attribute: Attribute,
    sub: Option<SubAttribute>,
}

pub type TagSet = BTreeSet<AttributeTag>;

impl AttributeTag {
    pub const fn new(attribute: Attribute) -> Self {
        Self { attribute, sub: None }
    }

    pub const fn with_sub(sub: SubAttribute) -> Self {
        Self {
            attribute: sub.parent(),
            sub: Some(sub),
        }
    }

    pub const fn attribute(&self) -> Attribute {
        self.attribute
    }

    pub const fn sub(&self) -> Option<SubAttribute> {
        self.sub
    }
}

impl From<Attribute> for AttributeTag {
    fn from(a: Attribute) -> Self {
        AttributeTag::new(a)
    }
}

impl From<SubAttribute> for AttributeTag {
    fn from(s: SubAttribute) -> Self {
        AttributeTag::with_sub(s)
    }
}

impl fmt::Display for AttributeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sub {
            Some(sub) => write!(f, "{}.{}", self.attribute.code(), sub.name()),
            None => f.write_str(self.attribute.code()),
        }
    }
}

impl FromStr for AttributeTag {
    type Err = LexiconError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (code, sub) = match s.split_once('.') {
            Some((code, sub)) => (code, Some(sub)),
            None => (s, None),
        };
        let attribute = Attribute::from_code(code)?;
        let Some(sub) = sub else {
            return Ok(AttributeTag::new(attribute));
        };
        SubAttribute::ALL
            .into_iter()
            .find(|c| c.name() == sub && c.parent() == attribute)
            .map(AttributeTag::with_sub)
            .ok_or_else(|| LexiconError::UnknownSubAttribute {
                attribute: code.to_owned(),
                sub: sub.to_owned(),
            })
    }
}

/// Top-level attributes carried by a tag set, sub-attributes collapsed.
pub fn attributes_of(tags: &TagSet) -> BTreeSet<Attribute> {
    tags.iter().map(AttributeTag::attribute).collect()
}

/// Comma-separated tag list, e.g. `CON.adjective,IMP`.
pub fn format_tags(tags: &TagSet) -> String {
    let mut out = String::new();
    for (i, t) in tags.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&t.to_string());
    }
    out
}

/// Part-of-speech labels. `kt` is carried as an opaque label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PosLabel {
    /// kata nama (noun)
    Kn,
    /// kata kerja (verb)
    Kk,
    Adj,
    Kt,
    Other,
}

impl PosLabel {
    pub const ALL: [PosLabel; 5] = [PosLabel::Kn, PosLabel::Kk, PosLabel::Adj, PosLabel::Kt, PosLabel::Other];

    pub const fn as_str(self) -> &'static str {
        match self {
            PosLabel::Kn => "kn",
            PosLabel::Kk => "kk",
            PosLabel::Adj => "adj",
            PosLabel::Kt => "kt",
            PosLabel::Other => "other",
        }
    }

    /// Connectives sub-attribute implied by this word class, if any.
    pub const fn connective_sub(self) -> Option<SubAttribute> {
        match self {
            PosLabel::Adj => Some(SubAttribute::Adjective),
            PosLabel::Kk => Some(SubAttribute::Verb),
            _ => None,
        }
    }
}

impl fmt::Display for PosLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PosLabel {
    type Err = LexiconError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = normalize(s.trim());
        PosLabel::ALL
            .into_iter()
            .find(|p| p.as_str() == lower)
            .ok_or_else(|| LexiconError::UnknownPos(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntryStatus {
    Candidate,
    Verified,
    Rejected,
}

impl EntryStatus {
    pub const fn as_str(self) -> &'static str {
        match self {
            EntryStatus::Candidate => "candidate",
            EntryStatus::Verified => "verified",
            EntryStatus::Rejected => "rejected",
        }
    }
}

impl FromStr for EntryStatus {
    type Err = LexiconError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "candidate" => Ok(EntryStatus::Candidate),
            "verified" => Ok(EntryStatus::Verified),
            "rejected" => Ok(EntryStatus::Rejected),
            _ => Err(LexiconError::UnknownStatus(s.to_owned())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntrySource {
    PaperSeed,
    Extracted,
    User,
}

impl EntrySource {
    pub const fn as_str(self) -> &'static str {
        match self {
            EntrySource::PaperSeed => "paper_seed",
            EntrySource::Extracted => "extracted",
            EntrySource::User => "user",
        }
    }
}

impl FromStr for EntrySource {
    type Err = LexiconError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper_seed" => Ok(EntrySource::PaperSeed),
            "extracted" => Ok(EntrySource::Extracted),
            "user" => Ok(EntrySource::User),
            _ => Err(LexiconError::UnknownSource(s.to_owned())),
        }
    }
}

/// A normalized word or multiword phrase.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Phrase(Vec<String>);

impl Phrase {
    pub fn new<I, S>(tokens: I) -> Result<Self, LexiconError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.is_empty() {
            return Err(LexiconError::EmptyPhrase);
        }
        for t in &tokens {
            if t.is_empty() || t.chars().any(char::is_whitespace) || normalize(t) != *t {
                return Err(LexiconError::InvalidPhraseToken(t.clone()));
            }
        }
        Ok(Self(tokens))
    }

    /// Split free text on whitespace and case-fold.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        Phrase::new(text.split_whitespace().map(normalize))
    }

    pub fn tokens(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Tokens joined by single spaces; the identity used for lookup and ordering.
    pub fn key(&self) -> String {
        self.0.join(" ")
    }
}

impl fmt::Display for Phrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    pub phrase: Phrase,
    pub pos_classes: BTreeSet<PosLabel>,
    pub sense_count: Option<u32>,
    pub tags: TagSet,
    pub status: EntryStatus,
    pub note: Option<String>,
    pub source: EntrySource,
}

impl LexiconEntry {
    pub fn new(phrase: Phrase, tags: TagSet, status: EntryStatus, source: EntrySource) -> Self {
        Self {
            phrase,
            pos_classes: BTreeSet::new(),
            sense_count: None,
            tags,
            status,
            note: None,
            source,
        }
    }

    pub fn validate(&self) -> Result<(), LexiconError> {
        if self.tags.is_empty() {
            return Err(LexiconError::EmptyTags(self.phrase.key()));
        }
        Ok(())
    }
}

/// Which entry statuses take part in matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchMode {
    /// Verified entries only.
    Lint,
    /// Candidate and verified entries.
    Pipeline,
}

impl MatchMode {
    pub const fn admits(self, status: EntryStatus) -> bool {
        match self {
            MatchMode::Lint => matches!(status, EntryStatus::Verified),
            MatchMode::Pipeline => matches!(status, EntryStatus::Verified | EntryStatus::Candidate),
        }
    }
}

/// One lexicon hit over a token run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconMatch<'a> {
    /// Indices into the token slice.
    pub tokens: Range<usize>,
    pub span: Span,
    pub entry: &'a LexiconEntry,
}

/// Entries keyed by phrase.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<String, LexiconEntry>,
    max_phrase_len: usize,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I>(entries: I) -> Result<Self, LexiconError>
    where
        I: IntoIterator<Item = LexiconEntry>,
    {
        let mut lex = Lexicon::new();
        for e in entries {
            lex.insert(e)?;
        }
        Ok(lex)
    }

    /// Add a new entry. Fails on duplicates and invalid entries.
    pub fn insert(&mut self, entry: LexiconEntry) -> Result<(), LexiconError> {
        entry.validate()?;
        let key = entry.phrase.key();
        if self.entries.contains_key(&key) {
            return Err(LexiconError::DuplicatePhrase(key));
        }
        self.max_phrase_len = self.max_phrase_len.max(entry.phrase.len());
        self.entries.insert(key, entry);
        Ok(())
    }

    /// Add or replace an entry.
    pub fn upsert(&mut self, entry: LexiconEntry) -> Result<(), LexiconError> {
        entry.validate()?;
        self.max_phrase_len = self.max_phrase_len.max(entry.phrase.len());
        self.entries.insert(entry.phrase.key(), entry);
        Ok(())
    }

    /// Case-insensitive lookup by phrase text.
    pub fn get(&self, phrase: &str) -> Option<&LexiconEntry> {
        self.entries.get(&lookup_key(phrase))
    }

    pub(crate) fn get_mut(&mut self, phrase: &str) -> Option<&mut LexiconEntry> {
        self.entries.get_mut(&lookup_key(phrase))
    }

    pub fn contains(&self, phrase: &str) -> bool {
        self.get(phrase).is_some()
    }

    /// Entries in phrase order.
    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_phrase_len(&self) -> usize {
        self.max_phrase_len
    }

    /// Greedy longest-match-first, left to right, over normalized token text.
    pub fn match_entries<'a>(&'a self, tokens: &[Token], mode: MatchMode) -> Vec<LexiconMatch<'a>> {
        longest_matches(tokens, self.max_phrase_len, |key| {
            self.entries.get(key).filter(|e| mode.admits(e.status))
        })
        .into_iter()
        .map(|(range, entry)| LexiconMatch {
            span: run_span(tokens, &range),
            tokens: range,
            entry,
        })
        .collect()
    }
}

fn lookup_key(phrase: &str) -> String {
    let mut key = String::with_capacity(phrase.len());
    for (i, w) in phrase.split_whitespace().enumerate() {
        if i > 0 {
            key.push(' ');
        }
        key.push_str(&normalize(w));
    }
    key
}

/// Span covering a non-empty run of tokens.
pub fn run_span(tokens: &[Token], range: &Range<usize>) -> Span {
    tokens[range.start].span.cover(tokens[range.end - 1].span)
}

/// Greedy longest-first scan. At each position tries runs of `max_len`
/// tokens down to one; `lookup` receives the space-joined normalized run.
pub fn longest_matches<T>(
    tokens: &[Token],
    max_len: usize,
    mut lookup: impl FnMut(&str) -> Option<T>,
) -> Vec<(Range<usize>, T)> {
    let mut out = Vec::new();
    let mut i = 0;
    let mut key = String::new();
    while i < tokens.len() {
        let longest = max_len.min(tokens.len() - i);
        let mut hit = None;
        for len in (1..=longest).rev() {
            key.clear();
            for (j, t) in tokens[i..i + len].iter().enumerate() {
                if j > 0 {
                    key.push(' ');
                }
                key.push_str(&t.normalized);
            }
            if let Some(v) = lookup(&key) {
                hit = Some((len, v));
                break;
            }
        }
        match hit {
            Some((len, v)) => {
                out.push((i..i + len, v));
                i += len;
            }
            None => i += 1,
        }
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PosInfo {
    pub classes: BTreeSet<PosLabel>,
    pub sense_count: Option<u32>,
}

/// Word → part-of-speech classes and optional sense count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PosDictionary {
    words: BTreeMap<String, PosInfo>,
}

impl PosDictionary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record classes for a word, merging with any earlier record. A later
    /// sense count replaces an earlier one.
    pub fn insert<I>(&mut self, word: &str, classes: I, sense_count: Option<u32>)
    where
        I: IntoIterator<Item = PosLabel>,
    {
        let info = self.words.entry(normalize(word)).or_default();
        info.classes.extend(classes);
        if sense_count.is_some() {
            info.sense_count = sense_count;
        }
    }

    pub fn get(&self, word: &str) -> Option<&PosInfo> {
        self.words.get(&normalize(word))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &PosInfo)> {
        self.words.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{Document, Segmenter};
    use alloc::vec;

    fn entry(phrase: &str, tags: &[&str], status: EntryStatus) -> LexiconEntry {
        LexiconEntry::new(
            Phrase::parse(phrase).unwrap(),
            tags.iter().map(|t| t.parse().unwrap()).collect(),
            status,
            EntrySource::User,
        )
    }

    fn tokens(text: &str) -> Vec<Token> {
        let doc = Document::new("t", text).unwrap();
        Segmenter::default()
            .tokenize_document(&doc)
            .into_iter()
            .flat_map(|(_, t)| t)
            .collect()
    }

    #[test]
    fn tag_grammar() {
        for s in [
            "IMP",
            "IMP.general",
            "CON.dangling_else",
            "CON.preposition",
            "T",
            "REF",
            "VAR",
            "WN",
        ] {
            let tag: AttributeTag = s.parse().unwrap();
            assert_eq!(tag.to_string(), s);
        }
        assert_eq!(
            "XYZ".parse::<AttributeTag>(),
            Err(LexiconError::UnknownAttribute("XYZ".into()))
        );
        assert!(matches!(
            "IMP.adverb".parse::<AttributeTag>(),
            Err(LexiconError::UnknownSubAttribute { .. })
        ));
        assert!(matches!(
            "T.general".parse::<AttributeTag>(),
            Err(LexiconError::UnknownSubAttribute { .. })
        ));
    }

    #[test]
    fn tags_sort_in_column_order() {
        let tags: TagSet = ["WN", "T", "CON.verb", "IMP"]
            .iter()
            .map(|t| t.parse().unwrap())
            .collect();
        assert_eq!(format_tags(&tags), "IMP,CON.verb,T,WN");
    }

    #[test]
    fn pos_labels() {
        assert_eq!("ADJ".parse::<PosLabel>(), Ok(PosLabel::Adj));
        assert_eq!("kt".parse::<PosLabel>(), Ok(PosLabel::Kt));
        assert!("noun".parse::<PosLabel>().is_err());
    }

    #[test]
    fn phrase_validation() {
        assert!(Phrase::new(["Segera"]).is_err());
        assert!(Phrase::new(["secepat mungkin"]).is_err());
        assert!(Phrase::new(Vec::<String>::new()).is_err());
        assert!(Phrase::new(["rekod-rekod"]).is_ok());
        assert_eq!(Phrase::parse("Data  Itu").unwrap().key(), "data itu");
    }

    #[test]
    fn duplicate_and_untagged_rejected() {
        let mut lex = Lexicon::new();
        lex.insert(entry("segera", &["IMP"], EntryStatus::Verified)).unwrap();
        assert_eq!(
            lex.insert(entry("segera", &["T"], EntryStatus::Verified)),
            Err(LexiconError::DuplicatePhrase("segera".into()))
        );
        assert!(matches!(
            lex.insert(entry("kosong", &[], EntryStatus::Verified)),
            Err(LexiconError::EmptyTags(_))
        ));
        assert!(lex.get("SEGERA").is_some());
    }

    #[test]
    fn multiword_match() {
        let lex = Lexicon::from_entries([entry("secepat mungkin", &["IMP"], EntryStatus::Verified)]).unwrap();
        let toks = tokens("secepat mungkin");
        let m = lex.match_entries(&toks, MatchMode::Lint);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].tokens, 0..2);
        assert_eq!(m[0].span, Span::new(0, 15));
    }

    #[test]
    fn longest_wins() {
        let lex = Lexicon::from_entries([
            entry("data", &["VAR"], EntryStatus::Verified),
            entry("data itu", &["VAR"], EntryStatus::Verified),
        ])
        .unwrap();
        let toks = tokens("data itu");
        let m = lex.match_entries(&toks, MatchMode::Lint);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].entry.phrase.key(), "data itu");
    }

    #[test]
    fn empty_lexicon_matches_nothing() {
        assert!(Lexicon::new()
            .match_entries(&tokens("apa sahaja"), MatchMode::Pipeline)
            .is_empty());
    }

    #[test]
    fn modes_filter_status() {
        let lex = Lexicon::from_entries([
            entry("a", &["IMP"], EntryStatus::Verified),
            entry("b", &["IMP"], EntryStatus::Candidate),
            entry("c", &["IMP"], EntryStatus::Rejected),
        ])
        .unwrap();
        let toks = tokens("a b c");
        let keys = |mode| {
            lex.match_entries(&toks, mode)
                .iter()
                .map(|m| m.entry.phrase.key())
                .collect::<Vec<_>>()
        };
        assert_eq!(keys(MatchMode::Lint), vec!["a"]);
        assert_eq!(keys(MatchMode::Pipeline), vec!["a", "b"]);
    }

    #[test]
    fn matching_is_case_insensitive_and_stops_at_symbols() {
        let lex = Lexicon::from_entries([entry("secepat mungkin", &["IMP"], EntryStatus::Verified)]).unwrap();
        assert_eq!(lex.match_entries(&tokens("SECEPAT Mungkin"), MatchMode::Lint).len(), 1);
        assert!(lex
            .match_entries(&tokens("secepat, mungkin"), MatchMode::Lint)
            .is_empty());
    }

    #[test]
    fn pos_dictionary_merges() {
        let mut d = PosDictionary::new();
        d.insert("Papar", [PosLabel::Adj], None);
        d.insert("papar", [PosLabel::Kk], Some(2));
        let info = d.get("PAPAR").unwrap();
        assert_eq!(info.classes.len(), 2);
        assert_eq!(info.sense_count, Some(2));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        const WORDS: [&str; 5] = ["a", "b", "c", "d", "e"];

        fn phrase_strategy() -> impl Strategy<Value = String> {
            proptest::collection::vec(0..WORDS.len(), 1..4)
                .prop_map(|ix| ix.into_iter().map(|i| WORDS[i]).collect::<Vec<_>>().join(" "))
        }

        proptest! {
            #[test]
            fn superset_never_shortens_match(
                text in proptest::collection::vec(0..WORDS.len(), 0..20),
                base in proptest::collection::btree_set(phrase_strategy(), 0..6),
                extra in proptest::collection::btree_set(phrase_strategy(), 0..6),
            ) {
                let text = text.into_iter().map(|i| WORDS[i]).collect::<Vec<_>>().join(" ");
                let toks = tokens(&text);
                let small = Lexicon::from_entries(base.iter().map(|p| entry(p, &["IMP"], EntryStatus::Verified))).unwrap();
                let big = Lexicon::from_entries(base.union(&extra).map(|p| entry(p, &["IMP"], EntryStatus::Verified))).unwrap();
                let small_m = small.match_entries(&toks, MatchMode::Lint);
                let big_m = big.match_entries(&toks, MatchMode::Lint);
                for s in &small_m {
                    if let Some(b) = big_m.iter().find(|b| b.tokens.start == s.tokens.start) {
                        prop_assert!(b.tokens.len() >= s.tokens.len());
                    }
                }
                // Matches never overlap and come in order.
                for w in big_m.windows(2) {
                    prop_assert!(w[0].tokens.end <= w[1].tokens.start);
                }
            }
        }
    }
}
