//! Sentence segmentation and tokenization with byte-accurate spans.
//!
//! Tokens are words (anything containing a letter), numbers (digits but no
//! letters) or symbols (runs of punctuation). Hyphen-joined words such as
//! `rekod-rekod` stay a single token, and a trailing period is glued onto a
//! word only when the word is a configured abbreviation, so `dll.` never
//! ends a sentence.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::TextError;

/// A requirement document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    id: String,
    text: String,
    source_path: Option<String>,
}

impl Document {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Result<Self, TextError> {
        let id = id.into();
        if id.is_empty() {
            return Err(TextError::EmptyDocumentId);
        }
        Ok(Self {
            id,
            text: text.into(),
            source_path: None,
        })
    }

    pub fn with_source_path(mut self, path: impl Into<String>) -> Self {
        self.source_path = Some(path.into());
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn source_path(&self) -> Option<&str> {
        self.source_path.as_deref()
    }

    /// Text covered by `span`.
    pub fn slice(&self, span: Span) -> &str {
        &self.text[span.start..span.end]
    }
}

/// Half-open byte range `[start, end)` into a document's text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub const fn new(start: usize, end: usize) -> Self {
        Self { start, end }
    }

    pub const fn len(&self) -> usize {
        self.end - self.start
    }

    pub const fn is_empty(&self) -> bool {
        self.start >= self.end
    }

    pub const fn contains(&self, other: Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    /// Smallest span covering both.
    pub fn cover(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sentence {
    pub span: Span,
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TokenKind {
    Word,
    Symbol,
    Number,
}

impl TokenKind {
    pub const fn as_str(self) -> &'static str {
        match self {
            TokenKind::Word => "word",
            TokenKind::Symbol => "symbol",
            TokenKind::Number => "number",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub span: Span,
    pub surface: String,
    pub normalized: String,
    pub kind: TokenKind,
    /// First word of its sentence. Drives the capitalization heuristic for
    /// proper nouns.
    pub sentence_initial: bool,
}

impl Token {
    pub fn is_word(&self) -> bool {
        self.kind == TokenKind::Word
    }
}

/// Case folding used everywhere a token or phrase is compared.
pub fn normalize(s: &str) -> String {
    s.to_lowercase()
}

/// Abbreviations whose trailing period belongs to the word.
///
/// Entries are stored without the trailing period and case-folded, so
/// `"dll."`, `"DLL"` and `"dll"` name the same abbreviation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Abbreviations {
    stems: BTreeSet<String>,
}

impl Abbreviations {
    pub const DEFAULT: [&'static str; 3] = ["dll.", "dsb.", "spt."];

    pub fn new<I, S>(entries: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let stems = entries
            .into_iter()
            .filter_map(|e| {
                let stem = normalize(e.as_ref().trim()).trim_end_matches('.').to_string();
                (!stem.is_empty()).then_some(stem)
            })
            .collect();
        Self { stems }
    }

    pub fn contains(&self, word: &str) -> bool {
        let stem = normalize(word);
        self.stems.contains(stem.trim_end_matches('.'))
    }

    pub fn len(&self) -> usize {
        self.stems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stems.is_empty()
    }
}

impl Default for Segmenter {
    fn default() -> Self {
        Self::new(Abbreviations::new(Abbreviations::DEFAULT))
    }
}

/// Sentence splitter and tokenizer configured with an abbreviation list.
#[derive(Debug, Clone)]
pub struct Segmenter {
    abbreviations: Abbreviations,
}

impl Segmenter {
    pub fn new(abbreviations: Abbreviations) -> Self {
        Self { abbreviations }
    }

    pub fn abbreviations(&self) -> &Abbreviations {
        &self.abbreviations
    }

    /// Split a document into sentences.
    ///
    /// A sentence ends after a symbol token containing `.`, `?` or `!`, or
    /// before a token separated from its predecessor by a blank line.
    pub fn segment_sentences(&self, doc: &Document) -> Vec<Sentence> {
        let text = doc.text();
        let mut sentences = Vec::new();
        let mut current: Option<Span> = None;
        let mut prev_end = 0;
        for raw in self.scan(text, 0) {
            if let Some(span) = current {
                if has_blank_line(&text[prev_end..raw.span.start]) {
                    push_sentence(&mut sentences, span);
                    current = None;
                }
            }
            let span = match current {
                Some(span) => span.cover(raw.span),
                None => raw.span,
            };
            prev_end = raw.span.end;
            if raw.kind == TokenKind::Symbol && is_terminator(&text[raw.span.start..raw.span.end]) {
                push_sentence(&mut sentences, span);
                current = None;
            } else {
                current = Some(span);
            }
        }
        if let Some(span) = current {
            push_sentence(&mut sentences, span);
        }
        sentences
    }

    /// Tokenize one sentence of `doc`.
    pub fn tokenize(&self, doc: &Document, sentence: &Sentence) -> Vec<Token> {
        let text = doc.text();
        let slice = &text[sentence.span.start..sentence.span.end];
        let mut seen_word = false;
        self.scan(slice, sentence.span.start)
            .into_iter()
            .map(|raw| {
                let surface = text[raw.span.start..raw.span.end].to_string();
                let sentence_initial = raw.kind == TokenKind::Word && !seen_word;
                seen_word |= raw.kind == TokenKind::Word;
                Token {
                    span: raw.span,
                    normalized: normalize(&surface),
                    surface,
                    kind: raw.kind,
                    sentence_initial,
                }
            })
            .collect()
    }

    /// Segment and tokenize a whole document, one token list per sentence.
    pub fn tokenize_document(&self, doc: &Document) -> Vec<(Sentence, Vec<Token>)> {
        self.segment_sentences(doc)
            .into_iter()
            .map(|s| {
                let tokens = self.tokenize(doc, &s);
                (s, tokens)
            })
            .collect()
    }

    fn scan(&self, text: &str, offset: usize) -> Vec<RawToken> {
        let mut out = Vec::new();
        let mut chars = text.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            let end = if c.is_alphanumeric() {
                let mut end = scan_word(text, start);
                if text[end..].starts_with('.') && self.abbreviations.contains(&text[start..end]) {
                    end += 1;
                }
                end
            } else {
                text[start..]
                    .char_indices()
                    .find(|&(_, ch)| ch.is_whitespace() || ch.is_alphanumeric())
                    .map_or(text.len(), |(i, _)| start + i)
            };
            while chars.peek().is_some_and(|&(i, _)| i < end) {
                chars.next();
            }
            out.push(RawToken {
                span: Span::new(offset + start, offset + end),
                kind: classify(&text[start..end]),
            });
        }
        out
    }
}

struct RawToken {
    span: Span,
    kind: TokenKind,
}

/// End of the word starting at `start`: alphanumerics, with `-`, `.`, `'`
/// allowed when sandwiched between alphanumerics.
fn scan_word(text: &str, start: usize) -> usize {
    let mut end = start;
    let mut iter = text[start..].char_indices().peekable();
    while let Some((i, c)) = iter.next() {
        if c.is_alphanumeric() {
            end = start + i + c.len_utf8();
        } else if matches!(c, '-' | '.' | '\'') {
            match iter.peek() {
                Some(&(_, next)) if next.is_alphanumeric() => {}
                _ => break,
            }
        } else {
            break;
        }
    }
    end
}

fn classify(surface: &str) -> TokenKind {
    if surface.chars().any(char::is_alphabetic) {
        TokenKind::Word
    } else if surface.chars().any(char::is_numeric) {
        TokenKind::Number
    } else {
        TokenKind::Symbol
    }
}

fn is_terminator(symbol: &str) -> bool {
    symbol.contains(['.', '?', '!'])
}

fn has_blank_line(gap: &str) -> bool {
    gap.matches('\n').count() >= 2
}

fn push_sentence(sentences: &mut Vec<Sentence>, span: Span) {
    let index = sentences.len();
    sentences.push(Sentence { span, index });
}

/// `X-X` with identical, non-empty, purely alphabetic halves.
pub fn detect_reduplication(token: &Token) -> bool {
    let mut parts = token.normalized.split('-');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(left), Some(right), None) => !left.is_empty() && left == right && left.chars().all(char::is_alphabetic),
        _ => false,
    }
}
