//! Linting documents against the verified lexicon and the criterion
//! heuristics.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::filters::FilterConfig;
use crate::lexicon::{
    longest_matches, run_span, Attribute, AttributeTag, Lexicon, MatchMode, Phrase, PosDictionary, SubAttribute, TagSet,
};
use crate::text::{Document, Segmenter, Sentence, Span, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CriterionKind {
    MultiPos,
    MultiSense,
    VaguePos,
    AttributeMember,
    DanglingElse,
    ReferentialSentence,
}

impl CriterionKind {
    pub const ALL: [CriterionKind; 6] = [
        CriterionKind::MultiPos,
        CriterionKind::MultiSense,
        CriterionKind::VaguePos,
        CriterionKind::AttributeMember,
        CriterionKind::DanglingElse,
        CriterionKind::ReferentialSentence,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            CriterionKind::MultiPos => "multi_pos",
            CriterionKind::MultiSense => "multi_sense",
            CriterionKind::VaguePos => "vague_pos",
            CriterionKind::AttributeMember => "attribute_member",
            CriterionKind::DanglingElse => "dangling_else",
            CriterionKind::ReferentialSentence => "referential_sentence",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        CriterionKind::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for CriterionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Warning,
    Info,
}

impl Severity {
    pub const fn as_str(self) -> &'static str {
        match self {
            Severity::Warning => "warning",
            Severity::Info => "info",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub document: String,
    pub sentence: usize,
    pub span: Span,
    pub matched: String,
    /// Lexicon phrase; empty for sentence-level findings.
    pub phrase: String,
    pub tags: TagSet,
    pub criterion: CriterionKind,
    pub severity: Severity,
}

impl Finding {
    fn sort_key(&self) -> (usize, usize, CriterionKind, &str, &TagSet) {
        (self.span.start, self.span.end, self.criterion, &self.phrase, &self.tags)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LintReport {
    pub findings: Vec<Finding>,
    /// Findings per top-level attribute (a finding counts once per attribute it carries).
    pub by_attribute: BTreeMap<Attribute, usize>,
    pub by_criterion: BTreeMap<CriterionKind, usize>,
}

impl LintReport {
    /// Build a report for one document, ordering findings by offset.
    pub fn from_findings(mut findings: Vec<Finding>) -> Self {
        findings.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut report = LintReport::default();
        for f in findings {
            report.push(f);
        }
        report
    }

    fn push(&mut self, finding: Finding) {
        for a in crate::lexicon::attributes_of(&finding.tags) {
            *self.by_attribute.entry(a).or_default() += 1;
        }
        *self.by_criterion.entry(finding.criterion).or_default() += 1;
        self.findings.push(finding);
    }

    /// Concatenate per-document reports in document order.
    pub fn concat<I: IntoIterator<Item = LintReport>>(reports: I) -> Self {
        let mut out = LintReport::default();
        for r in reports {
            for f in r.findings {
                out.push(f);
            }
        }
        out
    }

    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct LintConfig {
    /// Heuristic criteria only look at tokens these filters keep.
    pub filters: FilterConfig,
    pub multi_pos: bool,
    pub multi_sense: bool,
    pub sense_threshold: u32,
    pub dangling_else: bool,
    pub conditional_markers: Vec<Phrase>,
    pub alternative_markers: Vec<Phrase>,
    /// Several requirement modals in one sentence.
    pub multi_requirement: bool,
    pub requirement_markers: Vec<Phrase>,
    /// Words ending in an anaphoric clitic such as `-nya`.
    pub clitic_references: bool,
    pub clitic_suffixes: Vec<String>,
}

fn phrases(words: &[&str]) -> Vec<Phrase> {
    words.iter().filter_map(|w| Phrase::parse(w).ok()).collect()
}

pub const DEFAULT_CONDITIONAL_MARKERS: [&str; 3] = ["jika", "sekiranya", "apabila"];
pub const DEFAULT_ALTERNATIVE_MARKERS: [&str; 3] = ["jika tidak", "selainnya", "sebaliknya"];
pub const DEFAULT_REQUIREMENT_MARKERS: [&str; 5] = ["mesti", "perlu", "hendaklah", "harus", "wajib"];

impl Default for LintConfig {
    fn default() -> Self {
        Self {
            filters: FilterConfig::default(),
            multi_pos: true,
            multi_sense: true,
            sense_threshold: 2,
            dangling_else: true,
            conditional_markers: phrases(&DEFAULT_CONDITIONAL_MARKERS),
            alternative_markers: phrases(&DEFAULT_ALTERNATIVE_MARKERS),
            multi_requirement: false,
            requirement_markers: phrases(&DEFAULT_REQUIREMENT_MARKERS),
            clitic_references: false,
            clitic_suffixes: alloc::vec!["nya".to_string()],
        }
    }
}

/// CON sub-tags implied by a word's POS classes, or bare CON when none apply.
fn word_class_tags(classes: impl IntoIterator<Item = crate::lexicon::PosLabel>) -> TagSet {
    let mut tags: TagSet = classes
        .into_iter()
        .filter_map(|p| p.connective_sub())
        .map(AttributeTag::with_sub)
        .collect();
    if tags.is_empty() {
        tags.insert(AttributeTag::new(Attribute::Connectives));
    }
    tags
}

fn word_finding(doc: &Document, sentence: usize, token: &Token, tags: TagSet, criterion: CriterionKind) -> Finding {
    Finding {
        document: doc.id().to_string(),
        sentence,
        span: token.span,
        matched: token.surface.clone(),
        phrase: token.normalized.clone(),
        tags,
        criterion,
        severity: Severity::Info,
    }
}

/// Word listed with two or more POS classes.
pub fn check_multi_pos(doc: &Document, sentence: usize, token: &Token, posdict: &PosDictionary) -> Option<Finding> {
    let info = posdict.get(&token.normalized)?;
    (info.classes.len() >= 2).then(|| {
        word_finding(
            doc,
            sentence,
            token,
            word_class_tags(info.classes.iter().copied()),
            CriterionKind::MultiPos,
        )
    })
}

/// Word whose recorded sense count reaches `threshold`.
pub fn check_multi_sense(
    doc: &Document,
    sentence: usize,
    token: &Token,
    posdict: &PosDictionary,
    threshold: u32,
) -> Option<Finding> {
    let senses = posdict.get(&token.normalized)?.sense_count?;
    (senses >= threshold).then(|| {
        let mut tags = TagSet::new();
        tags.insert(AttributeTag::new(Attribute::Variable));
        word_finding(doc, sentence, token, tags, CriterionKind::MultiSense)
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Marker {
    Conditional,
    Alternative,
}

fn find_markers(tokens: &[Token], cfg: &LintConfig) -> Vec<(Span, Marker)> {
    let mut table: BTreeMap<String, Marker> = BTreeMap::new();
    for p in &cfg.conditional_markers {
        table.insert(p.key(), Marker::Conditional);
    }
    // Alternatives override a conditional with the same text.
    for p in &cfg.alternative_markers {
        table.insert(p.key(), Marker::Alternative);
    }
    let max_len = cfg
        .conditional_markers
        .iter()
        .chain(&cfg.alternative_markers)
        .map(Phrase::len)
        .max()
        .unwrap_or(0);
    longest_matches(tokens, max_len, |k| table.get(k).copied())
        .into_iter()
        .map(|(range, m)| (run_span(tokens, &range), m))
        .collect()
}

/// A conditional with no alternative branch in this sentence or the next.
///
/// The finding points at the first conditional marker.
pub fn check_dangling_else(
    doc: &Document,
    sentence: &Sentence,
    tokens: &[Token],
    next: Option<&[Token]>,
    cfg: &LintConfig,
) -> Option<Finding> {
    let here = find_markers(tokens, cfg);
    let (span, _) = *here.iter().find(|(_, m)| *m == Marker::Conditional)?;
    let has_alternative = |ms: &[(Span, Marker)]| ms.iter().any(|(_, m)| *m == Marker::Alternative);
    if has_alternative(&here) || next.is_some_and(|n| has_alternative(&find_markers(n, cfg))) {
        return None;
    }
    let mut tags = TagSet::new();
    tags.insert(AttributeTag::with_sub(SubAttribute::DanglingElse));
    Some(Finding {
        document: doc.id().to_string(),
        sentence: sentence.index,
        span,
        matched: doc.slice(span).to_string(),
        phrase: String::new(),
        tags,
        criterion: CriterionKind::DanglingElse,
        severity: Severity::Info,
    })
}

/// Two or more requirement modals in one sentence.
pub fn check_multi_requirement(
    doc: &Document,
    sentence: &Sentence,
    tokens: &[Token],
    cfg: &LintConfig,
) -> Option<Finding> {
    let table: BTreeMap<String, ()> = cfg.requirement_markers.iter().map(|p| (p.key(), ())).collect();
    let max_len = cfg.requirement_markers.iter().map(Phrase::len).max().unwrap_or(0);
    let hits = longest_matches(tokens, max_len, |k| table.get(k).copied());
    if hits.len() < 2 {
        return None;
    }
    let span = run_span(tokens, &hits[1].0);
    let mut tags = TagSet::new();
    tags.insert(AttributeTag::new(Attribute::Referential));
    Some(Finding {
        document: doc.id().to_string(),
        sentence: sentence.index,
        span,
        matched: doc.slice(span).to_string(),
        phrase: String::new(),
        tags,
        criterion: CriterionKind::ReferentialSentence,
        severity: Severity::Info,
    })
}

fn check_clitic(doc: &Document, sentence: usize, token: &Token, cfg: &LintConfig) -> Option<Finding> {
    let hit = cfg
        .clitic_suffixes
        .iter()
        .any(|s| token.normalized.len() > s.len() && token.normalized.ends_with(s.as_str()));
    hit.then(|| {
        let mut tags = TagSet::new();
        tags.insert(AttributeTag::new(Attribute::Referential));
        word_finding(doc, sentence, token, tags, CriterionKind::ReferentialSentence)
    })
}

/// Lint one document. Only verified lexicon entries participate.
pub fn lint_document(
    doc: &Document,
    segmenter: &Segmenter,
    lexicon: &Lexicon,
    posdict: &PosDictionary,
    cfg: &LintConfig,
) -> LintReport {
    let sentences = segmenter.tokenize_document(doc);
    let mut findings = Vec::new();
    for (i, (sentence, tokens)) in sentences.iter().enumerate() {
        for m in lexicon.match_entries(tokens, MatchMode::Lint) {
            findings.push(Finding {
                document: doc.id().to_string(),
                sentence: sentence.index,
                span: m.span,
                matched: doc.slice(m.span).to_string(),
                phrase: m.entry.phrase.key(),
                tags: m.entry.tags.clone(),
                criterion: CriterionKind::AttributeMember,
                severity: Severity::Warning,
            });
        }

        for token in tokens
            .iter()
            .filter(|t| t.is_word() && cfg.filters.classify(t).is_none())
        {
            if cfg.multi_pos {
                findings.extend(check_multi_pos(doc, sentence.index, token, posdict));
            }
            if cfg.multi_sense {
                findings.extend(check_multi_sense(
                    doc,
                    sentence.index,
                    token,
                    posdict,
                    cfg.sense_threshold,
                ));
            }
            if cfg.clitic_references {
                findings.extend(check_clitic(doc, sentence.index, token, cfg));
            }
        }

        if cfg.dangling_else {
            let next = sentences.get(i + 1).map(|(_, t)| t.as_slice());
            findings.extend(check_dangling_else(doc, sentence, tokens, next, cfg));
        }
        if cfg.multi_requirement {
            findings.extend(check_multi_requirement(doc, sentence, tokens, cfg));
        }
    }
    LintReport::from_findings(findings)
}
