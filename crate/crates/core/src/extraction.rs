//! Candidate mining, attribute mapping and the expert review workflow.
//!
//! Extraction runs in two stages so documents can be prepared in parallel:
//! [`prepare_document`] segments, tokenizes and filters one document, then
//! [`extract_prepared`] merges prepared documents in order and mines
//! candidates from the kept tokens.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::analyzer::CriterionKind;
use crate::error::ReviewError;
use crate::filters::{ExclusionReason, FilterConfig, FilterReport};
use crate::lexicon::{
    AttributeTag, EntrySource, EntryStatus, Lexicon, LexiconEntry, MatchMode, Phrase, PosDictionary, TagSet,
};
use crate::text::{Document, Segmenter, Sentence, Span, Token};

/// Phrases that map to a fixed tag, e.g. temporal words to `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleList {
    pub name: String,
    pub criterion: CriterionKind,
    entries: BTreeMap<String, AttributeTag>,
}

impl RuleList {
    pub fn new(name: impl Into<String>, criterion: CriterionKind) -> Self {
        Self {
            name: name.into(),
            criterion,
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, phrase: &Phrase, tag: AttributeTag) {
        self.entries.insert(phrase.key(), tag);
    }

    pub fn with<I: IntoIterator<Item = Phrase>>(mut self, tag: AttributeTag, phrases: I) -> Self {
        for p in phrases {
            self.insert(&p, tag);
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<AttributeTag> {
        self.entries.get(key).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, AttributeTag)> {
        self.entries.iter().map(|(k, t)| (k.as_str(), *t))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn max_phrase_len(&self) -> usize {
        self.entries.keys().map(|k| k.split(' ').count()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AttributeRules {
    pub lists: Vec<RuleList>,
}

impl AttributeRules {
    pub fn new(lists: Vec<RuleList>) -> Self {
        Self { lists }
    }

    pub fn tags_for(&self, key: &str) -> TagSet {
        self.lists.iter().filter_map(|l| l.get(key)).collect()
    }

    pub fn criteria_for(&self, key: &str) -> BTreeSet<CriterionKind> {
        self.lists
            .iter()
            .filter(|l| l.get(key).is_some())
            .map(|l| l.criterion)
            .collect()
    }

    pub fn contains(&self, key: &str) -> bool {
        self.lists.iter().any(|l| l.get(key).is_some())
    }

    pub fn max_phrase_len(&self) -> usize {
        self.lists.iter().map(RuleList::max_phrase_len).max().unwrap_or(0)
    }
}

/// Whether word types are de-duplicated before or after filtering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FilterOrder {
    /// Every token is filtered on its own.
    #[default]
    TokensFirst,
    /// The first occurrence of a normalized form decides for all of them.
    TypesFirst,
}

#[derive(Debug, Clone)]
pub struct ExtractConfig {
    pub sense_threshold: u32,
    pub filter_order: FilterOrder,
}

impl Default for ExtractConfig {
    fn default() -> Self {
        Self {
            sense_threshold: 2,
            filter_order: FilterOrder::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CandidateStatus {
    Pending,
    Accepted,
    Rejected,
}

impl CandidateStatus {
    pub const fn as_str(self) -> &'static str {
        match self {
            CandidateStatus::Pending => "pending",
            CandidateStatus::Accepted => "accepted",
            CandidateStatus::Rejected => "rejected",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pending" => Some(CandidateStatus::Pending),
            "accepted" => Some(CandidateStatus::Accepted),
            "rejected" => Some(CandidateStatus::Rejected),
            _ => None,
        }
    }
}

impl fmt::Display for CandidateStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Occurrence {
    pub document: String,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateWord {
    pub phrase: Phrase,
    pub occurrences: Vec<Occurrence>,
    pub suggested_tags: TagSet,
    pub criterion_hits: BTreeSet<CriterionKind>,
    pub status: CandidateStatus,
}

impl CandidateWord {
    /// No attribute could be suggested; the reviewer has to assign one.
    pub fn is_unmapped(&self) -> bool {
        self.suggested_tags.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreparedSentence {
    pub sentence: Sentence,
    pub tokens: Vec<Token>,
    pub reasons: Vec<Option<ExclusionReason>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreparedDocument {
    pub id: String,
    pub sentences: Vec<PreparedSentence>,
}

/// Segment, tokenize and filter one document.
pub fn prepare_document(doc: &Document, segmenter: &Segmenter, filters: &FilterConfig) -> PreparedDocument {
    let sentences = segmenter
        .tokenize_document(doc)
        .into_iter()
        .map(|(sentence, tokens)| {
            let reasons = tokens.iter().map(|t| filters.classify(t)).collect();
            PreparedSentence {
                sentence,
                tokens,
                reasons,
            }
        })
        .collect();
    PreparedDocument {
        id: doc.id().to_string(),
        sentences,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extraction {
    /// Sorted by phrase.
    pub candidates: Vec<CandidateWord>,
    pub filter_report: FilterReport,
}

/// Candidate mining over already prepared documents, in the given order.
pub fn extract_prepared(
    mut docs: Vec<PreparedDocument>,
    hints: &Lexicon,
    posdict: &PosDictionary,
    rules: &AttributeRules,
    cfg: &ExtractConfig,
) -> Extraction {
    if cfg.filter_order == FilterOrder::TypesFirst {
        let mut first: BTreeMap<String, Option<ExclusionReason>> = BTreeMap::new();
        for s in docs.iter_mut().flat_map(|d| d.sentences.iter_mut()) {
            for (t, r) in s.tokens.iter().zip(s.reasons.iter_mut()) {
                *r = *first.entry(t.normalized.clone()).or_insert(*r);
            }
        }
    }

    let mut report = FilterReport::default();
    let mut found: BTreeMap<String, CandidateWord> = BTreeMap::new();
    let max_len = hints.max_phrase_len().max(rules.max_phrase_len());

    for doc in &docs {
        for s in &doc.sentences {
            for (t, r) in s.tokens.iter().zip(&s.reasons) {
                report.record(t.clone(), *r);
            }
            let kept = |i: usize| s.reasons[i].is_none();

            // Multiword phrases: greedy longest-first over fully kept runs.
            let mut i = 0;
            while i < s.tokens.len() {
                let mut step = 1;
                for len in (2..=max_len.min(s.tokens.len() - i)).rev() {
                    if !(i..i + len).all(kept) {
                        continue;
                    }
                    let run = &s.tokens[i..i + len];
                    let key = run.iter().map(|t| t.normalized.as_str()).collect::<Vec<_>>().join(" ");
                    let mut hits = rules.criteria_for(&key);
                    if hint_entry(hints, &key).is_some() {
                        hits.insert(CriterionKind::AttributeMember);
                    }
                    if !hits.is_empty() {
                        let span = run[0].span.cover(run[len - 1].span);
                        add_occurrence(&mut found, &key, &doc.id, span, hits);
                        step = len;
                        break;
                    }
                }
                i += step;
            }

            for (idx, t) in s.tokens.iter().enumerate() {
                if !t.is_word() || !kept(idx) {
                    continue;
                }
                let hits = word_criteria(&t.normalized, hints, posdict, rules, cfg.sense_threshold);
                if !hits.is_empty() {
                    add_occurrence(&mut found, &t.normalized, &doc.id, t.span, hits);
                }
            }
        }
    }

    let candidates = found
        .into_values()
        .map(|mut c| {
            c.suggested_tags = map_candidate_attributes(&c, hints, posdict, rules);
            c.status = match hints.get(&c.phrase.key()).map(|e| e.status) {
                Some(EntryStatus::Verified) => CandidateStatus::Accepted,
                Some(EntryStatus::Rejected) => CandidateStatus::Rejected,
                _ => CandidateStatus::Pending,
            };
            c
        })
        .collect();

    Extraction {
        candidates,
        filter_report: report,
    }
}

/// Prepare and mine a whole corpus sequentially.
pub fn extract_candidates(
    corpus: &[Document],
    segmenter: &Segmenter,
    filters: &FilterConfig,
    hints: &Lexicon,
    posdict: &PosDictionary,
    rules: &AttributeRules,
    cfg: &ExtractConfig,
) -> Extraction {
    let prepared = corpus.iter().map(|d| prepare_document(d, segmenter, filters)).collect();
    extract_prepared(prepared, hints, posdict, rules, cfg)
}

fn hint_entry<'a>(hints: &'a Lexicon, key: &str) -> Option<&'a LexiconEntry> {
    hints.get(key).filter(|e| MatchMode::Pipeline.admits(e.status))
}

fn word_criteria(
    word: &str,
    hints: &Lexicon,
    posdict: &PosDictionary,
    rules: &AttributeRules,
    sense_threshold: u32,
) -> BTreeSet<CriterionKind> {
    let mut hits = rules.criteria_for(word);
    if let Some(info) = posdict.get(word) {
        if info.classes.len() >= 2 {
            hits.insert(CriterionKind::MultiPos);
        }
        if info.sense_count.is_some_and(|n| n >= sense_threshold) {
            hits.insert(CriterionKind::MultiSense);
        }
    }
    if hint_entry(hints, word).is_some() {
        hits.insert(CriterionKind::AttributeMember);
    }
    hits
}

fn add_occurrence(
    found: &mut BTreeMap<String, CandidateWord>,
    key: &str,
    document: &str,
    span: Span,
    hits: BTreeSet<CriterionKind>,
) {
    let c = found.entry(key.to_string()).or_insert_with(|| CandidateWord {
        phrase: Phrase::new(key.split(' ').map(String::from)).expect("token text forms a valid phrase"),
        occurrences: Vec::new(),
        suggested_tags: TagSet::new(),
        criterion_hits: BTreeSet::new(),
        status: CandidateStatus::Pending,
    });
    c.occurrences.push(Occurrence {
        document: document.to_string(),
        span,
    });
    c.criterion_hits.extend(hits);
}

/// Suggested tags: lexicon hint tags, CON sub-tags from the word's POS
/// classes, and rule-list tags. An empty result marks the candidate unmapped.
pub fn map_candidate_attributes(
    candidate: &CandidateWord,
    hints: &Lexicon,
    posdict: &PosDictionary,
    rules: &AttributeRules,
) -> TagSet {
    let key = candidate.phrase.key();
    let mut tags = rules.tags_for(&key);
    if let Some(e) = hint_entry(hints, &key) {
        tags.extend(e.tags.iter().copied());
    }
    if candidate.phrase.len() == 1 {
        if let Some(info) = posdict.get(&key) {
            tags.extend(
                info.classes
                    .iter()
                    .filter_map(|p| p.connective_sub())
                    .map(AttributeTag::with_sub),
            );
        }
    }
    tags
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

impl Verdict {
    pub const fn as_str(self) -> &'static str {
        match self {
            Verdict::Accept => "accept",
            Verdict::Reject => "reject",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "accept" => Some(Verdict::Accept),
            "reject" => Some(Verdict::Reject),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReviewDecision {
    pub phrase: String,
    pub verdict: Verdict,
    pub final_tags: TagSet,
    pub reviewer: String,
    /// ISO-8601.
    pub timestamp: String,
}

/// One applied decision as written to the audit log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRecord {
    pub decision: ReviewDecision,
    pub forced: bool,
}

/// Apply a review decision to the repository and candidate queue.
///
/// The phrase must be a lexicon entry or a queued candidate. Entries are
/// never removed. An entry or candidate that was already decided can only
/// be re-reviewed with `force`.
pub fn record_decision(
    lexicon: &mut Lexicon,
    queue: &mut [CandidateWord],
    decision: &ReviewDecision,
    force: bool,
) -> Result<AuditRecord, ReviewError> {
    let key = Phrase::parse(&decision.phrase)
        .map_err(|_| ReviewError::UnknownPhrase(decision.phrase.clone()))?
        .key();
    let entry_status = lexicon.get(&key).map(|e| e.status);
    let cand_idx = queue.iter().position(|c| c.phrase.key() == key);
    if entry_status.is_none() && cand_idx.is_none() {
        return Err(ReviewError::UnknownPhrase(decision.phrase.clone()));
    }
    if decision.verdict == Verdict::Accept && decision.final_tags.is_empty() {
        return Err(ReviewError::AcceptWithoutTags(key));
    }
    let reviewed = entry_status.is_some_and(|s| s != EntryStatus::Candidate)
        || cand_idx.is_some_and(|i| queue[i].status != CandidateStatus::Pending);
    if reviewed && !force {
        return Err(ReviewError::AlreadyReviewed(key));
    }

    let phrase = Phrase::parse(&key).expect("key is a valid phrase");
    match decision.verdict {
        Verdict::Accept => {
            if let Some(e) = lexicon.get_mut(&key) {
                e.status = EntryStatus::Verified;
                e.tags = decision.final_tags.clone();
            } else {
                let entry = LexiconEntry::new(
                    phrase,
                    decision.final_tags.clone(),
                    EntryStatus::Verified,
                    EntrySource::Extracted,
                );
                lexicon.insert(entry).expect("new non-empty entry");
            }
        }
        Verdict::Reject => {
            if let Some(e) = lexicon.get_mut(&key) {
                e.status = EntryStatus::Rejected;
            } else if let Some(c) = cand_idx.map(|i| &queue[i]).filter(|c| !c.suggested_tags.is_empty()) {
                let entry = LexiconEntry::new(
                    phrase,
                    c.suggested_tags.clone(),
                    EntryStatus::Rejected,
                    EntrySource::Extracted,
                );
                lexicon.insert(entry).expect("new non-empty entry");
            }
        }
    }
    if let Some(i) = cand_idx {
        queue[i].status = match decision.verdict {
            Verdict::Accept => CandidateStatus::Accepted,
            Verdict::Reject => CandidateStatus::Rejected,
        };
    }
    Ok(AuditRecord {
        decision: decision.clone(),
        forced: force,
    })
}

/// Re-apply an audit log to an initial repository and queue.
pub fn replay(lexicon: &mut Lexicon, queue: &mut [CandidateWord], log: &[AuditRecord]) -> Result<(), ReviewError> {
    for r in log {
        record_decision(lexicon, queue, &r.decision, r.forced)?;
    }
    Ok(())
}
