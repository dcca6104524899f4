//! Extraction, review and lint working together on an in-memory corpus.

use kabur_core::{
    extract_candidates, lint_document, record_decision, Attribute, AttributeRules, AttributeTag, CandidateStatus,
    CriterionKind, Document, EntrySource, EntryStatus, ExtractConfig, FilterConfig, FilterOrder, Lexicon, LexiconEntry,
    LintConfig, Phrase, PosDictionary, PosLabel, ReviewDecision, RuleList, Segmenter, TagSet, Verdict, Wordlist,
};

fn corpus() -> Vec<Document> {
    vec![
        Document::new("a", "Sistem papar laporan segera. Pengguna papar data.").unwrap(),
        Document::new("b", "Laporan bulanan dijana oleh Ahmad dengan segera.").unwrap(),
    ]
}

fn rules() -> AttributeRules {
    AttributeRules::new(vec![
        RuleList::new("implicit", CriterionKind::VaguePos).with(
            AttributeTag::new(Attribute::Implicit),
            [Phrase::parse("segera").unwrap()],
        ),
        RuleList::new("temporal", CriterionKind::AttributeMember).with(
            AttributeTag::new(Attribute::Temporal),
            [Phrase::parse("bulanan").unwrap()],
        ),
    ])
}

fn posdict() -> PosDictionary {
    let mut p = PosDictionary::new();
    p.insert("papar", [PosLabel::Adj, PosLabel::Kk], None);
    p
}

fn filters() -> FilterConfig {
    FilterConfig {
        malay: Some(Wordlist::new([
            "sistem", "papar", "laporan", "segera", "pengguna", "data", "bulanan",
        ])),
        ..FilterConfig::default()
    }
}

#[test]
fn extract_review_lint() {
    let docs = corpus();
    let seg = Segmenter::default();
    let mut lexicon = Lexicon::new();
    let cfg = ExtractConfig::default();
    let ex = extract_candidates(&docs, &seg, &filters(), &lexicon, &posdict(), &rules(), &cfg);

    let keys: Vec<String> = ex.candidates.iter().map(|c| c.phrase.key()).collect();
    assert_eq!(keys, ["bulanan", "papar", "segera"]);
    let papar = &ex.candidates[1];
    assert_eq!(papar.occurrences.len(), 2);
    assert_eq!(
        papar.suggested_tags.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        ["CON.adjective", "CON.verb"]
    );
    assert_eq!(ex.filter_report.token_count(kabur_core::ExclusionReason::ProperNoun), 1);

    let mut queue = ex.candidates;
    for key in ["segera", "bulanan"] {
        let tags = queue
            .iter()
            .find(|c| c.phrase.key() == key)
            .unwrap()
            .suggested_tags
            .clone();
        let d = ReviewDecision {
            phrase: key.into(),
            verdict: Verdict::Accept,
            final_tags: tags,
            reviewer: "r".into(),
            timestamp: "2026-01-01T00:00:00Z".into(),
        };
        record_decision(&mut lexicon, &mut queue, &d, false).unwrap();
    }
    let reject = ReviewDecision {
        phrase: "papar".into(),
        verdict: Verdict::Reject,
        final_tags: TagSet::new(),
        reviewer: "r".into(),
        timestamp: "2026-01-01T00:00:00Z".into(),
    };
    record_decision(&mut lexicon, &mut queue, &reject, false).unwrap();
    assert_eq!(lexicon.get("papar").unwrap().status, EntryStatus::Rejected);
    assert!(queue.iter().all(|c| c.status != CandidateStatus::Pending));

    let lint_cfg = LintConfig {
        filters: filters(),
        multi_pos: false,
        ..LintConfig::default()
    };
    let matched: Vec<String> = docs
        .iter()
        .flat_map(|d| lint_document(d, &seg, &lexicon, &posdict(), &lint_cfg).findings)
        .map(|f| f.matched)
        .collect();
    assert_eq!(matched, ["segera", "bulanan", "segera"]);
}

#[test]
fn filter_orders_agree_without_sentence_initial_variation() {
    let docs = corpus();
    let seg = Segmenter::default();
    let lexicon = Lexicon::from_entries([LexiconEntry::new(
        Phrase::parse("laporan bulanan").unwrap(),
        [AttributeTag::new(Attribute::Temporal)].into(),
        EntryStatus::Candidate,
        EntrySource::User,
    )])
    .unwrap();
    let run = |order| {
        let cfg = ExtractConfig {
            filter_order: order,
            ..ExtractConfig::default()
        };
        extract_candidates(&docs, &seg, &filters(), &lexicon, &posdict(), &rules(), &cfg)
    };
    let tokens = run(FilterOrder::TokensFirst);
    let types = run(FilterOrder::TypesFirst);
    assert!(tokens.candidates.iter().any(|c| c.phrase.key() == "laporan bulanan"));
    assert_eq!(tokens.candidates, types.candidates);
}
