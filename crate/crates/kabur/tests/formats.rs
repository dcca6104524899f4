use kabur::lexfile::{parse_lexicon, render_lexicon};
use kabur::queue::{parse_queue, render_queue};
use kabur::report::line_col;
use kabur_core::extraction::Occurrence;
use kabur_core::{
    Attribute, AttributeTag, CandidateStatus, CandidateWord, CriterionKind, EntrySource, EntryStatus, Lexicon,
    LexiconEntry, Phrase, Span, TagSet,
};
use proptest::prelude::*;

fn phrase() -> impl Strategy<Value = Phrase> {
    prop::collection::vec("[a-z]{1,8}(-[a-z]{1,4})?", 1..4).prop_map(|t| Phrase::new(t).unwrap())
}

fn tags() -> impl Strategy<Value = TagSet> {
    prop::collection::btree_set(0..Attribute::ALL.len(), 0..4)
        .prop_map(|ix| ix.into_iter().map(|i| AttributeTag::new(Attribute::ALL[i])).collect())
}

fn candidate() -> impl Strategy<Value = CandidateWord> {
    (
        phrase(),
        tags(),
        0..3usize,
        prop::collection::vec(("[a-z]{1,6}\\.txt", 0..500usize, 1..20usize), 1..4),
    )
        .prop_map(|(phrase, suggested_tags, status, occ)| CandidateWord {
            phrase,
            suggested_tags,
            criterion_hits: [CriterionKind::MultiSense, CriterionKind::AttributeMember].into(),
            status: [
                CandidateStatus::Pending,
                CandidateStatus::Accepted,
                CandidateStatus::Rejected,
            ][status],
            occurrences: occ
                .into_iter()
                .map(|(document, start, len)| Occurrence {
                    document,
                    span: Span::new(start, start + len),
                })
                .collect(),
        })
}

proptest! {
    #[test]
    fn queue_round_trips(mut queue in prop::collection::vec(candidate(), 0..12)) {
        queue.sort_by_key(|c| c.phrase.key());
        queue.dedup_by_key(|c| c.phrase.key());
        let text = render_queue(&queue);
        let back = parse_queue(&text, "q").unwrap();
        prop_assert_eq!(&back, &queue);
        prop_assert_eq!(render_queue(&back), text);
    }

    #[test]
    fn lexicon_round_trips(entries in prop::collection::vec((phrase(), tags()), 0..20)) {
        let mut lex = Lexicon::new();
        for (p, mut t) in entries {
            t.insert(AttributeTag::new(Attribute::Weakness));
            let _ = lex.insert(LexiconEntry::new(p, t, EntryStatus::Candidate, EntrySource::Extracted));
        }
        let text = render_lexicon(&lex);
        prop_assert_eq!(parse_lexicon(&text, "l").unwrap(), lex);
    }

    #[test]
    fn line_col_locates_offsets(lines in prop::collection::vec("[a-zé ]{0,10}", 1..6), pick in any::<prop::sample::Index>()) {
        let text = lines.join("\n");
        let offsets: Vec<usize> = text.char_indices().map(|(i, _)| i).collect();
        prop_assume!(!offsets.is_empty());
        let offset = offsets[pick.index(offsets.len())];
        let (line, col) = line_col(&text, offset);
        let row = text.split('\n').nth(line - 1).unwrap();
        let row_start = text.split('\n').take(line - 1).map(|l| l.len() + 1).sum::<usize>();
        prop_assert_eq!(row[..offset - row_start].chars().count() + 1, col);
    }
}
