//! Seed data compiled into the binary and the `init` materializer.

use std::fs;
use std::path::{Path, PathBuf};

use kabur_core::{Attribute, AttributeTag, EntrySource, EntryStatus, Lexicon, LexiconEntry, Phrase, TagSet};

use crate::error::{Error, Result};
use crate::lexfile::render_lexicon;

pub const LEXICON: &str = include_str!("../seed/lexicon.jsonl");
pub const POSDICT: &str = include_str!("../seed/posdict.tsv");
pub const ENGLISH: &str = include_str!("../seed/english.txt");
pub const MALAY: &str = include_str!("../seed/malay.txt");
pub const ABBREVIATIONS: &str = include_str!("../seed/abbreviations.txt");
pub const RULES_IMPLICIT: &str = include_str!("../seed/rules/implicit.txt");
pub const RULES_CONNECTIVES: &str = include_str!("../seed/rules/connectives.txt");
pub const RULES_TEMPORAL: &str = include_str!("../seed/rules/temporal.txt");
pub const RULES_REFERENTIAL: &str = include_str!("../seed/rules/referential.txt");
pub const RULES_VARIABLE: &str = include_str!("../seed/rules/variable.txt");
pub const RULES_WEAKNESS: &str = include_str!("../seed/rules/weakness.txt");

/// Attribute totals of the published 120-word mapping.
pub const TABLE3_COUNTS: [(Attribute, usize); 6] = [
    (Attribute::Implicit, 51),
    (Attribute::Connectives, 41),
    (Attribute::Temporal, 11),
    (Attribute::Referential, 27),
    (Attribute::Variable, 22),
    (Attribute::Weakness, 21),
];
pub const TABLE3_WORDS: usize = 120;

/// Synthetic lexicon with the published attribute totals.
///
/// Tag slots are dealt round-robin: each attribute takes the next `count`
/// entries, wrapping at the end. No attribute exceeds the number of entries,
/// so no entry receives the same attribute twice, and since the slots (173)
/// outnumber the entries every entry gets at least one tag.
pub fn table3_fixture() -> Lexicon {
    table3_like(TABLE3_WORDS, &TABLE3_COUNTS)
}

pub fn table3_like(words: usize, counts: &[(Attribute, usize)]) -> Lexicon {
    let mut tags = vec![TagSet::new(); words];
    let mut cursor = 0;
    for &(attribute, count) in counts {
        assert!(count <= words, "{attribute} count exceeds word count");
        for _ in 0..count {
            tags[cursor % words].insert(AttributeTag::new(attribute));
            cursor += 1;
        }
    }
    let mut lex = Lexicon::new();
    for (i, t) in tags.into_iter().enumerate() {
        let mut e = LexiconEntry::new(
            Phrase::new([format!("kata{:03}", i + 1)]).expect("valid phrase"),
            t,
            EntryStatus::Verified,
            EntrySource::User,
        );
        e.note = Some("synthetic".to_owned());
        lex.insert(e)
            .expect("every fixture entry has a tag and a unique phrase");
    }
    lex
}

pub const CONFIG_FILE: &str = "kabur.toml";

/// The configuration written by `init`, with every key at its default.
pub const DEFAULT_CONFIG: &str = include_str!("../seed/kabur.toml");

/// Files written by `init`, relative to the target directory.
pub fn files() -> Vec<(&'static str, String)> {
    vec![
        (CONFIG_FILE, DEFAULT_CONFIG.to_owned()),
        ("lexicon.jsonl", LEXICON.to_owned()),
        ("posdict.tsv", POSDICT.to_owned()),
        ("english.txt", ENGLISH.to_owned()),
        ("malay.txt", MALAY.to_owned()),
        ("abbreviations.txt", ABBREVIATIONS.to_owned()),
        ("rules/implicit.txt", RULES_IMPLICIT.to_owned()),
        ("rules/connectives.txt", RULES_CONNECTIVES.to_owned()),
        ("rules/temporal.txt", RULES_TEMPORAL.to_owned()),
        ("rules/referential.txt", RULES_REFERENTIAL.to_owned()),
        ("rules/variable.txt", RULES_VARIABLE.to_owned()),
        ("rules/weakness.txt", RULES_WEAKNESS.to_owned()),
        ("table3.jsonl", render_lexicon(&table3_fixture())),
    ]
}

/// Write the seed files into `dir`. Existing files are kept unless `force`.
pub fn init(dir: &Path, force: bool) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for (rel, contents) in files() {
        let path = dir.join(rel);
        if path.exists() && !force {
            return Err(Error::Config(format!(
                "{} already exists (use --force to overwrite)",
                path.display()
            )));
        }
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
        fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}
