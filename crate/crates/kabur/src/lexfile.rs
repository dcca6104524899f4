//! Lexicon and POS dictionary files.
//!
//! A lexicon file holds one JSON record per line:
//!
//! ```text
//! {"phrase":["secepat","mungkin"],"pos":[],"tags":["IMP"],"status":"verified","source":"paper_seed"}
//! ```
//!
//! `senses` and `note` are optional. Records are written in phrase order, so
//! saving the same lexicon always yields the same bytes.
//!
//! A POS dictionary file has one `word<TAB>pos,pos[<TAB>senses]` line per word.

use std::path::Path;

use kabur_core::{EntrySource, EntryStatus, Lexicon, LexiconEntry, LexiconError, Phrase, PosDictionary, PosLabel};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fsutil::{read_text, write_atomic};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryRecord {
    phrase: Vec<String>,
    #[serde(default)]
    pos: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    senses: Option<u32>,
    tags: Vec<String>,
    status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    source: String,
}

impl EntryRecord {
    fn from_entry(e: &LexiconEntry) -> Self {
        Self {
            phrase: e.phrase.tokens().to_vec(),
            pos: e.pos_classes.iter().map(|p| p.as_str().to_owned()).collect(),
            senses: e.sense_count,
            tags: e.tags.iter().map(ToString::to_string).collect(),
            status: e.status.as_str().to_owned(),
            note: e.note.clone(),
            source: e.source.as_str().to_owned(),
        }
    }

    fn into_entry(self) -> Result<LexiconEntry, LexiconError> {
        Ok(LexiconEntry {
            phrase: Phrase::new(self.phrase)?,
            pos_classes: self.pos.iter().map(|p| p.parse()).collect::<Result<_, _>>()?,
            sense_count: self.senses,
            tags: self.tags.iter().map(|t| t.parse()).collect::<Result<_, _>>()?,
            status: self.status.parse::<EntryStatus>()?,
            note: self.note,
            source: self.source.parse::<EntrySource>()?,
        })
    }
}

pub fn parse_lexicon(text: &str, origin: &str) -> Result<Lexicon> {
    let mut lex = Lexicon::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let record: EntryRecord = serde_json::from_str(line).map_err(|e| Error::parse(origin, line_no, e))?;
        let entry = record.into_entry().map_err(|e| Error::lexicon(origin, line_no, e))?;
        lex.insert(entry).map_err(|e| Error::lexicon(origin, line_no, e))?;
    }
    Ok(lex)
}

pub fn render_lexicon(lex: &Lexicon) -> String {
    let mut out = String::new();
    for e in lex.entries() {
        out.push_str(&serde_json::to_string(&EntryRecord::from_entry(e)).expect("record serializes"));
        out.push('\n');
    }
    out
}

pub fn load_lexicon(path: &Path) -> Result<Lexicon> {
    parse_lexicon(&read_text(path)?, &path.display().to_string())
}

pub fn save_lexicon(lex: &Lexicon, path: &Path) -> Result<()> {
    write_atomic(path, render_lexicon(lex).as_bytes())
}

pub fn parse_posdict(text: &str, origin: &str) -> Result<PosDictionary> {
    let mut dict = PosDictionary::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let mut fields = line.split('\t');
        let word = fields.next().unwrap_or_default().trim();
        let classes = fields.next().unwrap_or_default();
        let senses = fields.next().map(str::trim).filter(|s| !s.is_empty());
        if word.is_empty() || fields.next().is_some() {
            return Err(Error::parse(
                origin,
                line_no,
                "expected `word<TAB>pos,pos[<TAB>senses]`",
            ));
        }
        let classes = classes
            .split(',')
            .map(str::trim)
            .filter(|c| !c.is_empty())
            .map(|c| c.parse::<PosLabel>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::lexicon(origin, line_no, e))?;
        let senses = senses
            .map(|s| s.parse::<u32>())
            .transpose()
            .map_err(|e| Error::parse(origin, line_no, format!("bad sense count: {e}")))?;
        dict.insert(word, classes, senses);
    }
    Ok(dict)
}

pub fn load_posdict(path: &Path) -> Result<PosDictionary> {
    parse_posdict(&read_text(path)?, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_numbers_in_errors() {
        let text = "{\"phrase\":[\"segera\"],\"tags\":[\"IMP\"],\"status\":\"verified\",\"source\":\"user\"}\n\n{oops";
        let err = parse_lexicon(text, "x.jsonl").unwrap_err();
        assert!(err.to_string().starts_with("x.jsonl:3:"), "{err}");
    }

    #[test]
    fn typed_errors() {
        let bad_tag = r#"{"phrase":["a"],"tags":["FOO"],"status":"verified","source":"user"}"#;
        assert!(matches!(
            parse_lexicon(bad_tag, "x"),
            Err(Error::Lexicon {
                source: LexiconError::UnknownAttribute(_),
                ..
            })
        ));
        let bad_sub = r#"{"phrase":["a"],"tags":["CON.general"],"status":"verified","source":"user"}"#;
        assert!(matches!(
            parse_lexicon(bad_sub, "x"),
            Err(Error::Lexicon {
                source: LexiconError::UnknownSubAttribute { .. },
                ..
            })
        ));
        let bad_pos = r#"{"phrase":["a"],"pos":["noun"],"tags":["T"],"status":"verified","source":"user"}"#;
        assert!(matches!(
            parse_lexicon(bad_pos, "x"),
            Err(Error::Lexicon {
                source: LexiconError::UnknownPos(_),
                ..
            })
        ));
        let unknown_field = r#"{"phrase":["a"],"tags":["T"],"status":"verified","source":"user","x":1}"#;
        assert!(matches!(parse_lexicon(unknown_field, "x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn duplicate_phrase() {
        let line = r#"{"phrase":["segera"],"tags":["IMP"],"status":"verified","source":"user"}"#;
        let err = parse_lexicon(&format!("{line}\n{line}\n"), "x").unwrap_err();
        assert!(matches!(
            err,
            Error::Lexicon {
                line: 2,
                source: LexiconError::DuplicatePhrase(_),
                ..
            }
        ));
    }

    #[test]
    fn empty_file_is_empty_lexicon() {
        assert!(parse_lexicon("", "x").unwrap().is_empty());
    }

    #[test]
    fn posdict_lines() {
        let d = parse_posdict("# comment\npapar\tadj, kk\nalam\tkk\t2\n", "p").unwrap();
        assert_eq!(d.get("papar").unwrap().classes.len(), 2);
        assert_eq!(d.get("alam").unwrap().sense_count, Some(2));
        assert!(parse_posdict("papar\tnoun\n", "p").is_err());
        assert!(parse_posdict("papar\tkk\tmany\n", "p").is_err());
    }
}
