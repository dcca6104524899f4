//! Wordlists, abbreviation lists and attribute rule lists.
//!
//! All three are UTF-8 with one entry per line; blank lines and lines
//! starting with `#` are ignored. A rule-list line may carry a tag after a
//! TAB to override the list's default tag, e.g. `subjektif\tIMP.subjective`.

use std::path::Path;

use kabur_core::{AttributeTag, CriterionKind, Phrase, RuleList, Wordlist};

use crate::error::{Error, Result};
use crate::fsutil::read_text;

fn entries(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_wordlist(text: &str) -> Wordlist {
    Wordlist::new(entries(text).map(|(_, l)| l))
}

pub fn load_wordlist(path: &Path) -> Result<Wordlist> {
    Ok(parse_wordlist(&read_text(path)?))
}

/// Raw lines of an abbreviation list.
pub fn parse_lines(text: &str) -> Vec<String> {
    entries(text).map(|(_, l)| l.to_owned()).collect()
}

pub fn parse_rule_list(
    text: &str,
    origin: &str,
    name: &str,
    default_tag: AttributeTag,
    criterion: CriterionKind,
) -> Result<RuleList> {
    let mut list = RuleList::new(name, criterion);
    for (line_no, line) in entries(text) {
        let (phrase, tag) = match line.split_once('\t') {
            Some((p, t)) => (
                p,
                t.trim()
                    .parse::<AttributeTag>()
                    .map_err(|e| Error::lexicon(origin, line_no, e))?,
            ),
            None => (line, default_tag),
        };
        let phrase = Phrase::parse(phrase).map_err(|e| Error::lexicon(origin, line_no, e))?;
        list.insert(&phrase, tag);
    }
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kabur_core::{Attribute, SubAttribute};

    #[test]
    fn comments_and_case() {
        let w = parse_wordlist("# english\nDatabase\n\n  login \n");
        assert!(w.contains("database"));
        assert!(w.contains("login"));
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn rule_list_overrides() {
        let list = parse_rule_list(
            "efisien\nsecepat mungkin\nsubjektif\tIMP.subjective\n",
            "r",
            "implicit",
            AttributeTag::new(Attribute::Implicit),
            CriterionKind::VaguePos,
        )
        .unwrap();
        assert_eq!(
            list.get("secepat mungkin"),
            Some(AttributeTag::new(Attribute::Implicit))
        );
        assert_eq!(
            list.get("subjektif"),
            Some(AttributeTag::with_sub(SubAttribute::Subjective))
        );
        assert!(parse_rule_list(
            "x\tBAD\n",
            "r",
            "i",
            AttributeTag::new(Attribute::Implicit),
            CriterionKind::VaguePos
        )
        .is_err());
    }
}
