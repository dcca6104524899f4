//! Exclusion of tokens that cannot be ambiguity candidates: symbols,
//! numbers, reduplicated words, short forms, proper nouns and English
//! loanwords.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::text::{detect_reduplication, normalize, Abbreviations, Token, TokenKind};

/// Why a token was excluded. Variants are listed in precedence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExclusionReason {
    Symbol,
    Number,
    Reduplication,
    ShortForm,
    ProperNoun,
    Loanword,
}

impl ExclusionReason {
    pub const ALL: [ExclusionReason; 6] = [
        ExclusionReason::Symbol,
        ExclusionReason::Number,
        ExclusionReason::Reduplication,
        ExclusionReason::ShortForm,
        ExclusionReason::ProperNoun,
        ExclusionReason::Loanword,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            ExclusionReason::Symbol => "symbol",
            ExclusionReason::Number => "number",
            ExclusionReason::Reduplication => "reduplication",
            ExclusionReason::ShortForm => "short_form",
            ExclusionReason::ProperNoun => "proper_noun",
            ExclusionReason::Loanword => "loanword",
        }
    }
}

impl fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A set of case-folded words or phrases.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Wordlist {
    words: BTreeSet<String>,
}

impl Wordlist {
    pub fn new<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self {
            words: words
                .into_iter()
                .map(|w| normalize(w.as_ref().trim()))
                .filter(|w| !w.is_empty())
                .collect(),
        }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// The three independent short-form clauses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShortFormRules {
    /// Normalized form is a listed abbreviation.
    pub listed: bool,
    /// At most four characters and no vowel.
    pub no_vowel: bool,
    /// Surface ends with a period.
    pub trailing_period: bool,
}

impl Default for ShortFormRules {
    fn default() -> Self {
        Self {
            listed: true,
            no_vowel: true,
            trailing_period: true,
        }
    }
}

impl ShortFormRules {
    pub fn matches(&self, token: &Token, abbreviations: &Abbreviations) -> bool {
        (self.listed && abbreviations.contains(&token.normalized))
            || (self.no_vowel && token.normalized.chars().count() <= 4 && !has_vowel(&token.normalized))
            || (self.trailing_period && token.surface.ends_with('.'))
    }
}

fn has_vowel(s: &str) -> bool {
    s.chars().any(|c| matches!(c, 'a' | 'e' | 'i' | 'o' | 'u'))
}

#[derive(Debug, Clone)]
pub struct FilterConfig {
    pub english: Wordlist,
    pub malay: Option<Wordlist>,
    pub abbreviations: Abbreviations,
    pub symbols: bool,
    pub numbers: bool,
    pub reduplication: bool,
    pub short_forms: ShortFormRules,
    pub proper_nouns: bool,
    pub loanwords: bool,
}

impl Default for FilterConfig {
    fn default() -> Self {
        Self {
            english: Wordlist::default(),
            malay: None,
            abbreviations: Abbreviations::new(Abbreviations::DEFAULT),
            symbols: true,
            numbers: true,
            reduplication: true,
            short_forms: ShortFormRules::default(),
            proper_nouns: true,
            loanwords: true,
        }
    }
}

impl FilterConfig {
    /// First matching exclusion reason for `token`, in precedence order.
    pub fn classify(&self, token: &Token) -> Option<ExclusionReason> {
        match token.kind {
            TokenKind::Symbol => return self.symbols.then_some(ExclusionReason::Symbol),
            TokenKind::Number => return self.numbers.then_some(ExclusionReason::Number),
            TokenKind::Word => {}
        }
        if self.reduplication && detect_reduplication(token) {
            Some(ExclusionReason::Reduplication)
        } else if self.short_forms.matches(token, &self.abbreviations) {
            Some(ExclusionReason::ShortForm)
        } else if self.proper_nouns && is_proper_noun(token, token.sentence_initial, self.malay.as_ref()) {
            Some(ExclusionReason::ProperNoun)
        } else if self.loanwords && is_loanword(token, &self.english, self.malay.as_ref()) {
            Some(ExclusionReason::Loanword)
        } else {
            None
        }
    }
}

/// Capitalized words are proper nouns, except sentence-initially where a
/// Malay wordlist (if any) decides.
pub fn is_proper_noun(token: &Token, sentence_initial: bool, malay: Option<&Wordlist>) -> bool {
    let capitalized = token.surface.chars().next().is_some_and(char::is_uppercase);
    capitalized && (!sentence_initial || malay.is_some_and(|m| !m.contains(&token.normalized)))
}

/// Listed as English and not also listed as Malay.
pub fn is_loanword(token: &Token, english: &Wordlist, malay: Option<&Wordlist>) -> bool {
    english.contains(&token.normalized) && !malay.is_some_and(|m| m.contains(&token.normalized))
}

/// All short-form clauses enabled.
pub fn is_short_form(token: &Token, abbreviations: &Abbreviations) -> bool {
    ShortFormRules::default().matches(token, abbreviations)
}

/// Outcome of filtering a token stream.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FilterReport {
    pub kept: Vec<Token>,
    pub excluded: Vec<(Token, ExclusionReason)>,
    pub token_counts: BTreeMap<ExclusionReason, usize>,
    /// Distinct normalized forms per reason.
    pub excluded_types: BTreeMap<ExclusionReason, BTreeSet<String>>,
}

impl FilterReport {
    pub fn record(&mut self, token: Token, reason: Option<ExclusionReason>) {
        match reason {
            None => self.kept.push(token),
            Some(reason) => {
                *self.token_counts.entry(reason).or_default() += 1;
                self.excluded_types
                    .entry(reason)
                    .or_default()
                    .insert(token.normalized.clone());
                self.excluded.push((token, reason));
            }
        }
    }

    pub fn total_tokens(&self) -> usize {
        self.kept.len() + self.excluded.len()
    }

    pub fn eliminated_tokens(&self) -> usize {
        self.excluded.len()
    }

    /// Distinct normalized forms eliminated under any reason.
    pub fn eliminated_types(&self) -> usize {
        self.excluded_types.values().flatten().collect::<BTreeSet<_>>().len()
    }

    pub fn token_count(&self, reason: ExclusionReason) -> usize {
        self.token_counts.get(&reason).copied().unwrap_or(0)
    }

    pub fn type_count(&self, reason: ExclusionReason) -> usize {
        self.excluded_types.get(&reason).map_or(0, BTreeSet::len)
    }

    pub fn type_counts(&self) -> BTreeMap<ExclusionReason, usize> {
        self.excluded_types.iter().map(|(r, s)| (*r, s.len())).collect()
    }

    /// Append another report after this one.
    pub fn merge(&mut self, other: FilterReport) {
        self.kept.extend(other.kept);
        self.excluded.extend(other.excluded);
        for (r, n) in other.token_counts {
            *self.token_counts.entry(r).or_default() += n;
        }
        for (r, s) in other.excluded_types {
            self.excluded_types.entry(r).or_default().extend(s);
        }
    }
}

/// Filter tokens independently of one another.
pub fn apply_filters(tokens: &[Token], cfg: &FilterConfig) -> FilterReport {
    let mut report = FilterReport::default();
    for t in tokens {
        report.record(t.clone(), cfg.classify(t));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{Document, Segmenter};
    use alloc::vec;

    fn tok(surface: &str, initial: bool) -> Token {
        let doc = Document::new("t", surface).unwrap();
        let seg = Segmenter::default();
        let s = seg.segment_sentences(&doc);
        let mut t = seg.tokenize(&doc, &s[0]).remove(0);
        t.sentence_initial = initial;
        t
    }

    fn cfg() -> FilterConfig {
        FilterConfig {
            english: Wordlist::new(["database", "data", "online"]),
            malay: Some(Wordlist::new(["data", "papar", "sistem", "alam", "pantas"])),
            ..FilterConfig::default()
        }
    }

    #[test]
    fn examples() {
        let c = cfg();
        assert_eq!(
            c.classify(&tok("rekod-rekod", false)),
            Some(ExclusionReason::Reduplication)
        );
        assert_eq!(c.classify(&tok(".", false)), Some(ExclusionReason::Symbol));
        assert_eq!(c.classify(&tok("42", false)), Some(ExclusionReason::Number));
        assert_eq!(c.classify(&tok("pantas", false)), None);
        assert_eq!(c.classify(&tok("alam", false)), None);
        assert_eq!(c.classify(&tok("database", false)), Some(ExclusionReason::Loanword));
    }

    #[test]
    fn proper_noun_heuristic() {
        let malay = Wordlist::new(["papar"]);
        assert!(is_proper_noun(&tok("Selangor", false), false, None));
        assert!(!is_proper_noun(&tok("sistem", false), false, None));
        assert!(!is_proper_noun(&tok("Papar", true), true, Some(&malay)));
        assert!(is_proper_noun(&tok("Kedah", true), true, Some(&malay)));
        assert!(!is_proper_noun(&tok("Kedah", true), true, None));
    }

    #[test]
    fn loanword_rule() {
        let en = Wordlist::new(["database", "data"]);
        let ms = Wordlist::new(["data"]);
        assert!(is_loanword(&tok("database", false), &en, Some(&ms)));
        assert!(!is_loanword(&tok("sistem", false), &en, Some(&ms)));
        assert!(!is_loanword(&tok("data", false), &en, Some(&ms)));
        assert!(is_loanword(&tok("data", false), &en, None));
    }

    #[test]
    fn short_form_rule() {
        let abbr = Abbreviations::new(["dll."]);
        assert!(is_short_form(&tok("dll.", false), &abbr));
        assert!(is_short_form(&tok("pljr", false), &abbr));
        assert!(!is_short_form(&tok("alam", false), &abbr));
        assert!(!is_short_form(&tok("pljrn", false), &abbr));
        let only_list = ShortFormRules {
            listed: true,
            no_vowel: false,
            trailing_period: false,
        };
        assert!(!only_list.matches(&tok("pljr", false), &abbr));
    }

    #[test]
    fn precedence_picks_first_reason() {
        // Capitalized and listed as English: proper noun wins.
        let c = cfg();
        assert_eq!(c.classify(&tok("Database", false)), Some(ExclusionReason::ProperNoun));
    }

    #[test]
    fn disabled_categories_keep_tokens() {
        let c = FilterConfig {
            symbols: false,
            reduplication: false,
            ..cfg()
        };
        assert_eq!(c.classify(&tok(".", false)), None);
        assert_eq!(c.classify(&tok("rekod-rekod", false)), None);
    }

    #[test]
    fn report_accounting() {
        let toks = vec![
            tok("rekod-rekod", false),
            tok("rekod-rekod", false),
            tok("pantas", false),
            tok(".", false),
        ];
        let r = apply_filters(&toks, &cfg());
        assert_eq!(r.kept.len(), 1);
        assert_eq!(r.token_count(ExclusionReason::Reduplication), 2);
        assert_eq!(r.type_count(ExclusionReason::Reduplication), 1);
        assert_eq!(r.eliminated_tokens(), 3);
        assert_eq!(r.eliminated_types(), 2);
        assert_eq!(r.total_tokens(), 4);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        const VOCAB: [&str; 12] = [
            "rekod-rekod",
            "alam",
            "pantas",
            "Selangor",
            "dll.",
            "pljr",
            "database",
            "data",
            "sistem",
            "42",
            "!",
            "papar",
        ];

        proptest! {
            #[test]
            fn partition_and_idempotence(words in proptest::collection::vec(0..VOCAB.len(), 0..40)) {
                let text = words.iter().map(|&i| VOCAB[i]).collect::<Vec<_>>().join(" ");
                let doc = Document::new("p", text).unwrap();
                let toks: Vec<Token> = Segmenter::default()
                    .tokenize_document(&doc)
                    .into_iter()
                    .flat_map(|(_, t)| t)
                    .collect();
                let c = cfg();
                let r = apply_filters(&toks, &c);
                prop_assert_eq!(r.kept.len() + r.excluded.len(), toks.len());
                prop_assert_eq!(r.token_counts.values().sum::<usize>(), r.excluded.len());
                let again = apply_filters(&r.kept, &c);
                prop_assert!(again.excluded.is_empty());
                // Each token's outcome depends only on the token itself.
                for t in &toks {
                    let alone = apply_filters(core::slice::from_ref(t), &c);
                    prop_assert_eq!(alone.kept.len() == 1, r.kept.contains(t));
                }
            }
        }
    }
}
