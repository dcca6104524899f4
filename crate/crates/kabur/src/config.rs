//! Flat TOML configuration and the resolved runtime settings.
//!
//! Every key is optional. Missing file paths fall back to the built-in seed
//! data; a path that is given must exist. Unknown keys are rejected.

use std::path::{Path, PathBuf};

use kabur_core::analyzer::LintConfig;
use kabur_core::filters::ShortFormRules;
use kabur_core::text::Abbreviations;
use kabur_core::{
    Attribute, AttributeRules, AttributeTag, CriterionKind, ExtractConfig, FilterConfig, FilterOrder, Lexicon, Phrase,
    PosDictionary, Segmenter, Wordlist,
};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fsutil::read_text;
use crate::lexfile::{load_lexicon, load_posdict, parse_lexicon, parse_posdict};
use crate::lists::{parse_lines, parse_rule_list, parse_wordlist};
use crate::report::ReportFormat;
use crate::seed;

#[derive(Debug, Clone, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub lexicon: Option<PathBuf>,
    pub posdict: Option<PathBuf>,
    pub english_wordlist: Option<PathBuf>,
    pub malay_wordlist: Option<PathBuf>,
    pub abbreviations: Option<PathBuf>,
    pub rules_implicit: Option<PathBuf>,
    pub rules_connectives: Option<PathBuf>,
    pub rules_temporal: Option<PathBuf>,
    pub rules_referential: Option<PathBuf>,
    pub rules_variable: Option<PathBuf>,
    pub rules_weakness: Option<PathBuf>,
    pub audit_log: Option<PathBuf>,

    pub filter_symbols: Option<bool>,
    pub filter_numbers: Option<bool>,
    pub filter_reduplication: Option<bool>,
    pub filter_proper_nouns: Option<bool>,
    pub filter_loanwords: Option<bool>,
    pub use_malay_wordlist: Option<bool>,
    pub short_form_listed: Option<bool>,
    pub short_form_no_vowel: Option<bool>,
    pub short_form_trailing_period: Option<bool>,
    pub filter_order: Option<String>,

    pub sense_threshold: Option<u32>,
    pub check_multi_pos: Option<bool>,
    pub check_multi_sense: Option<bool>,
    pub check_dangling_else: Option<bool>,
    pub conditional_markers: Option<Vec<String>>,
    pub alternative_markers: Option<Vec<String>>,
    pub check_multi_requirement: Option<bool>,
    pub requirement_markers: Option<Vec<String>>,
    pub check_clitic_references: Option<bool>,
    pub clitic_suffixes: Option<Vec<String>>,

    pub format: Option<String>,
}

impl Config {
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let mut cfg: Config = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.resolve_paths(base);
        cfg.check_files()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let base = path.parent().unwrap_or(Path::new("."));
        Config::parse(&read_text(path)?, base)
    }

    fn paths_mut(&mut self) -> [&mut Option<PathBuf>; 12] {
        [
            &mut self.lexicon,
            &mut self.posdict,
            &mut self.english_wordlist,
            &mut self.malay_wordlist,
            &mut self.abbreviations,
            &mut self.rules_implicit,
            &mut self.rules_connectives,
            &mut self.rules_temporal,
            &mut self.rules_referential,
            &mut self.rules_variable,
            &mut self.rules_weakness,
            &mut self.audit_log,
        ]
    }

    fn resolve_paths(&mut self, base: &Path) {
        for p in self.paths_mut().into_iter().flatten() {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
    }

    /// Input files must exist; the lexicon and audit log may be created later
    /// by `review`, so they are checked where they are read.
    fn check_files(&mut self) -> Result<()> {
        let inputs = [
            &self.posdict,
            &self.english_wordlist,
            &self.malay_wordlist,
            &self.abbreviations,
            &self.rules_implicit,
            &self.rules_connectives,
            &self.rules_temporal,
            &self.rules_referential,
            &self.rules_variable,
            &self.rules_weakness,
        ];
        for p in inputs.into_iter().flatten() {
            if !p.is_file() {
                return Err(Error::Config(format!("{} does not exist", p.display())));
            }
        }
        Ok(())
    }

    pub fn report_format(&self) -> Result<ReportFormat> {
        self.format.as_deref().map_or(Ok(ReportFormat::Text), |f| {
            f.parse().map_err(|_| Error::Config(format!("unknown format `{f}`")))
        })
    }
}

fn text_or(path: &Option<PathBuf>, fallback: &str) -> Result<String> {
    match path {
        Some(p) => read_text(p),
        None => Ok(fallback.to_owned()),
    }
}

fn phrases(key: &str, words: &[String]) -> Result<Vec<Phrase>> {
    words
        .iter()
        .map(|w| Phrase::parse(w).map_err(|e| Error::Config(format!("{key}: {e}"))))
        .collect()
}

/// Everything a subcommand needs, loaded and validated.
#[derive(Debug, Clone)]
pub struct Settings {
    pub lexicon: Lexicon,
    pub lexicon_path: Option<PathBuf>,
    pub posdict: PosDictionary,
    pub segmenter: Segmenter,
    pub filters: FilterConfig,
    pub rules: AttributeRules,
    pub lint: LintConfig,
    pub extract: ExtractConfig,
    pub audit_log: Option<PathBuf>,
}

impl Settings {
    /// Resolve `cfg`. `lexicon_override` wins over the config's lexicon path.
    pub fn from_config(cfg: &Config, lexicon_override: Option<&Path>) -> Result<Self> {
        let lexicon_path = lexicon_override.map(Path::to_path_buf).or_else(|| cfg.lexicon.clone());
        let lexicon = match &lexicon_path {
            Some(p) => load_lexicon(p)?,
            None => parse_lexicon(seed::LEXICON, "<seed lexicon>")?,
        };
        let posdict = match &cfg.posdict {
            Some(p) => load_posdict(p)?,
            None => parse_posdict(seed::POSDICT, "<seed posdict>")?,
        };

        let abbreviations = Abbreviations::new(parse_lines(&text_or(&cfg.abbreviations, seed::ABBREVIATIONS)?));
        let english = parse_wordlist(&text_or(&cfg.english_wordlist, seed::ENGLISH)?);
        let malay: Option<Wordlist> = if cfg.use_malay_wordlist.unwrap_or(true) {
            Some(parse_wordlist(&text_or(&cfg.malay_wordlist, seed::MALAY)?))
        } else {
            None
        };
        let filters = FilterConfig {
            english,
            malay,
            abbreviations: abbreviations.clone(),
            symbols: cfg.filter_symbols.unwrap_or(true),
            numbers: cfg.filter_numbers.unwrap_or(true),
            reduplication: cfg.filter_reduplication.unwrap_or(true),
            short_forms: ShortFormRules {
                listed: cfg.short_form_listed.unwrap_or(true),
                no_vowel: cfg.short_form_no_vowel.unwrap_or(true),
                trailing_period: cfg.short_form_trailing_period.unwrap_or(true),
            },
            proper_nouns: cfg.filter_proper_nouns.unwrap_or(true),
            loanwords: cfg.filter_loanwords.unwrap_or(true),
        };

        let rule_specs: [(&str, &Option<PathBuf>, &str, AttributeTag, CriterionKind); 6] = [
            (
                "implicit",
                &cfg.rules_implicit,
                seed::RULES_IMPLICIT,
                Attribute::Implicit.into(),
                CriterionKind::VaguePos,
            ),
            (
                "connectives",
                &cfg.rules_connectives,
                seed::RULES_CONNECTIVES,
                Attribute::Connectives.into(),
                CriterionKind::AttributeMember,
            ),
            (
                "temporal",
                &cfg.rules_temporal,
                seed::RULES_TEMPORAL,
                Attribute::Temporal.into(),
                CriterionKind::AttributeMember,
            ),
            (
                "referential",
                &cfg.rules_referential,
                seed::RULES_REFERENTIAL,
                Attribute::Referential.into(),
                CriterionKind::AttributeMember,
            ),
            (
                "variable",
                &cfg.rules_variable,
                seed::RULES_VARIABLE,
                Attribute::Variable.into(),
                CriterionKind::AttributeMember,
            ),
            (
                "weakness",
                &cfg.rules_weakness,
                seed::RULES_WEAKNESS,
                Attribute::Weakness.into(),
                CriterionKind::AttributeMember,
            ),
        ];
        let mut lists = Vec::new();
        for (name, path, fallback, tag, criterion) in rule_specs {
            let origin = path
                .as_ref()
                .map_or_else(|| format!("<seed {name} rules>"), |p| p.display().to_string());
            lists.push(parse_rule_list(
                &text_or(path, fallback)?,
                &origin,
                name,
                tag,
                criterion,
            )?);
        }

        let sense_threshold = cfg.sense_threshold.unwrap_or(2);
        let defaults = LintConfig::default();
        let lint = LintConfig {
            filters: filters.clone(),
            multi_pos: cfg.check_multi_pos.unwrap_or(defaults.multi_pos),
            multi_sense: cfg.check_multi_sense.unwrap_or(defaults.multi_sense),
            sense_threshold,
            dangling_else: cfg.check_dangling_else.unwrap_or(defaults.dangling_else),
            conditional_markers: match &cfg.conditional_markers {
                Some(m) => phrases("conditional_markers", m)?,
                None => defaults.conditional_markers,
            },
            alternative_markers: match &cfg.alternative_markers {
                Some(m) => phrases("alternative_markers", m)?,
                None => defaults.alternative_markers,
            },
            multi_requirement: cfg.check_multi_requirement.unwrap_or(defaults.multi_requirement),
            requirement_markers: match &cfg.requirement_markers {
                Some(m) => phrases("requirement_markers", m)?,
                None => defaults.requirement_markers,
            },
            clitic_references: cfg.check_clitic_references.unwrap_or(defaults.clitic_references),
            clitic_suffixes: cfg.clitic_suffixes.clone().unwrap_or(defaults.clitic_suffixes),
        };

        let filter_order = match cfg.filter_order.as_deref() {
            None | Some("tokens_first") => FilterOrder::TokensFirst,
            Some("types_first") => FilterOrder::TypesFirst,
            Some(other) => return Err(Error::Config(format!("unknown filter_order `{other}`"))),
        };

        Ok(Self {
            lexicon,
            lexicon_path,
            posdict,
            segmenter: Segmenter::new(abbreviations),
            filters,
            rules: AttributeRules::new(lists),
            lint,
            extract: ExtractConfig {
                sense_threshold,
                filter_order,
            },
            audit_log: cfg.audit_log.clone(),
        })
    }
}
