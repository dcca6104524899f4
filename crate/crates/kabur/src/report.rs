//! Rendering of lint findings, extraction summaries and attribute tables.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use kabur_core::extraction::Extraction;
use kabur_core::lexicon::format_tags;
use kabur_core::{render_table, Attribute, CorpusStats, Document, ExclusionReason, Finding, LintReport, TableFormat};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum ReportFormat {
    #[default]
    Text,
    Csv,
    Records,
}

impl FromStr for ReportFormat {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "csv" => Ok(ReportFormat::Csv),
            "records" => Ok(ReportFormat::Records),
            _ => Err(()),
        }
    }
}

/// 1-based line and character column of a byte offset.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    let col = text[line_start..offset].chars().count() + 1;
    (line, col)
}

#[derive(Serialize)]
struct FindingRecord<'a> {
    document: &'a str,
    line: usize,
    column: usize,
    start: usize,
    end: usize,
    sentence: usize,
    matched: &'a str,
    phrase: &'a str,
    tags: Vec<String>,
    criterion: &'static str,
    severity: &'static str,
}

fn record<'a>(f: &'a Finding, texts: &HashMap<&str, &str>) -> FindingRecord<'a> {
    let (line, column) = texts
        .get(f.document.as_str())
        .map_or((0, 0), |t| line_col(t, f.span.start));
    FindingRecord {
        document: &f.document,
        line,
        column,
        start: f.span.start,
        end: f.span.end,
        sentence: f.sentence,
        matched: &f.matched,
        phrase: &f.phrase,
        tags: f.tags.iter().map(ToString::to_string).collect(),
        criterion: f.criterion.as_str(),
        severity: f.severity.as_str(),
    }
}

pub fn render_lint(report: &LintReport, docs: &[Document], format: ReportFormat) -> String {
    let texts: HashMap<&str, &str> = docs.iter().map(|d| (d.id(), d.text())).collect();
    let mut out = String::new();
    match format {
        ReportFormat::Text => {
            for f in &report.findings {
                let r = record(f, &texts);
                let _ = writeln!(
                    out,
                    "{}:{}:{}: {}: \"{}\" [{}] {}",
                    r.document,
                    r.line,
                    r.column,
                    r.severity,
                    r.matched,
                    format_tags(&f.tags),
                    r.criterion
                );
            }
            if !report.findings.is_empty() {
                let by_attr: Vec<String> = Attribute::ALL
                    .iter()
                    .filter_map(|a| report.by_attribute.get(a).map(|n| format!("{a}={n}")))
                    .collect();
                let _ = writeln!(out, "{} finding(s); {}", report.findings.len(), by_attr.join(" "));
            }
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "document",
                "line",
                "column",
                "start",
                "end",
                "sentence",
                "matched",
                "phrase",
                "tags",
                "criterion",
                "severity",
            ])
            .expect("write to memory");
            for f in &report.findings {
                let r = record(f, &texts);
                w.write_record([
                    r.document.to_owned(),
                    r.line.to_string(),
                    r.column.to_string(),
                    r.start.to_string(),
                    r.end.to_string(),
                    r.sentence.to_string(),
                    r.matched.to_owned(),
                    r.phrase.to_owned(),
                    format_tags(&f.tags),
                    r.criterion.to_owned(),
                    r.severity.to_owned(),
                ])
                .expect("write to memory");
            }
            out = String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv of UTF-8 fields");
        }
        ReportFormat::Records => {
            for f in &report.findings {
                out.push_str(&serde_json::to_string(&record(f, &texts)).expect("record serializes"));
                out.push('\n');
            }
        }
    }
    out
}

/// Token- and type-level elimination accounting plus candidate totals.
pub fn render_extract_summary(ex: &Extraction, documents: usize) -> String {
    let r = &ex.filter_report;
    let mut out = String::new();
    let _ = writeln!(out, "documents {documents}");
    let _ = writeln!(out, "tokens {}", r.total_tokens());
    let _ = writeln!(out, "kept {}", r.kept.len());
    let _ = writeln!(out, "eliminated_tokens {}", r.eliminated_tokens());
    let _ = writeln!(out, "eliminated_types {}", r.eliminated_types());
    let _ = writeln!(out, "reason tokens types");
    for reason in ExclusionReason::ALL {
        let _ = writeln!(out, "{reason} {} {}", r.token_count(reason), r.type_count(reason));
    }
    let unmapped = ex.candidates.iter().filter(|c| c.is_unmapped()).count();
    let _ = writeln!(out, "candidates {}", ex.candidates.len());
    let _ = writeln!(out, "unmapped {unmapped}");
    out
}

#[derive(Serialize)]
struct StatsRecord {
    attribute: &'static str,
    count: u64,
    percentage: String,
    total_words: u64,
}

pub fn render_stats(stats: &CorpusStats, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => render_table(stats, TableFormat::Text),
        ReportFormat::Csv => render_table(stats, TableFormat::Csv),
        ReportFormat::Records => {
            let mut out = String::new();
            for a in Attribute::ALL {
                let r = StatsRecord {
                    attribute: a.code(),
                    count: stats.counts.get(a),
                    percentage: stats.percent(a).to_string(),
                    total_words: stats.counts.total_words(),
                };
                out.push_str(&serde_json::to_string(&r).expect("record serializes"));
                out.push('\n');
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_and_column() {
        let t = "ab\ncé d";
        assert_eq!(line_col(t, 0), (1, 1));
        assert_eq!(line_col(t, 3), (2, 1));
        assert_eq!(line_col(t, t.find('d').unwrap()), (2, 4));
    }
}
