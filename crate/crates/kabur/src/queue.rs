//! Candidate queue, review decisions and the audit log, each as JSON lines.

use std::collections::BTreeSet;
use std::path::Path;

use kabur_core::extraction::{AuditRecord, Occurrence};
use kabur_core::{CandidateStatus, CandidateWord, CriterionKind, Phrase, ReviewDecision, Span, TagSet, Verdict};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fsutil::read_text;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OccurrenceRecord {
    document: String,
    start: usize,
    end: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CandidateRecord {
    phrase: Vec<String>,
    tags: Vec<String>,
    criteria: Vec<String>,
    status: String,
    occurrences: Vec<OccurrenceRecord>,
}

fn parse_tags(tags: &[String], origin: &str, line: usize) -> Result<TagSet> {
    tags.iter()
        .map(|t| t.parse())
        .collect::<Result<_, _>>()
        .map_err(|e| Error::lexicon(origin, line, e))
}

pub fn render_queue(candidates: &[CandidateWord]) -> String {
    let mut out = String::new();
    for c in candidates {
        let record = CandidateRecord {
            phrase: c.phrase.tokens().to_vec(),
            tags: c.suggested_tags.iter().map(ToString::to_string).collect(),
            criteria: c.criterion_hits.iter().map(|k| k.as_str().to_owned()).collect(),
            status: c.status.as_str().to_owned(),
            occurrences: c
                .occurrences
                .iter()
                .map(|o| OccurrenceRecord {
                    document: o.document.clone(),
                    start: o.span.start,
                    end: o.span.end,
                })
                .collect(),
        };
        out.push_str(&serde_json::to_string(&record).expect("record serializes"));
        out.push('\n');
    }
    out
}

pub fn parse_queue(text: &str, origin: &str) -> Result<Vec<CandidateWord>> {
    let mut out: Vec<CandidateWord> = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let r: CandidateRecord = serde_json::from_str(line).map_err(|e| Error::parse(origin, line_no, e))?;
        let phrase = Phrase::new(r.phrase).map_err(|e| Error::lexicon(origin, line_no, e))?;
        if !seen.insert(phrase.key()) {
            return Err(Error::parse(origin, line_no, format!("duplicate candidate `{phrase}`")));
        }
        let criterion_hits = r
            .criteria
            .iter()
            .map(|c| {
                CriterionKind::parse(c).ok_or_else(|| Error::parse(origin, line_no, format!("unknown criterion `{c}`")))
            })
            .collect::<Result<_>>()?;
        let status = CandidateStatus::parse(&r.status)
            .ok_or_else(|| Error::parse(origin, line_no, format!("unknown status `{}`", r.status)))?;
        if r.occurrences.is_empty() {
            return Err(Error::parse(origin, line_no, "candidate without occurrences"));
        }
        out.push(CandidateWord {
            phrase,
            suggested_tags: parse_tags(&r.tags, origin, line_no)?,
            criterion_hits,
            status,
            occurrences: r
                .occurrences
                .into_iter()
                .map(|o| Occurrence {
                    document: o.document,
                    span: Span::new(o.start, o.end),
                })
                .collect(),
        });
    }
    Ok(out)
}

pub fn load_queue(path: &Path) -> Result<Vec<CandidateWord>> {
    parse_queue(&read_text(path)?, &path.display().to_string())
}

/// Batch decision. `reviewer` and `timestamp` fall back to session defaults.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecisionRecord {
    phrase: String,
    verdict: String,
    #[serde(default)]
    tags: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    reviewer: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    timestamp: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AuditLine {
    phrase: String,
    verdict: String,
    tags: Vec<String>,
    reviewer: String,
    timestamp: String,
    forced: bool,
}

fn check_timestamp(ts: &str, origin: &str, line: usize) -> Result<()> {
    chrono::DateTime::parse_from_rfc3339(ts)
        .map(|_| ())
        .map_err(|e| Error::parse(origin, line, format!("bad timestamp `{ts}`: {e}")))
}

fn parse_verdict(s: &str, origin: &str, line: usize) -> Result<Verdict> {
    Verdict::parse(s).ok_or_else(|| Error::parse(origin, line, format!("unknown verdict `{s}`")))
}

pub fn parse_decisions(text: &str, origin: &str, reviewer: &str, timestamp: &str) -> Result<Vec<ReviewDecision>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let r: DecisionRecord = serde_json::from_str(line).map_err(|e| Error::parse(origin, line_no, e))?;
        let timestamp = r.timestamp.unwrap_or_else(|| timestamp.to_owned());
        check_timestamp(&timestamp, origin, line_no)?;
        out.push(ReviewDecision {
            verdict: parse_verdict(&r.verdict, origin, line_no)?,
            final_tags: parse_tags(&r.tags, origin, line_no)?,
            phrase: r.phrase,
            reviewer: r.reviewer.unwrap_or_else(|| reviewer.to_owned()),
            timestamp,
        });
    }
    Ok(out)
}

pub fn render_audit(records: &[AuditRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let d = &r.decision;
        let line = AuditLine {
            phrase: d.phrase.clone(),
            verdict: d.verdict.as_str().to_owned(),
            tags: d.final_tags.iter().map(ToString::to_string).collect(),
            reviewer: d.reviewer.clone(),
            timestamp: d.timestamp.clone(),
            forced: r.forced,
        };
        out.push_str(&serde_json::to_string(&line).expect("record serializes"));
        out.push('\n');
    }
    out
}

pub fn parse_audit(text: &str, origin: &str) -> Result<Vec<AuditRecord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let r: AuditLine = serde_json::from_str(line).map_err(|e| Error::parse(origin, line_no, e))?;
        out.push(AuditRecord {
            decision: ReviewDecision {
                verdict: parse_verdict(&r.verdict, origin, line_no)?,
                final_tags: parse_tags(&r.tags, origin, line_no)?,
                phrase: r.phrase,
                reviewer: r.reviewer,
                timestamp: r.timestamp,
            },
            forced: r.forced,
        });
    }
    Ok(out)
}

pub fn load_audit(path: &Path) -> Result<Vec<AuditRecord>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    parse_audit(&read_text(path)?, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decisions_defaults_and_errors() {
        let d = parse_decisions(
            "{\"phrase\":\"efisien\",\"verdict\":\"accept\",\"tags\":[\"IMP\"]}\n",
            "d",
            "pakar",
            "2026-01-01T00:00:00Z",
        )
        .unwrap();
        assert_eq!(d[0].reviewer, "pakar");
        assert_eq!(d[0].verdict, Verdict::Accept);
        assert!(parse_decisions(
            "{\"phrase\":\"a\",\"verdict\":\"maybe\"}",
            "d",
            "r",
            "2026-01-01T00:00:00Z"
        )
        .is_err());
        assert!(parse_decisions(
            "{\"phrase\":\"a\",\"verdict\":\"reject\",\"timestamp\":\"yesterday\"}",
            "d",
            "r",
            "2026-01-01T00:00:00Z"
        )
        .is_err());
    }

    #[test]
    fn queue_rejects_duplicates() {
        let line = r#"{"phrase":["papar"],"tags":[],"criteria":["multi_pos"],"status":"pending","occurrences":[{"document":"a","start":0,"end":5}]}"#;
        assert_eq!(parse_queue(line, "q").unwrap().len(), 1);
        assert!(parse_queue(&format!("{line}\n{line}"), "q").is_err());
    }
}
