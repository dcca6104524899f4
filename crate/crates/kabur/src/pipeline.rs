//! Corpus loading and the extract / map / review / lint / stats workflows.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use kabur_core::extraction::{extract_prepared, prepare_document, AuditRecord, Extraction};
use kabur_core::lexicon::format_tags;
use kabur_core::stats::AttributeCounts;
use kabur_core::{
    lint_document, map_candidate_attributes, record_decision, CandidateStatus, CandidateWord, CorpusStats, Document,
    EntryStatus, Lexicon, LintReport, Phrase, ReviewDecision, Scope, TagSet, Verdict,
};
use rayon::prelude::*;
use walkdir::WalkDir;

use crate::config::Settings;
use crate::error::{Error, Result};
use crate::fsutil::{append, read_text, write_atomic};
use crate::lexfile::render_lexicon;
use crate::queue::{render_audit, render_queue};

fn is_hidden(entry: &walkdir::DirEntry) -> bool {
    entry.depth() > 0 && entry.file_name().to_string_lossy().starts_with('.')
}

fn files_under(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in WalkDir::new(dir)
        .sort_by_file_name()
        .into_iter()
        .filter_entry(|e| !is_hidden(e))
    {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(dir).to_owned();
            Error::io(
                path,
                e.into_io_error()
                    .unwrap_or_else(|| std::io::Error::other("walk failed")),
            )
        })?;
        if entry.file_type().is_file() {
            files.push(entry.into_path());
        }
    }
    Ok(files)
}

fn document(id: String, path: &Path) -> Result<Document> {
    let text = read_text(path)?;
    Ok(Document::new(id, text)
        .expect("document ids are non-empty paths")
        .with_source_path(path.display().to_string()))
}

/// Every non-hidden file under `dir`, in path order, identified by its path
/// relative to `dir`.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<Document>> {
    if !dir.is_dir() {
        return Err(Error::io(
            dir,
            std::io::Error::new(std::io::ErrorKind::NotFound, "not a directory"),
        ));
    }
    let files = files_under(dir)?;
    if files.is_empty() {
        return Err(Error::NoDocuments(dir.to_owned()));
    }
    files
        .iter()
        .map(|p| {
            let rel = p.strip_prefix(dir).unwrap_or(p);
            let id = rel
                .components()
                .map(|c| c.as_os_str().to_string_lossy())
                .collect::<Vec<_>>()
                .join("/");
            document(id, p)
        })
        .collect()
}

/// Files and directories as given on the command line.
pub fn load_paths(paths: &[PathBuf]) -> Result<Vec<Document>> {
    let mut docs = Vec::new();
    for p in paths {
        if p.is_dir() {
            for f in files_under(p)? {
                docs.push(document(f.display().to_string(), &f)?);
            }
        } else {
            docs.push(document(p.display().to_string(), p)?);
        }
    }
    Ok(docs)
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

pub fn extract(settings: &Settings, docs: &[Document], jobs: usize) -> Extraction {
    let prepared = with_jobs(jobs, || {
        docs.par_iter()
            .map(|d| prepare_document(d, &settings.segmenter, &settings.filters))
            .collect()
    });
    extract_prepared(
        prepared,
        &settings.lexicon,
        &settings.posdict,
        &settings.rules,
        &settings.extract,
    )
}

pub fn lint(settings: &Settings, docs: &[Document], jobs: usize) -> LintReport {
    let reports: Vec<LintReport> = with_jobs(jobs, || {
        docs.par_iter()
            .map(|d| {
                lint_document(
                    d,
                    &settings.segmenter,
                    &settings.lexicon,
                    &settings.posdict,
                    &settings.lint,
                )
            })
            .collect()
    });
    LintReport::concat(reports)
}

/// Recompute suggested tags and statuses against the current lexicon and rules.
pub fn map_queue(settings: &Settings, queue: &mut [CandidateWord]) {
    for c in queue.iter_mut() {
        c.suggested_tags = map_candidate_attributes(c, &settings.lexicon, &settings.posdict, &settings.rules);
        match settings.lexicon.get(&c.phrase.key()).map(|e| e.status) {
            Some(EntryStatus::Verified) => c.status = CandidateStatus::Accepted,
            Some(EntryStatus::Rejected) => c.status = CandidateStatus::Rejected,
            _ => {}
        }
    }
}

fn known(lexicon: &Lexicon, queue: &[CandidateWord], phrase: &str) -> bool {
    Phrase::parse(phrase).is_ok_and(|p| {
        let key = p.key();
        lexicon.contains(&key) || queue.iter().any(|c| c.phrase.key() == key)
    })
}

/// Apply batch decisions in order. Unknown phrases are reported together
/// before anything is applied; any other failure aborts the batch.
pub fn apply_decisions(
    lexicon: &mut Lexicon,
    queue: &mut [CandidateWord],
    decisions: &[ReviewDecision],
    force: bool,
) -> Result<Vec<AuditRecord>> {
    let unknown: Vec<String> = decisions
        .iter()
        .filter(|d| !known(lexicon, queue, &d.phrase))
        .map(|d| d.phrase.clone())
        .collect();
    if !unknown.is_empty() {
        return Err(Error::UnknownPhrases(unknown));
    }
    let mut lex = lexicon.clone();
    let mut q = queue.to_vec();
    let mut log = Vec::with_capacity(decisions.len());
    for d in decisions {
        log.push(record_decision(&mut lex, &mut q, d, force)?);
    }
    *lexicon = lex;
    queue.clone_from_slice(&q);
    Ok(log)
}

/// Prompt for each pending candidate on `output`, reading verdicts from `input`.
///
/// Commands: `a` accepts with the suggested tags, `a TAG,TAG` accepts with
/// the given tags, `r` rejects, `s` or an empty line skips, `q` stops.
pub fn review_interactive<R: BufRead, W: Write>(
    lexicon: &mut Lexicon,
    queue: &mut [CandidateWord],
    input: &mut R,
    output: &mut W,
    reviewer: &str,
    now: impl Fn() -> String,
) -> Result<Vec<AuditRecord>> {
    let io_err = |e| Error::io("<terminal>", e);
    let pending: Vec<usize> = (0..queue.len())
        .filter(|&i| queue[i].status == CandidateStatus::Pending)
        .collect();
    let mut log = Vec::new();
    'candidates: for (n, &i) in pending.iter().enumerate() {
        let c = &queue[i];
        let criteria: Vec<&str> = c.criterion_hits.iter().map(|k| k.as_str()).collect();
        writeln!(
            output,
            "[{}/{}] {}  criteria: {}  suggested: {}  occurrences: {}",
            n + 1,
            pending.len(),
            c.phrase,
            criteria.join(","),
            if c.is_unmapped() {
                "(unmapped)".to_owned()
            } else {
                format_tags(&c.suggested_tags)
            },
            c.occurrences.len()
        )
        .map_err(io_err)?;
        loop {
            write!(output, "accept [tags] / reject / skip / quit > ").map_err(io_err)?;
            output.flush().map_err(io_err)?;
            let mut line = String::new();
            if input.read_line(&mut line).map_err(io_err)? == 0 {
                break 'candidates;
            }
            let line = line.trim();
            let (cmd, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let (verdict, tags) = match cmd {
                "" | "s" | "skip" => continue 'candidates,
                "q" | "quit" => break 'candidates,
                "r" | "reject" => (Verdict::Reject, TagSet::new()),
                "a" | "accept" if rest.trim().is_empty() => (Verdict::Accept, queue[i].suggested_tags.clone()),
                "a" | "accept" => match rest.split(',').map(|t| t.trim().parse()).collect::<Result<TagSet, _>>() {
                    Ok(tags) => (Verdict::Accept, tags),
                    Err(e) => {
                        writeln!(output, "  {e}").map_err(io_err)?;
                        continue;
                    }
                },
                other => {
                    writeln!(output, "  unknown command `{other}`").map_err(io_err)?;
                    continue;
                }
            };
            let decision = ReviewDecision {
                phrase: queue[i].phrase.key(),
                verdict,
                final_tags: tags,
                reviewer: reviewer.to_owned(),
                timestamp: now(),
            };
            match record_decision(lexicon, queue, &decision, false) {
                Ok(r) => {
                    log.push(r);
                    continue 'candidates;
                }
                Err(e) => writeln!(output, "  {e}").map_err(io_err)?,
            }
        }
    }
    Ok(log)
}

/// Persist a review session: the lexicon and queue are replaced atomically
/// and the audit records appended.
pub fn persist_review(
    lexicon: &Lexicon,
    lexicon_path: &Path,
    queue: &[CandidateWord],
    queue_path: &Path,
    log: &[AuditRecord],
    audit_path: &Path,
) -> Result<()> {
    if log.is_empty() {
        return Ok(());
    }
    write_atomic(lexicon_path, render_lexicon(lexicon).as_bytes())?;
    write_atomic(queue_path, render_queue(queue).as_bytes())?;
    append(audit_path, render_audit(log).as_bytes())
}

/// Attribute table over a candidate queue. Unmapped candidates are left out;
/// `VerifiedOnly` counts accepted candidates, `AllCandidates` adds pending ones.
pub fn queue_stats(queue: &[CandidateWord], scope: Scope) -> Result<CorpusStats> {
    let admitted = queue.iter().filter(|c| {
        !c.is_unmapped()
            && match c.status {
                CandidateStatus::Accepted => true,
                CandidateStatus::Pending => scope == Scope::AllCandidates,
                CandidateStatus::Rejected => false,
            }
    });
    Ok(AttributeCounts::from_tag_sets(admitted.map(|c| &c.suggested_tags)).map(CorpusStats::from_counts)?)
}

pub fn default_audit_path(lexicon_path: &Path) -> PathBuf {
    let mut name = lexicon_path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".audit.jsonl");
    lexicon_path.with_file_name(name)
}
