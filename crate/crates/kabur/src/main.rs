use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::bail;
use clap::{Parser, Subcommand, ValueEnum};
use kabur::fsutil::{read_text, write_atomic};
use kabur::pipeline;
use kabur::queue::{load_queue, parse_decisions, render_queue};
use kabur::report::{render_extract_summary, render_lint, render_stats};
use kabur::{seed, Config, ReportFormat, Settings};
use kabur_core::{compute_attribute_stats, Scope};

const CONFIG_HELP: &str = concat!(
    "Configuration keys and their defaults (as written by `kabur init`).\n",
    "Flags override the config file; file paths are relative to it.\n\n",
    include_str!("../seed/kabur.toml"),
);

#[derive(Parser)]
#[command(
    name = "kabur",
    version,
    about = "Lint Malay requirement documents for ambiguous words",
    after_long_help = CONFIG_HELP
)]
struct Cli {
    /// Configuration file (flat TOML). Without one the built-in seed data is used.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Lexicon file, overriding the configured one.
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,
    /// Output format for reports.
    #[arg(long, global = true, value_enum)]
    format: Option<ReportFormat>,
    /// Worker threads for per-document work.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Verified,
    Candidates,
}

#[derive(Subcommand)]
enum Command {
    /// Write the seed lexicon, word lists, rule lists and a config into DIR.
    Init {
        #[arg(default_value = ".")]
        dir: PathBuf,
        #[arg(long)]
        force: bool,
    },
    /// Filter a corpus directory and write the candidate queue.
    Extract {
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Write the filter summary here instead of stdout.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Recompute suggested attribute tags in a queue file.
    Map {
        queue: PathBuf,
        /// Output file; defaults to rewriting QUEUE.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Record accept/reject decisions for queued candidates.
    Review {
        queue: PathBuf,
        /// JSON-lines decisions to apply instead of prompting.
        #[arg(long)]
        decisions: Option<PathBuf>,
        #[arg(long)]
        reviewer: Option<String>,
        /// Audit log; defaults to the configured one or one beside the lexicon.
        #[arg(long)]
        audit: Option<PathBuf>,
        /// Allow re-reviewing entries that were already decided.
        #[arg(long)]
        force: bool,
    },
    /// Report ambiguous words in documents. Exits 1 when anything is found.
    Lint {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Per-attribute counts and percentages.
    Stats {
        /// Count a candidate queue instead of the lexicon.
        #[arg(long)]
        queue: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "verified")]
        scope: ScopeArg,
    },
}

fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn print(text: &str) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if let Command::Init { dir, force } = &cli.command {
        let written = seed::init(dir, *force)?;
        for p in written {
            println!("wrote {}", p.display());
        }
        return Ok(ExitCode::SUCCESS);
    }

    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let format = match cli.format {
        Some(f) => f,
        None => config.report_format()?,
    };
    let settings = Settings::from_config(&config, cli.lexicon.as_deref())?;
    let jobs = cli.jobs.max(1);

    match cli.command {
        Command::Init { .. } => unreachable!(),
        Command::Extract { corpus, out, summary } => {
            let docs = pipeline::load_corpus_dir(&corpus)?;
            let ex = pipeline::extract(&settings, &docs, jobs);
            write_atomic(&out, render_queue(&ex.candidates).as_bytes())?;
            let text = render_extract_summary(&ex, docs.len());
            match summary {
                Some(p) => write_atomic(&p, text.as_bytes())?,
                None => print(&text)?,
            }
        }
        Command::Map { queue, out } => {
            let mut candidates = load_queue(&queue)?;
            pipeline::map_queue(&settings, &mut candidates);
            write_atomic(out.as_deref().unwrap_or(&queue), render_queue(&candidates).as_bytes())?;
            let unmapped = candidates.iter().filter(|c| c.is_unmapped()).count();
            println!("candidates {}\nunmapped {unmapped}", candidates.len());
        }
        Command::Review {
            queue,
            decisions,
            reviewer,
            audit,
            force,
        } => {
            let Some(lexicon_path) = settings.lexicon_path.clone() else {
                bail!("review needs a lexicon file (--lexicon or `lexicon` in the config)");
            };
            let audit = audit
                .or_else(|| settings.audit_log.clone())
                .unwrap_or_else(|| pipeline::default_audit_path(&lexicon_path));
            let reviewer = reviewer
                .or_else(|| std::env::var("USER").ok())
                .unwrap_or_else(|| "unknown".to_owned());
            let mut lexicon = settings.lexicon.clone();
            let mut candidates = load_queue(&queue)?;
            let log = match decisions {
                Some(path) => {
                    let text = read_text(&path)?;
                    let d = parse_decisions(&text, &path.display().to_string(), &reviewer, &now())?;
                    pipeline::apply_decisions(&mut lexicon, &mut candidates, &d, force)?
                }
                None => {
                    if force {
                        bail!("--force applies to --decisions batches only");
                    }
                    let stdin = io::stdin();
                    pipeline::review_interactive(
                        &mut lexicon,
                        &mut candidates,
                        &mut stdin.lock(),
                        &mut io::stderr(),
                        &reviewer,
                        now,
                    )?
                }
            };
            pipeline::persist_review(&lexicon, &lexicon_path, &candidates, &queue, &log, &audit)?;
            println!("{} decision(s) recorded", log.len());
        }
        Command::Lint { paths } => {
            let docs = pipeline::load_paths(&paths)?;
            let report = pipeline::lint(&settings, &docs, jobs);
            print(&render_lint(&report, &docs, format))?;
            if !report.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Stats { queue, scope } => {
            let scope = match scope {
                ScopeArg::Verified => Scope::VerifiedOnly,
                ScopeArg::Candidates => Scope::AllCandidates,
            };
            let stats = match &queue {
                Some(q) => pipeline::queue_stats(&load_queue(q)?, scope)?,
                None => compute_attribute_stats(settings.lexicon.entries(), scope)?,
            };
            print(&render_stats(&stats, format))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
