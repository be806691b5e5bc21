//! Command-line front end: automaton I/O, analysis reports, family
//! generation, rank-word tables, DOT export, and oracle cross-checks.
//!
//! Exit codes: 0 for proved or completed runs, 1 for input or constraint
//! errors, 2 when the verdict stayed unknown.

pub mod crosscheck;
pub mod document;
pub mod dot;
pub mod report;

use clap::{Parser, Subcommand, ValueEnum};
use document::AutomatonDocument;
use report::AnalyzeOptions;
use std::io::Read;
use std::path::{Path, PathBuf};
use syncro::criteria::enumerate_rank_words;
use syncro::families::{build_family, Family, FamilySpec};
use syncro::power::{DEFAULT_CAP, MAX_CAP};
use syncro::{Error, SemiAutomaton};

#[derive(Parser)]
#[command(
    name = "syncro",
    version,
    about = "Synchronization analysis for deterministic complete semi-automata"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Subset-graph cap in states; overrides the SYNCRO_CAP environment
    /// variable and the built-in default.
    #[arg(long, global = true, value_name = "N")]
    pub cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DotTarget {
    Automaton,
    Power,
}

#[derive(Subcommand)]
pub enum Command {
    /// Analyze an automaton document (from a path, or stdin when omitted or `-`)
    Analyze {
        input: Option<PathBuf>,
        /// Fall back to the exact pair check when the criteria fail.
        #[arg(long)]
        oracle: bool,
        /// Longest defect words the criteria phase tries.
        #[arg(long = "word-budget", value_name = "N")]
        word_budget: Option<usize>,
    },
    /// Build a family member and run the same analysis
    Family {
        /// One of: cerny, L, V, F, K, fig3, gc_footnote.
        name: String,
        /// State count; fixed-size families allow omitting or matching it.
        #[arg(long, value_name = "N")]
        n: Option<usize>,
        #[arg(long)]
        oracle: bool,
        #[arg(long = "word-budget", value_name = "N")]
        word_budget: Option<usize>,
        /// Also write the automaton document to this path.
        #[arg(long = "write-document", value_name = "PATH")]
        write_document: Option<PathBuf>,
    },
    /// One shortest word per distinct transformation of a given rank
    RankWords {
        input: Option<PathBuf>,
        #[arg(long, value_name = "R")]
        rank: usize,
        /// Longest words to search; defaults to 2n + 2.
        #[arg(long = "max-len", value_name = "L")]
        max_len: Option<usize>,
    },
    /// Emit Graphviz DOT for the automaton or its reachable subset graph
    ExportDot {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = DotTarget::Automaton)]
        target: DotTarget,
    },
    /// Re-run the seeded random corpora against the brute-force oracle
    Crosscheck {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Largest state count in the corpus (oracle cap: 12).
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, String> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("SYNCRO_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("SYNCRO_CAP must be a state count, got {v:?}")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn read_input(input: Option<&Path>) -> Result<String, String> {
    match input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn load_automaton(input: Option<&Path>) -> Result<(SemiAutomaton, Option<String>), String> {
    let doc = AutomatonDocument::parse(&read_input(input)?)?;
    let a = doc.to_automaton()?;
    Ok((a, doc.name))
}

fn check_cap_value(cap: usize) -> Result<(), String> {
    if cap > MAX_CAP {
        return Err(Error::CapTooLarge {
            cap,
            limit: MAX_CAP,
        }
        .to_string());
    }
    Ok(())
}

fn emit_report(
    a: &SemiAutomaton,
    name: Option<String>,
    opts: &AnalyzeOptions,
    format: OutputFormat,
) -> u8 {
    let report = report::analyze(a, name, opts);
    match format {
        OutputFormat::Text => print!("{}", report.render_text()),
        OutputFormat::Structured => print!("{}", report.to_json()),
    }
    if report.verdict_unknown() {
        2
    } else {
        0
    }
}

/// Runs one parsed invocation and returns the process exit code.
pub fn run(cli: Cli) -> u8 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8, String> {
    let cap = resolve_cap(cli.cap)?;
    check_cap_value(cap)?;
    match cli.command {
        Command::Analyze {
            input,
            oracle,
            word_budget,
        } => {
            let (a, name) = load_automaton(input.as_deref())?;
            let opts = AnalyzeOptions {
                oracle,
                word_budget,
                cap,
            };
            Ok(emit_report(&a, name, &opts, cli.format))
        }
        Command::Family {
            name,
            n,
            oracle,
            word_budget,
            write_document,
        } => {
            let family = Family::parse(&name).ok_or_else(|| {
                let ids: Vec<&str> = Family::ALL.iter().map(|f| f.id()).collect();
                format!(
                    "unknown family {name:?}; known families: {}",
                    ids.join(", ")
                )
            })?;
            let a = build_family(&FamilySpec { family, n }).map_err(|e| e.to_string())?;
            let label = format!("{}_{}", family.id(), a.n());
            if let Some(path) = &write_document {
                let doc = AutomatonDocument::from_automaton(&a, Some(label.clone()));
                std::fs::write(path, doc.to_json())
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            let opts = AnalyzeOptions {
                oracle,
                word_budget,
                cap,
            };
            Ok(emit_report(&a, Some(label), &opts, cli.format))
        }
        Command::RankWords {
            input,
            rank,
            max_len,
        } => {
            let (a, _) = load_automaton(input.as_deref())?;
            if rank == 0 || rank > a.n() {
                return Err(Error::RankOutOfRange { rank, n: a.n() }.to_string());
            }
            let max_len = max_len.unwrap_or(2 * a.n() + 2);
            let rows = enumerate_rank_words(&a, rank, max_len);
            match cli.format {
                OutputFormat::Text => {
                    for (w, t) in &rows {
                        println!("{}\t{:?}", a.format_word(w), t.image());
                    }
                }
                OutputFormat::Structured => {
                    #[derive(serde::Serialize)]
                    struct Row {
                        word: String,
                        image: Vec<usize>,
                    }
                    #[derive(serde::Serialize)]
                    struct Table {
                        rank: usize,
                        max_len: usize,
                        rows: Vec<Row>,
                    }
                    let table = Table {
                        rank,
                        max_len,
                        rows: rows
                            .iter()
                            .map(|(w, t)| Row {
                                word: a.format_word(w),
                                image: t.image().to_vec(),
                            })
                            .collect(),
                    };
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&table).expect("table serializes")
                    );
                }
            }
            Ok(0)
        }
        Command::ExportDot { input, target } => {
            let (a, _) = load_automaton(input.as_deref())?;
            let text = match target {
                DotTarget::Automaton => dot::automaton_dot(&a),
                DotTarget::Power => dot::power_dot(&a, cap).map_err(|e| e.to_string())?,
            };
            print!("{text}");
            Ok(0)
        }
        Command::Crosscheck {
            samples,
            seed,
            nmax,
        } => {
            let summary = crosscheck::run(&crosscheck::CrosscheckOptions {
                samples,
                seed,
                nmax,
            })?;
            match cli.format {
                OutputFormat::Text => print!("{}", summary.render_text()),
                OutputFormat::Structured => print!("{}", summary.to_json()),
            }
            Ok(if summary.passed { 0 } else { 1 })
        }
    }
}
