use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use absorb_core::classify::Scanner;
use absorb_core::ideal::DEFAULT_MAX_IDEALS;
use absorb_core::{Predicate, DEFAULT_MAX_ORDER};
use absorb_suite::corpus::CorpusEntry;
use absorb_suite::ring_report::{ring_report, RingReport};
use absorb_suite::run::{run_nq_question, run_separation};
use absorb_suite::{run_suite, Corpus, CorpusBounds, NqReport, SeparationReport, Skipped, SuiteOptions, SuiteReport};
use absorb_suite::{RingContext, Status};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::build::{build, ring_from_text, CliError};
use crate::dsl::{parse_ideal, parse_ring};

pub const CLASSIFY_SCHEMA: &str = "absorb-classify/1";
pub const IDEALS_SCHEMA: &str = "absorb-ideals/1";
pub const SEARCH_SCHEMA: &str = "absorb-search/1";

/// Ideals of finite commutative rings: classification, lattice listings,
/// theorem verification and counterexample search.
///
/// Rings: Z12, prod(Z4,Z9), quot(Z12,(4)), idealize(12,6), loc(Z12,{4}),
/// table(path/to/file), @f2xy. Ideals: (4), (1,0,0), ((0,6)).
#[derive(Debug, Parser)]
#[command(name = "absorb", version)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest ring order to construct.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Largest number of ideals to enumerate per ring.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_IDEALS)]
    pub max_ideals: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one ideal against every predicate, with witnesses.
    Classify { ring: String, ideal: String },
    /// List the ideal lattice of a ring with prime/maximal/radical tags.
    Ideals { ring: String },
    /// Run the theorem verifiers over a corpus (exit 1 on violations).
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Comma-separated theorem ids (default: all, plus nq_question).
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<String>>,
        /// Include wall-clock timings (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Search a corpus for ideals in one class but not another.
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
    /// Summarize one ring: structure flags, classified ideals, intersections.
    Report { ring: String },
}

#[derive(Debug, Subcommand)]
pub enum SearchMode {
    /// Ideals satisfying --a but not --b.
    Separation {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Weakly 1AP, non weakly primary ideals of non-quasilocal rings, and
    /// whether each contains an element with maximal annihilator.
    NqQuestion {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// File with one ring expression per line (`#` comments); default: the
    /// standard corpus.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema: String,
    pub ring: String,
    pub ideal: String,
    pub elements: String,
    pub radical: String,
    pub verdicts: BTreeMap<Predicate, bool>,
    pub witnesses: BTreeMap<Predicate, Vec<String>>,
    /// Number of 1-triple-zeros `(a,b,c)`: nonunits, `abc = 0`, `ab` not in
    /// I, `c` not in sqrt(I).
    pub triple_zeros: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub ideal: String,
    pub elements: String,
    pub tags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealsReport {
    pub schema: String,
    pub ring: String,
    pub order: usize,
    pub ideals: Vec<IdealEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SearchReport {
    Separation { schema: String, skipped: Vec<Skipped>, report: SeparationReport },
    NqQuestion { schema: String, skipped: Vec<Skipped>, report: NqReport },
}

/// Rendered output and exit code of one command.
pub struct Output {
    pub text: String,
    pub code: u8,
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(value)
    }
}

fn context(ring: &str, cli: &Cli) -> Result<RingContext, CliError> {
    let b = ring_from_text(ring, cli.max_order)?;
    Ok(RingContext::new(b.ring.label().to_string(), b.ring, cli.max_ideals)?)
}

pub fn classify(ring: &str, ideal: &str, cli: &Cli) -> Result<ClassifyReport, CliError> {
    let b = ring_from_text(ring, cli.max_order)?;
    let i = b.ideal(&parse_ideal(ideal)?)?;
    if !i.is_proper() {
        return Err(CliError::Semantic(format!("{i} is the whole ring; only proper ideals are classified")));
    }
    let scan = Scanner::new(&i)?;
    let rec = scan.record();
    let name = |x: &usize| b.ring.name(*x).to_string();
    Ok(ClassifyReport {
        schema: CLASSIFY_SCHEMA.into(),
        ring: b.ring.label().into(),
        ideal: i.to_string(),
        elements: i.display_set(),
        radical: scan.radical().display_set(),
        witnesses: rec.witnesses.iter().map(|(p, w)| (*p, w.iter().map(name).collect())).collect(),
        verdicts: rec.verdicts,
        triple_zeros: scan.triple_zeros().len(),
    })
}

pub fn ideals(ring: &str, cli: &Cli) -> Result<IdealsReport, CliError> {
    let ctx = context(ring, cli)?;
    let rep = ring_report(&ctx);
    Ok(IdealsReport {
        schema: IDEALS_SCHEMA.into(),
        ring: rep.ring,
        order: rep.order,
        ideals: rep
            .ideals
            .into_iter()
            .map(|i| IdealEntry { ideal: i.ideal, elements: i.elements, tags: i.tags })
            .collect(),
    })
}

pub fn report(ring: &str, cli: &Cli) -> Result<RingReport, CliError> {
    Ok(ring_report(&context(ring, cli)?))
}

/// The standard corpus, or the rings listed in a corpus file. Rings above
/// the order bound are skipped, not fatal.
pub fn load_corpus(args: &CorpusArgs, cli: &Cli) -> Result<Corpus, CliError> {
    let bounds = CorpusBounds { max_order: cli.max_order, max_ideals: cli.max_ideals, ..CorpusBounds::default() };
    let Some(path) = &args.corpus else {
        return Ok(Corpus::standard(&bounds));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Semantic(format!("cannot read corpus {}: {e}", path.display())))?;
    let mut c = Corpus { max_ideals: cli.max_ideals, ..Corpus::default() };
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let expr = parse_ring(line).map_err(|e| CliError::Parse(format!("{}:{}: {e}", path.display(), n + 1)))?;
        match build(&expr, cli.max_order) {
            Ok(b) => c.entries.push(CorpusEntry { label: expr.to_string(), ring: b.ring }),
            Err(CliError::Resource(reason)) => c.skipped.push(Skipped { label: expr.to_string(), reason }),
            Err(e) => return Err(CliError::Semantic(format!("{}:{}: {e}", path.display(), n + 1))),
        }
    }
    Ok(c)
}

fn predicate(name: &str) -> Result<Predicate, CliError> {
    Predicate::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = Predicate::ALL.iter().map(|p| p.short()).collect();
        CliError::Parse(format!("unknown class '{name}' (known: {})", known.join(", ")))
    })
}

fn suite_error(e: absorb_suite::SuiteError) -> CliError {
    match e {
        absorb_suite::SuiteError::UnknownTheorem(_) => CliError::Parse(e.to_string()),
        _ => CliError::Semantic(e.to_string()),
    }
}

pub fn verify(corpus: &CorpusArgs, theorems: Option<Vec<String>>, timings: bool, cli: &Cli) -> Result<SuiteReport, CliError> {
    let c = load_corpus(corpus, cli)?;
    run_suite(&c, &SuiteOptions { theorems, jobs: corpus.jobs, timings }).map_err(suite_error)
}

pub fn search(mode: &SearchMode, cli: &Cli) -> Result<SearchReport, CliError> {
    match mode {
        SearchMode::Separation { a, b, corpus } => {
            let (a, b) = (predicate(a)?, predicate(b)?);
            let c = load_corpus(corpus, cli)?;
            let (report, skipped) = run_separation(&c, a, b, corpus.jobs).map_err(suite_error)?;
            Ok(SearchReport::Separation { schema: SEARCH_SCHEMA.into(), skipped, report })
        }
        SearchMode::NqQuestion { corpus } => {
            let c = load_corpus(corpus, cli)?;
            let (report, skipped) = run_nq_question(&c, corpus.jobs).map_err(suite_error)?;
            Ok(SearchReport::NqQuestion { schema: SEARCH_SCHEMA.into(), skipped, report })
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let j = cli.json;
    let ok = |text| Output { text, code: 0 };
    match &cli.command {
        Command::Classify { ring, ideal } => Ok(ok(emit(j, &classify(ring, ideal, cli)?, render_classify))),
        Command::Ideals { ring } => Ok(ok(emit(j, &ideals(ring, cli)?, render_ideals))),
        Command::Report { ring } => Ok(ok(emit(j, &report(ring, cli)?, render_ring))),
        Command::Verify { corpus, theorems, timings } => {
            let rep = verify(corpus, theorems.clone(), *timings, cli)?;
            let code = if rep.total_violations > 0 { 1 } else { 0 };
            Ok(Output { text: emit(j, &rep, render_suite), code })
        }
        Command::Search { mode } => Ok(ok(emit(j, &search(mode, cli)?, render_search))),
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

pub fn render_classify(r: &ClassifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ring     {}", r.ring);
    let _ = writeln!(s, "ideal    {} = {}", r.ideal, r.elements);
    let _ = writeln!(s, "radical  {}", r.radical);
    for p in Predicate::ALL {
        let _ = write!(s, "  {} {:<15}", mark(r.verdicts[&p]), p.short());
        if let Some(w) = r.witnesses.get(&p) {
            let _ = write!(s, " witness ({})", w.join(","));
        }
        s.push('\n');
    }
    let _ = writeln!(s, "1-triple-zeros: {}", r.triple_zeros);
    s
}

pub fn render_ideals(r: &IdealsReport) -> String {
    let mut s = format!("{}: order {}, {} ideals\n", r.ring, r.order, r.ideals.len());
    let width = r.ideals.iter().map(|i| i.ideal.chars().count()).max().unwrap_or(0);
    for i in &r.ideals {
        let _ = writeln!(s, "  {:<width$}  {}  [{}]", i.ideal, i.elements, i.tags.join(","));
    }
    s
}

pub fn render_ring(r: &RingReport) -> String {
    let mut s = format!("{}: order {}\n", r.ring, r.order);
    let flags: Vec<String> = r.flags.iter().map(|(k, v)| format!("{} {k}", mark(*v))).collect();
    let _ = writeln!(s, "  {}", flags.join("  "));
    let short: Vec<&str> = Predicate::ALL.iter().map(|p| p.short()).collect();
    let _ = writeln!(s, "ideals (columns: {})", short.join(" "));
    for i in &r.ideals {
        let marks: String = if i.verdicts.is_empty() {
            "-".into()
        } else {
            Predicate::ALL.iter().map(|p| mark(i.verdicts[p])).collect::<Vec<_>>().join(" ")
        };
        let _ = writeln!(s, "  {}  {}  [{}]  {marks}", i.ideal, i.elements, i.tags.join(","));
    }
    if !r.intersections.is_empty() {
        let _ = writeln!(s, "intersections of incomparable weakly 1AP ideals");
        for n in &r.intersections {
            let _ = writeln!(s, "  {} ∩ {} = {}  weakly 1AP {}", n.left, n.right, n.intersection, mark(n.weakly_1ap));
            if let Some(note) = &n.note {
                let _ = writeln!(s, "    note: {note}");
            }
        }
    }
    s
}

const SHOWN_VIOLATIONS: usize = 5;

pub fn render_suite(r: &SuiteReport) -> String {
    let mut s = format!("corpus: {} rings, {} skipped\n", r.rings, r.skipped.len());
    for k in &r.skipped {
        let _ = writeln!(s, "  skipped {}: {}", k.label, k.reason);
    }
    let _ = writeln!(s, "{:<14} {:<10} {:>6} {:>10} {:>10}", "theorem", "status", "rings", "instances", "violations");
    for t in &r.reports {
        let status = match t.status {
            Status::Verified => "verified",
            Status::Vacuous => "vacuous",
            Status::Violated => "VIOLATED",
            Status::OutOfScope => "out of scope",
        };
        let _ = write!(s, "{:<14} {:<10} {:>6} {:>10} {:>10}", t.theorem, status, t.rings, t.instances, t.violations.len());
        if let Some(ms) = t.elapsed_ms {
            let _ = write!(s, " {ms:>8} ms");
        }
        s.push('\n');
        for p in &t.parts {
            let _ = writeln!(s, "    {}: checked {}, skipped {}", p.part, p.checked, p.skipped);
        }
        for (k, v) in &t.observations {
            let _ = writeln!(s, "    observed {k}: {v}");
        }
        for v in t.violations.iter().take(SHOWN_VIOLATIONS) {
            let w = if v.witness.is_empty() { String::new() } else { format!(" witness ({})", v.witness.join(",")) };
            let confirmed = if v.oracle_confirmed { "oracle-confirmed" } else { "NOT oracle-confirmed" };
            let _ = writeln!(s, "    ✗ [{}] {} {}: {}{w} ({confirmed})", v.part, v.ring, v.ideals.join(" ; "), v.detail);
        }
        if t.violations.len() > SHOWN_VIOLATIONS {
            let _ = writeln!(s, "    ... {} more (see --json)", t.violations.len() - SHOWN_VIOLATIONS);
        }
    }
    for o in &r.out_of_scope {
        let _ = writeln!(s, "{:<14} out of scope: {}", o.theorem, o.reason);
    }
    if let Some(nq) = &r.nq_question {
        let _ = writeln!(s, "nq_question: {} ideals examined, {} candidates: {}", nq.ideals_examined, nq.candidates.len(), nq.conclusion);
    }
    let _ = writeln!(s, "total violations: {}", r.total_violations);
    if let Some(ms) = r.elapsed_ms {
        let _ = writeln!(s, "elapsed: {ms} ms");
    }
    s
}

pub fn render_search(r: &SearchReport) -> String {
    let mut s = String::new();
    match r {
        SearchReport::Separation { skipped, report, .. } => {
            let _ = writeln!(
                s,
                "{} but not {}: {} hits in {} ideals of {} rings ({} skipped)",
                report.a.short(),
                report.b.short(),
                report.hits.len(),
                report.ideals_examined,
                report.rings,
                skipped.len()
            );
            for h in &report.hits {
                let _ = writeln!(s, "  {} {} = {}  witness ({})", h.ring, h.ideal, h.elements, h.witness.join(","));
            }
        }
        SearchReport::NqQuestion { skipped, report, .. } => {
            let _ = writeln!(
                s,
                "{} ideals of {} rings examined ({} skipped), {} candidates",
                report.ideals_examined,
                report.rings,
                skipped.len(),
                report.candidates.len()
            );
            for c in &report.candidates {
                let anns = if c.maximal_annihilators.is_empty() {
                    "NONE with maximal annihilator".to_string()
                } else {
                    format!("maximal annihilators at {}", c.maximal_annihilators.join(","))
                };
                let _ = writeln!(s, "  {} {} = {}  {anns}", c.ring, c.ideal, c.elements);
            }
            let _ = writeln!(s, "{}", report.conclusion);
        }
    }
    s
}
