use std::time::{Duration, Instant};

use absorb_core::Predicate;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::context::RingContext;
use crate::corpus::{Corpus, Skipped};
use crate::report::{Outcome, Tally, TheoremReport};
use crate::search::{nq_question, separation, NqReport, SeparationReport};
use crate::verifiers::{Theorem, OUT_OF_SCOPE, THEOREMS};

pub const SCHEMA: &str = "absorb-suite/1";
pub const NQ_QUESTION: &str = "nq_question";

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Theorem ids to run (plus `nq_question` for the miner); `None` runs all.
    pub theorems: Option<Vec<String>>,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub timings: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutOfScope {
    pub theorem: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub rings: u64,
    pub skipped: Vec<Skipped>,
    pub reports: Vec<TheoremReport>,
    pub out_of_scope: Vec<OutOfScope>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nq_question: Option<NqReport>,
    pub total_violations: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SuiteReport {
    pub fn report(&self, id: &str) -> Option<&TheoremReport> {
        self.reports.iter().find(|r| r.theorem == id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteError {
    UnknownTheorem(String),
    ThreadPool(String),
}

impl std::fmt::Display for SuiteError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SuiteError::UnknownTheorem(t) => {
                let ids: Vec<&str> = THEOREMS.iter().map(|t| t.id).collect();
                write!(f, "unknown theorem '{t}' (known: {}, {NQ_QUESTION})", ids.join(", "))
            }
            SuiteError::ThreadPool(e) => write!(f, "cannot start worker threads: {e}"),
        }
    }
}

impl std::error::Error for SuiteError {}

/// Resolves a theorem filter into the verifiers to run and whether the NQ
/// miner runs.
pub fn select(filter: Option<&[String]>) -> Result<(Vec<&'static Theorem>, bool), SuiteError> {
    let Some(ids) = filter else {
        return Ok((THEOREMS.iter().collect(), true));
    };
    let mut chosen = Vec::new();
    let mut miner = false;
    for id in ids {
        let id = id.trim();
        if id.eq_ignore_ascii_case(NQ_QUESTION) {
            miner = true;
            continue;
        }
        let t = crate::verifiers::find(id).ok_or_else(|| SuiteError::UnknownTheorem(id.to_string()))?;
        if !chosen.iter().any(|c: &&Theorem| c.id == t.id) {
            chosen.push(t);
        }
    }
    // keep registry order regardless of the filter order
    chosen.sort_by_key(|t| THEOREMS.iter().position(|x| x.id == t.id));
    Ok((chosen, miner))
}

struct RingResult {
    outcomes: Vec<(Outcome, Duration)>,
    nq: Option<NqReport>,
}

fn run_ring(ctx: &RingContext, theorems: &[&Theorem], miner: bool) -> RingResult {
    let outcomes = theorems
        .iter()
        .map(|th| {
            let start = Instant::now();
            let mut t = Tally::new(ctx, th.parts);
            (th.run)(ctx, &mut t);
            (t.finish(), start.elapsed())
        })
        .collect();
    RingResult { outcomes, nq: miner.then(|| nq_question(ctx)) }
}

/// Runs the selected verifiers over every corpus ring. Rings are processed
/// in parallel; results are merged in corpus order, so reports do not
/// depend on the number of workers.
pub fn run_suite(corpus: &Corpus, opts: &SuiteOptions) -> Result<SuiteReport, SuiteError> {
    let start = Instant::now();
    let (theorems, miner) = select(opts.theorems.as_deref())?;
    let (results, skipped) = map_corpus(corpus, opts.jobs, |ctx| run_ring(ctx, &theorems, miner))?;

    let mut reports: Vec<TheoremReport> = theorems.iter().map(|t| TheoremReport::new(t.id, t.title, t.parts)).collect();
    let mut elapsed = vec![Duration::ZERO; theorems.len()];
    let mut nq = miner.then(NqReport::new);
    let rings = results.len() as u64;
    for res in results {
        for (k, (o, d)) in res.outcomes.into_iter().enumerate() {
            reports[k].absorb(o);
            elapsed[k] += d;
        }
        if let (Some(acc), Some(part)) = (nq.as_mut(), res.nq) {
            acc.merge(part);
        }
    }
    for (rep, d) in reports.iter_mut().zip(elapsed) {
        rep.finish();
        if opts.timings {
            rep.elapsed_ms = Some(d.as_millis() as u64);
        }
    }
    if let Some(n) = nq.as_mut() {
        n.finish();
    }
    let total_violations = reports.iter().map(|r| r.violations.len() as u64).sum();
    Ok(SuiteReport {
        schema: SCHEMA.to_string(),
        rings,
        skipped,
        reports,
        out_of_scope: OUT_OF_SCOPE
            .iter()
            .map(|(t, r)| OutOfScope { theorem: t.to_string(), reason: r.to_string() })
            .collect(),
        nq_question: nq,
        total_violations,
        elapsed_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, SuiteError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    builder.build().map_err(|e| SuiteError::ThreadPool(e.to_string()))
}

/// Runs `f` on the context of every corpus ring in parallel, returning the
/// results in corpus order together with the rings that had to be skipped.
pub fn map_corpus<T: Send>(
    corpus: &Corpus,
    jobs: Option<usize>,
    f: impl Fn(&RingContext) -> T + Sync,
) -> Result<(Vec<T>, Vec<Skipped>), SuiteError> {
    let results: Vec<Result<T, Skipped>> = pool(jobs)?.install(|| {
        corpus
            .entries
            .par_iter()
            .map(|e| {
                RingContext::new(e.label.clone(), e.ring.clone(), corpus.max_ideals)
                    .map(|ctx| f(&ctx))
                    .map_err(|err| Skipped { label: e.label.clone(), reason: err.to_string() })
            })
            .collect()
    });
    let mut skipped = corpus.skipped.clone();
    let mut out = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Ok(t) => out.push(t),
            Err(s) => skipped.push(s),
        }
    }
    Ok((out, skipped))
}

pub fn run_nq_question(corpus: &Corpus, jobs: Option<usize>) -> Result<(NqReport, Vec<Skipped>), SuiteError> {
    let (parts, skipped) = map_corpus(corpus, jobs, nq_question)?;
    let mut rep = NqReport::new();
    for p in parts {
        rep.merge(p);
    }
    rep.finish();
    Ok((rep, skipped))
}

pub fn run_separation(
    corpus: &Corpus,
    a: Predicate,
    b: Predicate,
    jobs: Option<usize>,
) -> Result<(SeparationReport, Vec<Skipped>), SuiteError> {
    let (parts, skipped) = map_corpus(corpus, jobs, |ctx| separation(ctx, a, b))?;
    let mut rep = SeparationReport::new(a, b);
    for p in parts {
        rep.merge(p);
    }
    Ok((rep, skipped))
}
