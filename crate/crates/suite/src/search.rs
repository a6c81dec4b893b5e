//! Counterexample mining over a corpus.

use absorb_core::{oracle, Predicate};
use serde::{Deserialize, Serialize};

use crate::context::RingContext;
use crate::verifiers::W1;

/// A weakly 1AP ideal of a non-quasilocal ring that is not weakly primary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NqCandidate {
    pub ring: String,
    pub ideal: String,
    pub elements: String,
    /// Elements `i` of the ideal whose annihilator is a maximal ideal.
    pub maximal_annihilators: Vec<String>,
    pub oracle_confirmed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NqReport {
    pub rings: u64,
    pub ideals_examined: u64,
    pub candidates: Vec<NqCandidate>,
    /// Candidates without any element of maximal annihilator. Each would show
    /// that the annihilator hypothesis cannot be dropped.
    pub without_maximal_annihilator: u64,
    pub conclusion: String,
}

impl NqReport {
    pub fn new() -> NqReport {
        NqReport { rings: 0, ideals_examined: 0, candidates: Vec::new(), without_maximal_annihilator: 0, conclusion: String::new() }
    }

    pub fn merge(&mut self, other: NqReport) {
        self.rings += other.rings;
        self.ideals_examined += other.ideals_examined;
        self.candidates.extend(other.candidates);
    }

    pub fn finish(&mut self) {
        self.without_maximal_annihilator =
            self.candidates.iter().filter(|c| c.maximal_annihilators.is_empty()).count() as u64;
        self.conclusion = if self.candidates.is_empty() {
            "no candidate found: every weakly 1AP ideal of a non-quasilocal corpus ring is weakly primary".into()
        } else if self.without_maximal_annihilator == 0 {
            format!(
                "{} candidate(s) found, each containing an element with maximal annihilator; \
                 the corpus does not show that the annihilator hypothesis can be dropped",
                self.candidates.len()
            )
        } else {
            format!(
                "{} candidate(s) lack an element with maximal annihilator: the equivalence fails \
                 without the annihilator hypothesis",
                self.without_maximal_annihilator
            )
        };
    }
}

impl Default for NqReport {
    fn default() -> Self {
        NqReport::new()
    }
}

pub fn nq_question(ctx: &RingContext) -> NqReport {
    let mut rep = NqReport { rings: 1, ..NqReport::new() };
    if ctx.is_quasilocal() {
        return rep;
    }
    for k in ctx.proper() {
        rep.ideals_examined += 1;
        if !(ctx.w1(k) && !ctx.holds(k, Predicate::WeaklyPrimary)) {
            continue;
        }
        let i = ctx.ideal(k);
        let maximal_annihilators =
            i.elements().filter(|&x| ctx.is_maximal(ctx.annihilator(x))).map(|x| ctx.name(x).to_string()).collect();
        let oracle_confirmed = oracle::holds(W1, i) && !oracle::holds(Predicate::WeaklyPrimary, i);
        rep.candidates.push(NqCandidate {
            ring: ctx.label.clone(),
            ideal: i.to_string(),
            elements: i.display_set(),
            maximal_annihilators,
            oracle_confirmed,
        });
    }
    rep
}

/// An ideal satisfying one predicate but not another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationHit {
    pub ring: String,
    pub ideal: String,
    pub elements: String,
    /// Why the second predicate fails.
    pub witness: Vec<String>,
    pub oracle_confirmed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationReport {
    pub a: Predicate,
    pub b: Predicate,
    pub rings: u64,
    pub ideals_examined: u64,
    pub hits: Vec<SeparationHit>,
}

impl SeparationReport {
    pub fn new(a: Predicate, b: Predicate) -> SeparationReport {
        SeparationReport { a, b, rings: 0, ideals_examined: 0, hits: Vec::new() }
    }

    pub fn merge(&mut self, other: SeparationReport) {
        self.rings += other.rings;
        self.ideals_examined += other.ideals_examined;
        self.hits.extend(other.hits);
    }
}

pub fn separation(ctx: &RingContext, a: Predicate, b: Predicate) -> SeparationReport {
    let mut rep = SeparationReport { rings: 1, ..SeparationReport::new(a, b) };
    for k in ctx.proper() {
        rep.ideals_examined += 1;
        if !(ctx.holds(k, a) && !ctx.holds(k, b)) {
            continue;
        }
        let i = ctx.ideal(k);
        let witness = ctx.record(k).witness(b).unwrap_or(&[]).iter().map(|&x| ctx.name(x).to_string()).collect();
        rep.hits.push(SeparationHit {
            ring: ctx.label.clone(),
            ideal: i.to_string(),
            elements: i.display_set(),
            witness,
            oracle_confirmed: oracle::holds(a, i) && !oracle::holds(b, i),
        });
    }
    rep
}
