use std::collections::BTreeMap;

use absorb_core::{oracle, FiniteRing, Ideal, Predicate};
use serde::{Deserialize, Serialize};

use crate::context::RingContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Checked on at least one instance, no violations.
    Verified,
    /// The hypotheses never held on the corpus.
    Vacuous,
    /// At least one violation.
    Violated,
    OutOfScope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartStats {
    pub part: String,
    /// Instances where the hypotheses held and the conclusion was tested.
    pub checked: u64,
    /// Instances rejected by the hypotheses.
    pub skipped: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub ring: String,
    pub part: String,
    pub ideals: Vec<String>,
    pub witness: Vec<String>,
    pub detail: String,
    /// The predicate values the violation relies on were recomputed by the
    /// definition-literal oracle and agree.
    pub oracle_confirmed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub title: String,
    pub status: Status,
    pub rings: u64,
    pub instances: u64,
    pub parts: Vec<PartStats>,
    pub violations: Vec<Violation>,
    /// Counters for side observations (e.g. alternative readings of a
    /// hypothesis), keyed by a short description.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub observations: BTreeMap<String, u64>,
    /// Summed per-ring wall time; only filled when timings are requested so
    /// that reports are reproducible byte for byte.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl TheoremReport {
    pub fn new(theorem: &str, title: &str, parts: &[&str]) -> TheoremReport {
        TheoremReport {
            theorem: theorem.to_string(),
            title: title.to_string(),
            status: Status::Vacuous,
            rings: 0,
            instances: 0,
            parts: parts
                .iter()
                .map(|p| PartStats { part: p.to_string(), checked: 0, skipped: 0 })
                .collect(),
            violations: Vec::new(),
            observations: BTreeMap::new(),
            elapsed_ms: None,
        }
    }

    /// Folds a per-ring tally into the report.
    pub fn absorb(&mut self, t: Outcome) {
        self.rings += 1;
        for (p, (c, s)) in self.parts.iter_mut().zip(t.counts) {
            p.checked += c;
            p.skipped += s;
        }
        self.violations.extend(t.violations);
        for (k, v) in t.observations {
            *self.observations.entry(k).or_default() += v;
        }
    }

    pub fn finish(&mut self) {
        self.instances = self.parts.iter().map(|p| p.checked).sum();
        self.status = if !self.violations.is_empty() {
            Status::Violated
        } else if self.instances == 0 {
            Status::Vacuous
        } else {
            Status::Verified
        };
    }
}

/// A claimed predicate value that a violation depends on.
pub struct Claim {
    pub ideal: Ideal,
    pub predicate: Predicate,
    pub value: bool,
}


/// Counts and violations for one ring and one verifier.
pub struct Tally<'a> {
    ctx: &'a RingContext,
    parts: &'static [&'static str],
    counts: Vec<(u64, u64)>,
    violations: Vec<Violation>,
    observations: BTreeMap<String, u64>,
}

impl<'a> Tally<'a> {
    pub fn new(ctx: &'a RingContext, parts: &'static [&'static str]) -> Tally<'a> {
        Tally { ctx, parts, counts: vec![(0, 0); parts.len()], violations: Vec::new(), observations: BTreeMap::new() }
    }

    pub fn skip(&mut self, part: usize) {
        self.counts[part].1 += 1;
    }

    pub fn skip_n(&mut self, part: usize, n: u64) {
        self.counts[part].1 += n;
    }

    pub fn checked(&self, part: usize) -> u64 {
        self.counts[part].0
    }

    /// Records one tested instance; on failure `violation` builds the report
    /// entry lazily.
    pub fn check(&mut self, part: usize, ok: bool, violation: impl FnOnce() -> Draft) {
        self.counts[part].0 += 1;
        if !ok {
            let d = violation();
            let confirmed = d.claims.iter().all(|c| oracle::holds(c.predicate, &c.ideal) == c.value);
            self.violations.push(Violation {
                ring: self.ctx.label.clone(),
                part: self.parts[part].to_string(),
                ideals: d.ideals,
                witness: d.witness,
                detail: d.detail,
                oracle_confirmed: confirmed,
            });
        }
    }

    pub fn observe(&mut self, key: &str, n: u64) {
        if n > 0 {
            *self.observations.entry(key.to_string()).or_default() += n;
        }
    }

    pub fn finish(self) -> Outcome {
        Outcome { counts: self.counts, violations: self.violations, observations: self.observations }
    }
}

/// A finished tally, detached from its ring context.
pub struct Outcome {
    counts: Vec<(u64, u64)>,
    violations: Vec<Violation>,
    observations: BTreeMap<String, u64>,
}

/// Material for one violation entry.
pub struct Draft {
    pub ideals: Vec<String>,
    pub witness: Vec<String>,
    pub detail: String,
    pub claims: Vec<Claim>,
}

impl Draft {
    pub fn new(detail: impl Into<String>) -> Draft {
        Draft { ideals: Vec::new(), witness: Vec::new(), detail: detail.into(), claims: Vec::new() }
    }

    pub fn ideal(mut self, i: &Ideal) -> Self {
        self.ideals.push(format!("{} = {}", i, i.display_set()));
        self
    }

    pub fn witness(mut self, ring: &FiniteRing, w: &[usize]) -> Self {
        self.witness.extend(w.iter().map(|&x| ring.name(x).to_string()));
        self
    }

    /// Records that the violation relies on `p(i) == value`.
    pub fn claim(mut self, i: &Ideal, p: Predicate, value: bool) -> Self {
        self.claims.push(Claim { ideal: i.clone(), predicate: p, value });
        self
    }
}
