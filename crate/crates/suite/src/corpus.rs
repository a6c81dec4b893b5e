//! Deterministic ring corpora.

use std::sync::Arc;

use absorb_core::catalog;
use absorb_core::ideal::all_ideals;
use absorb_core::{quotient, FiniteRing, RingError, DEFAULT_MAX_ORDER};
use serde::{Deserialize, Serialize};

use absorb_core::ideal::DEFAULT_MAX_IDEALS;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusBounds {
    /// Rings above this order are skipped (and counted).
    pub max_order: usize,
    /// Rings with more ideals than this are skipped (and counted).
    pub max_ideals: usize,
    /// `Z_n` for `2 <= n <= zn_max`.
    pub zn_max: usize,
    /// Unordered pairs `Z_a x Z_b` with `2 <= a <= b <= pair_max`.
    pub pair_max: usize,
    /// Idealizations `Z_n(+)(d)` for `2 <= n <= idealize_max`, `d | n`.
    pub idealize_max: usize,
    /// Add the quotients of the products and idealizations by their nonzero
    /// proper ideals.
    pub quotients: bool,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds {
            max_order: DEFAULT_MAX_ORDER,
            max_ideals: DEFAULT_MAX_IDEALS,
            zn_max: 60,
            pair_max: 9,
            idealize_max: 16,
            quotients: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub ring: Arc<FiniteRing>,
}

impl CorpusEntry {
    pub fn new(ring: Arc<FiniteRing>) -> CorpusEntry {
        CorpusEntry { label: ring.label().to_string(), ring }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub label: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub skipped: Vec<Skipped>,
    pub max_ideals: usize,
}

fn zn(n: usize) -> Arc<FiniteRing> {
    Arc::new(FiniteRing::zn(n).expect("n >= 2"))
}

impl Corpus {
    pub fn empty() -> Corpus {
        Corpus { max_ideals: DEFAULT_MAX_IDEALS, ..Corpus::default() }
    }

    /// Given rings, filtered by the order bound.
    pub fn from_rings(rings: impl IntoIterator<Item = Arc<FiniteRing>>, bounds: &CorpusBounds) -> Corpus {
        let mut c = Corpus { max_ideals: bounds.max_ideals, ..Corpus::default() };
        for r in rings {
            c.push(r, bounds);
        }
        c
    }

    fn push(&mut self, ring: Arc<FiniteRing>, bounds: &CorpusBounds) -> bool {
        if ring.order() > bounds.max_order {
            self.skipped.push(Skipped {
                label: ring.label().to_string(),
                reason: RingError::TooLarge { order: ring.order(), max: bounds.max_order }.to_string(),
            });
            return false;
        }
        self.entries.push(CorpusEntry::new(ring));
        true
    }

    /// The standard corpus: `Z_n`, pairs and triples of small `Z_n`,
    /// idealizations, their quotients, and the catalog table rings.
    pub fn standard(bounds: &CorpusBounds) -> Corpus {
        let mut c = Corpus { max_ideals: bounds.max_ideals, ..Corpus::default() };
        for n in 2..=bounds.zn_max {
            c.push(zn(n), bounds);
        }
        let mut composite: Vec<Arc<FiniteRing>> = Vec::new();
        for a in 2..=bounds.pair_max {
            for b in a..=bounds.pair_max {
                let r = Arc::new(FiniteRing::product(vec![zn(a), zn(b)]).expect("two factors"));
                if c.push(Arc::clone(&r), bounds) {
                    composite.push(r);
                }
            }
        }
        for t in [[2, 2, 2], [2, 2, 3], [2, 3, 3], [3, 3, 3]] {
            let r = Arc::new(FiniteRing::product(t.iter().map(|&k| zn(k)).collect()).expect("three factors"));
            if c.push(Arc::clone(&r), bounds) {
                composite.push(r);
            }
        }
        for n in 2..=bounds.idealize_max {
            for d in (1..=n).filter(|d| n % d == 0) {
                let r = Arc::new(FiniteRing::idealization(n, d).expect("d divides n"));
                if c.push(Arc::clone(&r), bounds) {
                    composite.push(r);
                }
            }
        }
        if bounds.quotients {
            for r in &composite {
                let ideals = match all_ideals(r, bounds.max_ideals) {
                    Ok(ideals) => ideals,
                    Err(e) => {
                        c.skipped.push(Skipped { label: format!("quot({},*)", r.label()), reason: e.to_string() });
                        continue;
                    }
                };
                for j in ideals.iter().filter(|j| j.is_proper() && !j.is_zero()) {
                    let (q, _) = quotient(r, j).expect("proper ideal");
                    c.push(q, bounds);
                }
            }
        }
        c.push(Arc::new(catalog::f2xy_mod_square()), bounds);
        c
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
