//! Decision procedures for the prime-like ideal properties, each returning
//! the lexicographically first violating tuple when the property fails.
//!
//! The 1-absorbing family quantifies over nonunits only; the 2-absorbing
//! family and the pair predicates range over all elements.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, RingError};
use crate::ideal::Ideal;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    Prime,
    WeaklyPrime,
    Primary,
    WeaklyPrimary,
    Semiprimary,
    TwoAbsorbing,
    WeaklyTwoAbsorbing,
    TwoAbsorbingPrimary,
    WeaklyTwoAbsorbingPrimary,
    OneAbsorbingPrimary,
    WeaklyOneAbsorbingPrimary,
}

impl Predicate {
    pub const ALL: [Predicate; 11] = [
        Predicate::Prime,
        Predicate::WeaklyPrime,
        Predicate::Primary,
        Predicate::WeaklyPrimary,
        Predicate::Semiprimary,
        Predicate::TwoAbsorbing,
        Predicate::WeaklyTwoAbsorbing,
        Predicate::TwoAbsorbingPrimary,
        Predicate::WeaklyTwoAbsorbingPrimary,
        Predicate::OneAbsorbingPrimary,
        Predicate::WeaklyOneAbsorbingPrimary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Prime => "prime",
            Predicate::WeaklyPrime => "weakly_prime",
            Predicate::Primary => "primary",
            Predicate::WeaklyPrimary => "weakly_primary",
            Predicate::Semiprimary => "semiprimary",
            Predicate::TwoAbsorbing => "two_absorbing",
            Predicate::WeaklyTwoAbsorbing => "weakly_two_absorbing",
            Predicate::TwoAbsorbingPrimary => "two_absorbing_primary",
            Predicate::WeaklyTwoAbsorbingPrimary => "weakly_two_absorbing_primary",
            Predicate::OneAbsorbingPrimary => "one_absorbing_primary",
            Predicate::WeaklyOneAbsorbingPrimary => "weakly_one_absorbing_primary",
        }
    }

    /// Compact name used in listings, e.g. `weakly_1AP`.
    pub fn short(self) -> &'static str {
        match self {
            Predicate::Prime => "prime",
            Predicate::WeaklyPrime => "weakly_prime",
            Predicate::Primary => "primary",
            Predicate::WeaklyPrimary => "weakly_primary",
            Predicate::Semiprimary => "semiprimary",
            Predicate::TwoAbsorbing => "2A",
            Predicate::WeaklyTwoAbsorbing => "weakly_2A",
            Predicate::TwoAbsorbingPrimary => "2AP",
            Predicate::WeaklyTwoAbsorbingPrimary => "weakly_2AP",
            Predicate::OneAbsorbingPrimary => "1AP",
            Predicate::WeaklyOneAbsorbingPrimary => "weakly_1AP",
        }
    }

    /// Accepts either the long or the short name, case-insensitively.
    pub fn from_name(s: &str) -> Option<Predicate> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s || p.short().to_ascii_lowercase() == s)
    }

    fn guarded(self) -> bool {
        matches!(
            self,
            Predicate::WeaklyPrime
                | Predicate::WeaklyPrimary
                | Predicate::WeaklyTwoAbsorbing
                | Predicate::WeaklyTwoAbsorbingPrimary
                | Predicate::WeaklyOneAbsorbingPrimary
        )
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one predicate. A failed predicate always carries a witness:
/// a pair for the pair predicates (for semiprimary, a pair breaking primality
/// of the radical) and a triple for the absorbing ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    fn from_witness(w: Option<Vec<usize>>) -> Verdict {
        Verdict { holds: w.is_none(), witness: w }
    }
}

/// Implications that hold between the predicates for every proper ideal.
pub const IMPLICATIONS: [(Predicate, Predicate); 15] = [
    (Predicate::WeaklyPrime, Predicate::WeaklyOneAbsorbingPrimary),
    (Predicate::WeaklyPrimary, Predicate::WeaklyOneAbsorbingPrimary),
    (Predicate::OneAbsorbingPrimary, Predicate::WeaklyOneAbsorbingPrimary),
    (Predicate::WeaklyOneAbsorbingPrimary, Predicate::WeaklyTwoAbsorbingPrimary),
    (Predicate::Prime, Predicate::Primary),
    (Predicate::Primary, Predicate::OneAbsorbingPrimary),
    (Predicate::Prime, Predicate::Semiprimary),
    (Predicate::Primary, Predicate::Semiprimary),
    (Predicate::Primary, Predicate::TwoAbsorbingPrimary),
    (Predicate::Prime, Predicate::WeaklyPrime),
    (Predicate::Primary, Predicate::WeaklyPrimary),
    (Predicate::Prime, Predicate::TwoAbsorbing),
    (Predicate::TwoAbsorbing, Predicate::WeaklyTwoAbsorbing),
    (Predicate::TwoAbsorbing, Predicate::TwoAbsorbingPrimary),
    (Predicate::TwoAbsorbingPrimary, Predicate::WeaklyTwoAbsorbingPrimary),
];

/// Every predicate's verdict for one proper ideal, with witnesses for the
/// failures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyRecord {
    pub verdicts: BTreeMap<Predicate, bool>,
    pub witnesses: BTreeMap<Predicate, Vec<usize>>,
}

impl PropertyRecord {
    pub fn get(&self, p: Predicate) -> bool {
        self.verdicts[&p]
    }

    pub fn witness(&self, p: Predicate) -> Option<&[usize]> {
        self.witnesses.get(&p).map(|w| w.as_slice())
    }

    /// Implications from [`IMPLICATIONS`] whose premise holds and conclusion fails.
    pub fn lattice_violations(&self) -> Vec<(Predicate, Predicate)> {
        IMPLICATIONS
            .iter()
            .copied()
            .filter(|&(a, b)| self.get(a) && !self.get(b))
            .collect()
    }
}

/// A nonunit triple with `abc = 0`, `ab ∉ I` and `c ∉ sqrt(I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TripleZero {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

const UNSET: u32 = u32::MAX;
const NONE: u32 = u32::MAX - 1;

/// Precomputed state for scanning one proper ideal.
pub struct Scanner<'a> {
    ideal: &'a Ideal,
    radical: Ideal,
}

impl<'a> Scanner<'a> {
    pub fn new(ideal: &'a Ideal) -> Result<Scanner<'a>> {
        if !ideal.is_proper() {
            return Err(RingError::ImproperIdeal);
        }
        Ok(Scanner { radical: ideal.radical(), ideal })
    }

    /// Reuses a radical computed elsewhere.
    pub fn with_radical(ideal: &'a Ideal, radical: Ideal) -> Result<Scanner<'a>> {
        if !ideal.is_proper() {
            return Err(RingError::ImproperIdeal);
        }
        Ok(Scanner { ideal, radical })
    }

    fn ring(&self) -> &FiniteRing {
        self.ideal.ring()
    }

    pub fn radical(&self) -> &Ideal {
        &self.radical
    }

    pub fn check(&self, p: Predicate) -> Verdict {
        let w = match p {
            Predicate::Prime | Predicate::WeaklyPrime => {
                prime_pair(self.ring(), self.ideal, p.guarded())
            }
            Predicate::Primary | Predicate::WeaklyPrimary => self.primary_pair(p.guarded()),
            Predicate::Semiprimary => prime_pair(self.ring(), &self.radical, false),
            Predicate::TwoAbsorbing | Predicate::WeaklyTwoAbsorbing => {
                self.two_absorbing(p.guarded())
            }
            Predicate::TwoAbsorbingPrimary | Predicate::WeaklyTwoAbsorbingPrimary => {
                self.two_absorbing_primary(p.guarded())
            }
            Predicate::OneAbsorbingPrimary | Predicate::WeaklyOneAbsorbingPrimary => {
                self.one_absorbing(p.guarded())
            }
        };
        Verdict::from_witness(w)
    }

    pub fn record(&self) -> PropertyRecord {
        let mut verdicts = BTreeMap::new();
        let mut witnesses = BTreeMap::new();
        for p in Predicate::ALL {
            let v = self.check(p);
            verdicts.insert(p, v.holds);
            if let Some(w) = v.witness {
                witnesses.insert(p, w);
            }
        }
        PropertyRecord { verdicts, witnesses }
    }

    fn primary_pair(&self, guarded: bool) -> Option<Vec<usize>> {
        let ring = self.ring();
        let i = self.ideal;
        let outside_rad: Vec<usize> =
            ring.elements().filter(|&b| !self.radical.contains(b)).collect();
        for a in ring.elements().filter(|&a| !i.contains(a)) {
            for &b in &outside_rad {
                let p = ring.mul(a, b);
                if i.contains(p) && (!guarded || p != ring.zero()) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    /// Nonunit triples; the conclusion is symmetric in `a, b`, so the first
    /// witness has `a <= b`. For each value `p = ab` the smallest usable `c`
    /// is memoized.
    fn one_absorbing(&self, guarded: bool) -> Option<Vec<usize>> {
        let ring = self.ring();
        let i = self.ideal;
        let nu = ring.nonunits();
        let cands: Vec<usize> = nu.iter().copied().filter(|&c| !self.radical.contains(c)).collect();
        if cands.is_empty() {
            return None;
        }
        let mut memo = vec![UNSET; ring.order()];
        for (k, &a) in nu.iter().enumerate() {
            for &b in &nu[k..] {
                let p = ring.mul(a, b);
                if i.contains(p) {
                    continue;
                }
                if memo[p] == UNSET {
                    memo[p] = cands
                        .iter()
                        .copied()
                        .find(|&c| {
                            let q = ring.mul(p, c);
                            i.contains(q) && (!guarded || q != ring.zero())
                        })
                        .map_or(NONE, |c| c as u32);
                }
                if memo[p] != NONE {
                    return Some(vec![a, b, memo[p] as usize]);
                }
            }
        }
        None
    }

    fn residual_lists(&self) -> ResidualLists<'_> {
        ResidualLists { ring: self.ring(), ideal: self.ideal, lists: vec![None; self.ring().order()] }
    }

    /// Fully symmetric condition, so the first witness is sorted.
    fn two_absorbing(&self, guarded: bool) -> Option<Vec<usize>> {
        let ring = self.ring();
        let i = self.ideal;
        let mut res = self.residual_lists();
        for a in ring.elements() {
            for b in a..ring.order() {
                let p = ring.mul(a, b);
                if i.contains(p) {
                    continue;
                }
                for &c in res.get(p) {
                    let c = c as usize;
                    if c < b {
                        continue;
                    }
                    if guarded && ring.mul(p, c) == ring.zero() {
                        continue;
                    }
                    if !i.contains(ring.mul(b, c)) && !i.contains(ring.mul(a, c)) {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    }

    fn two_absorbing_primary(&self, guarded: bool) -> Option<Vec<usize>> {
        let ring = self.ring();
        let i = self.ideal;
        let rad = &self.radical;
        let mut res = self.residual_lists();
        for a in ring.elements() {
            for b in a..ring.order() {
                let p = ring.mul(a, b);
                if i.contains(p) {
                    continue;
                }
                for &c in res.get(p) {
                    let c = c as usize;
                    if guarded && ring.mul(p, c) == ring.zero() {
                        continue;
                    }
                    if !rad.contains(ring.mul(b, c)) && !rad.contains(ring.mul(a, c)) {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// Every 1-triple-zero, in lexicographic order.
    pub fn triple_zeros(&self) -> Vec<TripleZero> {
        let mut out = Vec::new();
        self.for_each_triple_zero(|t| {
            out.push(t);
            true
        });
        out
    }

    /// Visits 1-triple-zeros in lexicographic order until `f` returns false.
    pub fn for_each_triple_zero(&self, mut f: impl FnMut(TripleZero) -> bool) {
        let ring = self.ring();
        let i = self.ideal;
        let nu = ring.nonunits();
        let cands: Vec<usize> = nu.iter().copied().filter(|&c| !self.radical.contains(c)).collect();
        for &a in nu {
            for &b in nu {
                let p = ring.mul(a, b);
                if i.contains(p) {
                    continue;
                }
                for &c in &cands {
                    if ring.mul(p, c) == ring.zero() && !f(TripleZero { a, b, c }) {
                        return;
                    }
                }
            }
        }
    }

    /// `(a,b,c)` is a 1-triple-zero of this ideal.
    pub fn is_triple_zero(&self, a: usize, b: usize, c: usize) -> bool {
        let ring = self.ring();
        !ring.is_unit(a)
            && !ring.is_unit(b)
            && !ring.is_unit(c)
            && ring.mul3(a, b, c) == ring.zero()
            && !self.ideal.contains(ring.mul(a, b))
            && !self.radical.contains(c)
    }
}

/// Lazily built lists `{ c : pc ∈ I }` keyed by `p`.
struct ResidualLists<'a> {
    ring: &'a FiniteRing,
    ideal: &'a Ideal,
    lists: Vec<Option<Vec<u32>>>,
}

impl ResidualLists<'_> {
    fn get(&mut self, p: usize) -> &[u32] {
        if self.lists[p].is_none() {
            let l = self
                .ring
                .elements()
                .filter(|&c| self.ideal.contains(self.ring.mul(p, c)))
                .map(|c| c as u32)
                .collect();
            self.lists[p] = Some(l);
        }
        self.lists[p].as_deref().unwrap()
    }
}

fn prime_pair(ring: &FiniteRing, i: &Ideal, guarded: bool) -> Option<Vec<usize>> {
    let outside: Vec<usize> = ring.elements().filter(|&a| !i.contains(a)).collect();
    for (k, &a) in outside.iter().enumerate() {
        for &b in &outside[k..] {
            let p = ring.mul(a, b);
            if i.contains(p) && (!guarded || p != ring.zero()) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// Single predicate on a proper ideal.
pub fn check(p: Predicate, i: &Ideal) -> Result<Verdict> {
    Ok(Scanner::new(i)?.check(p))
}

pub fn is_weakly_one_absorbing_primary(i: &Ideal) -> Result<Verdict> {
    check(Predicate::WeaklyOneAbsorbingPrimary, i)
}

pub fn is_one_absorbing_primary(i: &Ideal) -> Result<Verdict> {
    check(Predicate::OneAbsorbingPrimary, i)
}

/// All predicates at once; the implication lattice is asserted in debug builds.
pub fn classify(i: &Ideal) -> Result<PropertyRecord> {
    let record = Scanner::new(i)?.record();
    debug_assert!(
        record.lattice_violations().is_empty(),
        "implication lattice broken for {}: {:?}",
        i.display_set(),
        record.lattice_violations()
    );
    Ok(record)
}

pub fn find_triple_zeros(i: &Ideal) -> Result<Vec<TripleZero>> {
    Ok(Scanner::new(i)?.triple_zeros())
}

/// Result of [`is_free_triple_zero`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeVerdict {
    pub free: bool,
    pub first_bad: Option<TripleZero>,
}

/// `I` is free of 1-triple-zeros with respect to `I1 I2 I3`: no
/// `(a,b,c) ∈ I1 × I2 × I3` is a 1-triple-zero of `I`. Requires all four
/// ideals proper and `I1 I2 I3 ⊆ I`.
pub fn is_free_triple_zero(i: &Ideal, i1: &Ideal, i2: &Ideal, i3: &Ideal) -> Result<FreeVerdict> {
    for j in [i, i1, i2, i3] {
        if !j.is_proper() {
            return Err(RingError::ImproperIdeal);
        }
    }
    let prod = i1.product(i2)?.product(i3)?;
    if !prod.is_subset(i) {
        return Err(RingError::Precondition("I1 I2 I3 is not contained in I".into()));
    }
    let scan = Scanner::new(i)?;
    for a in i1.elements() {
        for b in i2.elements() {
            for c in i3.elements() {
                if scan.is_triple_zero(a, b, c) {
                    return Ok(FreeVerdict { free: false, first_bad: Some(TripleZero { a, b, c }) });
                }
            }
        }
    }
    Ok(FreeVerdict { free: true, first_bad: None })
}
