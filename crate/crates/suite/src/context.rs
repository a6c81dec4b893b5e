//! Per-ring cache shared by the verifiers: the ideal lattice, radicals,
//! classifications and ideal arithmetic tables.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use absorb_core::classify::Scanner;
use absorb_core::ideal::{all_ideals, annihilator, is_prime};
use absorb_core::ring_class;
use absorb_core::{FiniteRing, Ideal, Predicate, PropertyRecord, Result};
use fixedbitset::FixedBitSet;

pub struct RingContext {
    pub label: String,
    pub ring: Arc<FiniteRing>,
    pub ideals: Vec<Ideal>,
    index: HashMap<FixedBitSet, usize>,
    radical: Vec<usize>,
    maximal: Vec<bool>,
    prime: Vec<bool>,
    records: Vec<OnceLock<PropertyRecord>>,
    products: OnceLock<Vec<usize>>,
    residuals: OnceLock<Vec<usize>>,
    ann_elem: OnceLock<Vec<usize>>,
    u_ring: OnceLock<bool>,
}

impl RingContext {
    pub fn new(label: impl Into<String>, ring: Arc<FiniteRing>, max_ideals: usize) -> Result<RingContext> {
        let ideals = all_ideals(&ring, max_ideals)?;
        let index: HashMap<FixedBitSet, usize> =
            ideals.iter().enumerate().map(|(k, i)| (i.members().clone(), k)).collect();
        let radical = ideals.iter().map(|i| index[i.radical().members()]).collect();
        let prime: Vec<bool> = ideals.iter().map(is_prime).collect();
        let maximal = ideals
            .iter()
            .map(|i| i.is_proper() && !ideals.iter().any(|j| j.is_proper() && j.len() > i.len() && i.is_subset(j)))
            .collect();
        let records = ideals.iter().map(|_| OnceLock::new()).collect();
        Ok(RingContext {
            label: label.into(),
            ring,
            ideals,
            index,
            radical,
            maximal,
            prime,
            records,
            products: OnceLock::new(),
            residuals: OnceLock::new(),
            ann_elem: OnceLock::new(),
            u_ring: OnceLock::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideal(&self, k: usize) -> &Ideal {
        &self.ideals[k]
    }

    pub fn index_of(&self, i: &Ideal) -> usize {
        self.index_of_bits(i.members())
    }

    pub fn index_of_bits(&self, bits: &FixedBitSet) -> usize {
        *self.index.get(bits).expect("every ideal of the ring is enumerated")
    }

    /// Index of the zero ideal (first in size order).
    pub fn zero(&self) -> usize {
        0
    }

    /// Index of the whole ring (last in size order).
    pub fn whole(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn proper(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.ideals.len() - 1
    }

    pub fn radical(&self, k: usize) -> usize {
        self.radical[k]
    }

    pub fn is_maximal(&self, k: usize) -> bool {
        self.maximal[k]
    }

    pub fn is_prime(&self, k: usize) -> bool {
        self.prime[k]
    }

    pub fn maximal_count(&self) -> usize {
        self.maximal.iter().filter(|&&m| m).count()
    }

    pub fn is_quasilocal(&self) -> bool {
        self.maximal_count() == 1
    }

    pub fn is_u_ring(&self) -> bool {
        *self.u_ring.get_or_init(|| ring_class::is_u_ring(&self.ideals))
    }

    /// Full classification of a proper ideal, computed once.
    pub fn record(&self, k: usize) -> &PropertyRecord {
        assert!(k != self.whole(), "the whole ring is not classified");
        self.records[k].get_or_init(|| {
            Scanner::with_radical(&self.ideals[k], self.ideals[self.radical[k]].clone())
                .expect("proper ideal")
                .record()
        })
    }

    pub fn holds(&self, k: usize, p: Predicate) -> bool {
        self.record(k).get(p)
    }

    pub fn w1(&self, k: usize) -> bool {
        self.holds(k, Predicate::WeaklyOneAbsorbingPrimary)
    }

    /// `I_j I_k` as an ideal index.
    pub fn product(&self, j: usize, k: usize) -> usize {
        let n = self.ideals.len();
        self.products.get_or_init(|| {
            let mut t = vec![0; n * n];
            for a in 0..n {
                for b in a..n {
                    let p = self.ideals[a].product(&self.ideals[b]).expect("same ring");
                    let idx = self.index_of(&p);
                    t[a * n + b] = idx;
                    t[b * n + a] = idx;
                }
            }
            t
        })[j * n + k]
    }

    /// `(I_i : I_j)` as an ideal index.
    pub fn residual(&self, i: usize, j: usize) -> usize {
        let n = self.ideals.len();
        self.residuals.get_or_init(|| {
            let mut t = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    let r = self.ideals[a].residual(&self.ideals[b]).expect("same ring");
                    t[a * n + b] = self.index_of(&r);
                }
            }
            t
        })[i * n + j]
    }

    /// `(I_i : x)` as an ideal index.
    pub fn residual_element(&self, i: usize, x: usize) -> usize {
        self.index_of(&self.ideals[i].residual_element(x))
    }

    pub fn intersection(&self, j: usize, k: usize) -> usize {
        let mut bits = self.ideals[j].members().clone();
        bits.intersect_with(self.ideals[k].members());
        self.index_of_bits(&bits)
    }

    /// `ann(x)` as an ideal index, for each element `x`.
    pub fn annihilator(&self, x: usize) -> usize {
        self.ann_elem.get_or_init(|| {
            self.ring
                .elements()
                .map(|y| self.index_of(&annihilator(&self.ring, y)))
                .collect()
        })[x]
    }

    pub fn subset(&self, j: usize, k: usize) -> bool {
        self.ideals[j].is_subset(&self.ideals[k])
    }

    /// Ideal index of `x I_k`.
    pub fn scale(&self, x: usize, k: usize) -> usize {
        self.index_of(&self.ideals[k].scale(x))
    }

    pub fn name(&self, x: usize) -> &str {
        self.ring.name(x)
    }

    /// Generator form of an ideal, e.g. `(2)`.
    pub fn ideal_name(&self, k: usize) -> String {
        self.ideals[k].to_string()
    }
}
