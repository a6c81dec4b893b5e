//! One-ring summary: structural flags, the ideal lattice with per-ideal
//! classification, and notes on intersections of weakly 1AP ideals.

use std::collections::BTreeMap;

use absorb_core::{ring_class, Predicate};
use serde::{Deserialize, Serialize};

use crate::context::RingContext;
use crate::verifiers::W1;

pub const RING_SCHEMA: &str = "absorb-ring/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSummary {
    pub ideal: String,
    pub elements: String,
    /// `zero`, `whole`, `prime`, `maximal`, `radical`.
    pub tags: Vec<String>,
    pub radical: String,
    /// Empty for the whole ring.
    pub verdicts: BTreeMap<Predicate, bool>,
    pub witnesses: BTreeMap<Predicate, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionNote {
    pub left: String,
    pub right: String,
    pub intersection: String,
    pub weakly_1ap: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub schema: String,
    pub ring: String,
    pub order: usize,
    pub flags: BTreeMap<String, bool>,
    pub ideals: Vec<IdealSummary>,
    pub intersections: Vec<IntersectionNote>,
}

fn zero_note(ctx: &RingContext, j: usize, k: usize) -> String {
    let z = ctx.zero();
    let mut s = format!(
        "{} ∩ {} = (0) IS weakly 1AP: the zero ideal satisfies the definition vacuously",
        ctx.ideal_name(j),
        ctx.ideal_name(k)
    );
    if let Some(w) = ctx.record(z).witness(Predicate::OneAbsorbingPrimary) {
        let names: Vec<&str> = w.iter().map(|&x| ctx.name(x)).collect();
        s.push_str(&format!(" (it is not 1AP, witness ({}))", names.join(",")));
    }
    s.push_str("; a claim that this intersection is not weakly 1AP contradicts the definition");
    s
}

pub fn ring_report(ctx: &RingContext) -> RingReport {
    let r = &ctx.ring;
    let flags = [
        ("field", ring_class::is_field(r)),
        ("domain", ring_class::is_domain(r)),
        ("reduced", ring_class::is_reduced(r)),
        ("von_neumann_regular", ring_class::is_von_neumann_regular(r)),
        ("quasilocal", ctx.is_quasilocal()),
        ("divided", ring_class::is_divided(r, &ctx.ideals)),
        ("chained", ring_class::is_chained(r)),
        ("u_ring", ctx.is_u_ring()),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();

    let ideals = (0..ctx.len())
        .map(|k| {
            let mut tags = Vec::new();
            if k == ctx.zero() {
                tags.push("zero");
            }
            if k == ctx.whole() {
                tags.push("whole");
            }
            if ctx.is_prime(k) {
                tags.push("prime");
            }
            if ctx.is_maximal(k) {
                tags.push("maximal");
            }
            if ctx.radical(k) == k {
                tags.push("radical");
            }
            let (verdicts, witnesses) = if k == ctx.whole() {
                (BTreeMap::new(), BTreeMap::new())
            } else {
                let rec = ctx.record(k);
                let w = rec
                    .witnesses
                    .iter()
                    .map(|(p, w)| (*p, w.iter().map(|&x| ctx.name(x).to_string()).collect()))
                    .collect();
                (rec.verdicts.clone(), w)
            };
            IdealSummary {
                ideal: ctx.ideal_name(k),
                elements: ctx.ideal(k).display_set(),
                tags: tags.into_iter().map(String::from).collect(),
                radical: ctx.ideal_name(ctx.radical(k)),
                verdicts,
                witnesses,
            }
        })
        .collect();

    // incomparable pairs of weakly 1AP ideals
    let w1: Vec<usize> = ctx.proper().filter(|&k| ctx.w1(k)).collect();
    let mut intersections = Vec::new();
    for (a, &j) in w1.iter().enumerate() {
        for &k in &w1[a + 1..] {
            if ctx.subset(j, k) || ctx.subset(k, j) {
                continue;
            }
            let m = ctx.intersection(j, k);
            intersections.push(IntersectionNote {
                left: ctx.ideal_name(j),
                right: ctx.ideal_name(k),
                intersection: ctx.ideal_name(m),
                weakly_1ap: ctx.holds(m, W1),
                note: (m == ctx.zero()).then(|| zero_note(ctx, j, k)),
            });
        }
    }

    RingReport {
        schema: RING_SCHEMA.to_string(),
        ring: ctx.label.clone(),
        order: r.order(),
        flags,
        ideals,
        intersections,
    }
}
