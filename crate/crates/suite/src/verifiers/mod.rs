//! Exhaustive checks of the structure theory of weakly 1-absorbing primary
//! ideals. Each verifier runs on one ring at a time and records, per part,
//! how many instances met the hypotheses and how many were skipped.

mod basic;
mod ch;
mod products;
mod transfer;
mod triples;

use absorb_core::{Predicate, Predicate as P};

use crate::context::RingContext;
use crate::report::{Draft, Tally};

pub struct Theorem {
    pub id: &'static str,
    pub title: &'static str,
    pub parts: &'static [&'static str],
    pub run: fn(&RingContext, &mut Tally),
}

impl std::fmt::Debug for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Theorem").field("id", &self.id).finish_non_exhaustive()
    }
}

pub const W1: Predicate = P::WeaklyOneAbsorbingPrimary;
pub const AP1: Predicate = P::OneAbsorbingPrimary;

pub static THEOREMS: &[Theorem] = &[
    Theorem {
        id: "tr",
        title: "implication lattice around weakly 1-absorbing primary ideals",
        parts: basic::TR_PARTS,
        run: basic::tr,
    },
    Theorem {
        id: "max",
        title: "weakly 1AP with maximal radical is primary",
        parts: basic::MAX_PARTS,
        run: basic::max,
    },
    Theorem {
        id: "radical_prime",
        title: "nonzero weakly 1AP ideals of reduced rings have prime radical",
        parts: basic::RADICAL_PARTS,
        run: basic::radical_prime,
    },
    Theorem {
        id: "vnr",
        title: "von Neumann regular rings: weakly 1AP, primary and 1AP agree",
        parts: basic::VNR_PARTS,
        run: basic::vnr,
    },
    Theorem {
        id: "nq",
        title: "non-quasilocal rings without maximal annihilators: weakly 1AP iff weakly primary",
        parts: basic::NQ_PARTS,
        run: basic::nq,
    },
    Theorem {
        id: "nounit",
        title: "nonunit shift hypothesis makes weakly 1AP ideals weakly primary",
        parts: basic::NOUNIT_PARTS,
        run: basic::nounit,
    },
    Theorem {
        id: "divided",
        title: "reduced divided and chained rings: weakly 1AP iff weakly primary",
        parts: basic::DIVIDED_PARTS,
        run: basic::divided,
    },
    Theorem {
        id: "ch",
        title: "u-rings: five equivalent characterizations",
        parts: ch::PARTS,
        run: ch::ch,
    },
    Theorem {
        id: "triple_zero",
        title: "consequences of a 1-triple-zero",
        parts: triples::TRIPLE_ZERO_PARTS,
        run: triples::triple_zero,
    },
    Theorem {
        id: "irreducible",
        title: "irreducible witnesses for weakly 1AP ideals that are not weakly primary",
        parts: basic::IRREDUCIBLE_PARTS,
        run: basic::irreducible,
    },
    Theorem {
        id: "intersection",
        title: "intersections of weakly 1AP ideals with a common radical",
        parts: basic::INTERSECTION_PARTS,
        run: basic::intersection,
    },
    Theorem {
        id: "residual",
        title: "(I:c) is weakly primary for weakly 1AP I and nonunit c outside I",
        parts: basic::RESIDUAL_PARTS,
        run: basic::residual,
    },
    Theorem {
        id: "product_w1",
        title: "weakly 1AP ideals of a product of two non-fields",
        parts: products::W1_PARTS,
        run: products::product_w1,
    },
    Theorem {
        id: "fi",
        title: "products where every proper ideal is weakly 1AP",
        parts: products::FI_PARTS,
        run: products::fi,
    },
    Theorem {
        id: "hom",
        title: "preimages and images under ring homomorphisms",
        parts: transfer::HOM_PARTS,
        run: transfer::hom,
    },
    Theorem {
        id: "quotient",
        title: "passing to and from quotient rings",
        parts: transfer::QUOTIENT_PARTS,
        run: transfer::quotient,
    },
    Theorem {
        id: "localization",
        title: "passing to and from localizations",
        parts: transfer::LOCALIZATION_PARTS,
        run: transfer::localization,
    },
    Theorem {
        id: "free_triple",
        title: "free 1-triple-zero criteria",
        parts: triples::FREE_PARTS,
        run: triples::free_triple,
    },
];

/// Statements deliberately not verified, with the reason.
pub static OUT_OF_SCOPE: &[(&str, &str)] = &[
    ("dedekind", "concerns Dedekind domains; the only finite ones are fields"),
    ("polynomial", "concerns polynomial rings R[X], which are infinite"),
    ("local_kxy", "counterexample lives in a localization of K[x,y], which is infinite"),
];

pub fn find(id: &str) -> Option<&'static Theorem> {
    THEOREMS.iter().find(|t| t.id.eq_ignore_ascii_case(id))
}

/// Draft for "predicate `p` fails on ideal `k`", carrying its witness.
fn failed(ctx: &RingContext, k: usize, p: Predicate, detail: impl Into<String>) -> Draft {
    let i = ctx.ideal(k);
    let w = ctx.record(k).witness(p).unwrap_or(&[]);
    Draft::new(detail).ideal(i).witness(&ctx.ring, w).claim(i, p, false)
}

/// Checks `concl` on ideal `k` when `hyp` holds; `given` lists the predicate
/// values the hypothesis relied on.
fn conclude(
    t: &mut Tally,
    ctx: &RingContext,
    part: usize,
    k: usize,
    hyp: bool,
    given: &[(Predicate, bool)],
    concl: Predicate,
) {
    if !hyp {
        t.skip(part);
        return;
    }
    let ok = ctx.holds(k, concl);
    t.check(part, ok, || {
        let mut d = failed(ctx, k, concl, format!("{concl} fails"));
        for &(p, v) in given {
            d = d.claim(ctx.ideal(k), p, v);
        }
        d
    });
}

/// Checks that all `preds` take the same value on ideal `k`.
fn equivalent(t: &mut Tally, ctx: &RingContext, part: usize, k: usize, preds: &[Predicate]) {
    let vals: Vec<bool> = preds.iter().map(|&p| ctx.holds(k, p)).collect();
    let ok = vals.iter().all(|&v| v == vals[0]);
    t.check(part, ok, || {
        let text: Vec<String> = preds.iter().zip(&vals).map(|(p, v)| format!("{p}={v}")).collect();
        let i = ctx.ideal(k);
        let mut d = Draft::new(text.join(", ")).ideal(i);
        for (&p, &v) in preds.iter().zip(&vals) {
            d = d.claim(i, p, v);
        }
        d
    });
}
