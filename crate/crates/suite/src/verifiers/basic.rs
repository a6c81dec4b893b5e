use absorb_core::ring_class::{self, irreducible_elements};
use absorb_core::Predicate as P;
use fixedbitset::FixedBitSet;

use super::{conclude, equivalent, failed, W1, AP1};
use crate::context::RingContext;
use crate::report::{Draft, Tally};

pub const TR_PARTS: &[&str] = &[
    "weakly prime => weakly 1AP",
    "weakly primary => weakly 1AP",
    "1AP => weakly 1AP",
    "weakly 1AP => weakly 2AP-primary",
    "domain: weakly 1AP <=> 1AP",
    "quasilocal with maximal ideal sqrt(0): weakly 1AP",
];

pub fn tr(ctx: &RingContext, t: &mut Tally) {
    let domain = ring_class::is_domain(&ctx.ring);
    let nil = ctx.radical(ctx.zero());
    let nil_maximal = ctx.is_quasilocal() && ctx.is_maximal(nil);
    for k in ctx.proper() {
        let steps = [
            (P::WeaklyPrime, W1),
            (P::WeaklyPrimary, W1),
            (AP1, W1),
            (W1, P::WeaklyTwoAbsorbingPrimary),
        ];
        for (part, (from, to)) in steps.into_iter().enumerate() {
            conclude(t, ctx, part, k, ctx.holds(k, from), &[(from, true)], to);
        }
        if domain {
            equivalent(t, ctx, 4, k, &[W1, AP1]);
        } else {
            t.skip(4);
        }
        conclude(t, ctx, 5, k, nil_maximal, &[], W1);
    }
}

pub const MAX_PARTS: &[&str] = &["sqrt(I) maximal => primary", "sqrt(I) maximal => 1AP"];

pub fn max(ctx: &RingContext, t: &mut Tally) {
    for k in ctx.proper() {
        let hyp = ctx.w1(k) && ctx.is_maximal(ctx.radical(k));
        conclude(t, ctx, 0, k, hyp, &[(W1, true)], P::Primary);
        conclude(t, ctx, 1, k, hyp, &[(W1, true)], AP1);
    }
}

pub const RADICAL_PARTS: &[&str] = &["reduced, I != 0: sqrt(I) prime", "reduced, I != 0, sqrt(I) maximal => primary"];

pub fn radical_prime(ctx: &RingContext, t: &mut Tally) {
    let reduced = ring_class::is_reduced(&ctx.ring);
    for k in ctx.proper() {
        let hyp = reduced && k != ctx.zero() && ctx.w1(k);
        if !hyp {
            t.skip(0);
            t.skip(1);
            continue;
        }
        let rad = ctx.radical(k);
        t.check(0, ctx.is_prime(rad), || {
            Draft::new("sqrt(I) is not prime")
                .ideal(ctx.ideal(k))
                .ideal(ctx.ideal(rad))
                .claim(ctx.ideal(k), W1, true)
        });
        conclude(t, ctx, 1, k, ctx.is_maximal(rad), &[(W1, true)], P::Primary);
    }
}

pub const VNR_PARTS: &[&str] = &["von Neumann regular, I != 0: weakly 1AP <=> primary <=> 1AP"];

pub fn vnr(ctx: &RingContext, t: &mut Tally) {
    let vnr = ring_class::is_von_neumann_regular(&ctx.ring);
    for k in ctx.proper() {
        if vnr && k != ctx.zero() {
            equivalent(t, ctx, 0, k, &[W1, P::Primary, AP1]);
        } else {
            t.skip(0);
        }
    }
}

pub const NQ_PARTS: &[&str] = &["non-quasilocal, no ann(i) maximal: weakly 1AP <=> weakly primary"];

pub fn nq(ctx: &RingContext, t: &mut Tally) {
    let quasilocal = ctx.is_quasilocal();
    for k in ctx.proper() {
        let hyp = !quasilocal && ctx.ideal(k).elements().all(|x| !ctx.is_maximal(ctx.annihilator(x)));
        if hyp {
            equivalent(t, ctx, 0, k, &[W1, P::WeaklyPrimary]);
        } else {
            t.skip(0);
        }
    }
}

pub const NOUNIT_PARTS: &[&str] = &["nonunit shift hypothesis => weakly primary"];

/// Hypothesis: every nonzero `i` in `I` has a nonunit `w` with `wi != 0` and
/// `w + u` a nonunit for some unit `u`.
pub fn nounit(ctx: &RingContext, t: &mut Tally) {
    let r = &ctx.ring;
    let shiftable: Vec<usize> = r
        .nonunits()
        .iter()
        .copied()
        .filter(|&w| r.units().iter().any(|&u| !r.is_unit(r.add(w, u))))
        .collect();
    for k in ctx.proper() {
        let hyp = ctx.w1(k)
            && ctx
                .ideal(k)
                .elements()
                .filter(|&i| i != r.zero())
                .all(|i| shiftable.iter().any(|&w| r.mul(w, i) != r.zero()));
        conclude(t, ctx, 0, k, hyp, &[(W1, true)], P::WeaklyPrimary);
    }
}

pub const DIVIDED_PARTS: &[&str] = &[
    "reduced divided: weakly 1AP <=> weakly primary",
    "reduced chained: weakly 1AP <=> weakly primary",
];

pub fn divided(ctx: &RingContext, t: &mut Tally) {
    let reduced = ring_class::is_reduced(&ctx.ring);
    let divided = reduced && ring_class::is_divided(&ctx.ring, &ctx.ideals);
    let chained = reduced && ring_class::is_chained(&ctx.ring);
    for k in ctx.proper() {
        for (part, hyp) in [(0, divided), (1, chained)] {
            if hyp {
                equivalent(t, ctx, part, k, &[W1, P::WeaklyPrimary]);
            } else {
                t.skip(part);
            }
        }
    }
}

pub const IRREDUCIBLE_PARTS: &[&str] = &[
    "exists irreducible x, nonunit y: 0 != xy in I, x not in I, y not in sqrt(I)",
    "every such nonunit pair (a,b) has a irreducible",
];

pub fn irreducible(ctx: &RingContext, t: &mut Tally) {
    let r = &ctx.ring;
    let mut irr = FixedBitSet::with_capacity(r.order());
    for x in irreducible_elements(r) {
        irr.insert(x);
    }
    for k in ctx.proper() {
        if !(ctx.w1(k) && !ctx.holds(k, P::WeaklyPrimary)) {
            t.skip(0);
            t.skip(1);
            continue;
        }
        let i = ctx.ideal(k);
        let rad = ctx.ideal(ctx.radical(k));
        let mut pairs = Vec::new();
        for &a in r.nonunits() {
            if i.contains(a) {
                continue;
            }
            for &b in r.nonunits() {
                let p = r.mul(a, b);
                if p != r.zero() && i.contains(p) && !rad.contains(b) {
                    pairs.push((a, b));
                }
            }
        }
        t.check(0, pairs.iter().any(|&(a, _)| irr.contains(a)), || {
            failed(ctx, k, P::WeaklyPrimary, "no pair with an irreducible first factor").claim(i, W1, true)
        });
        for &(a, b) in &pairs {
            t.check(1, irr.contains(a), || {
                Draft::new("first factor is reducible")
                    .ideal(i)
                    .witness(r, &[a, b])
                    .claim(i, W1, true)
                    .claim(i, P::WeaklyPrimary, false)
            });
        }
    }
}

pub const INTERSECTION_PARTS: &[&str] = &[
    "pairs with equal radical: intersection weakly 1AP",
    "triples with equal radical: intersection weakly 1AP",
];

pub fn intersection(ctx: &RingContext, t: &mut Tally) {
    let w1: Vec<usize> = ctx.proper().filter(|&k| ctx.w1(k)).collect();
    for (x, &a) in w1.iter().enumerate() {
        for (y, &b) in w1.iter().enumerate().skip(x + 1) {
            let same = ctx.radical(a) == ctx.radical(b);
            if !same {
                t.skip(0);
            } else {
                let m = ctx.intersection(a, b);
                t.check(0, ctx.w1(m), || {
                    failed(ctx, m, W1, "intersection is not weakly 1AP")
                        .ideal(ctx.ideal(a))
                        .ideal(ctx.ideal(b))
                        .claim(ctx.ideal(a), W1, true)
                        .claim(ctx.ideal(b), W1, true)
                });
            }
            for &c in &w1[y + 1..] {
                if !(same && ctx.radical(c) == ctx.radical(a)) {
                    t.skip(1);
                    continue;
                }
                let m = ctx.intersection(ctx.intersection(a, b), c);
                t.check(1, ctx.w1(m), || {
                    failed(ctx, m, W1, "intersection is not weakly 1AP")
                        .ideal(ctx.ideal(a))
                        .ideal(ctx.ideal(b))
                        .ideal(ctx.ideal(c))
                });
            }
        }
    }
}

pub const RESIDUAL_PARTS: &[&str] = &["nonunit c outside I: (I:c) weakly primary"];

pub fn residual(ctx: &RingContext, t: &mut Tally) {
    let r = &ctx.ring;
    for k in ctx.proper() {
        if !ctx.w1(k) {
            t.skip_n(0, r.nonunits().len() as u64);
            continue;
        }
        for &c in r.nonunits() {
            if ctx.ideal(k).contains(c) {
                t.skip(0);
                continue;
            }
            let q = ctx.residual_element(k, c);
            if q == ctx.whole() {
                t.skip(0);
                continue;
            }
            t.check(0, ctx.holds(q, P::WeaklyPrimary), || {
                failed(
                    ctx,
                    q,
                    P::WeaklyPrimary,
                    format!("({}:{}) = {} is not weakly primary", ctx.ideal_name(k), r.name(c), ctx.ideal_name(q)),
                )
                    .ideal(ctx.ideal(k))
                    .claim(ctx.ideal(k), W1, true)
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::TheoremReport;
    use absorb_core::FiniteRing;
    use std::sync::Arc;

    fn run(label: &str, ring: FiniteRing, f: fn(&RingContext, &mut Tally), parts: &'static [&'static str]) -> TheoremReport {
        let ctx = RingContext::new(label, Arc::new(ring), 4096).unwrap();
        let mut t = Tally::new(&ctx, parts);
        f(&ctx, &mut t);
        let mut rep = TheoremReport::new("t", "t", parts);
        rep.absorb(t.finish());
        rep.finish();
        rep
    }

    #[test]
    fn z12_max_instance() {
        let rep = run("Z12", FiniteRing::zn(12).unwrap(), max, MAX_PARTS);
        // (4), (2), (3) have maximal radical; (0), (6) do not.
        assert_eq!(rep.parts[0].checked, 3);
        assert_eq!(rep.parts[0].skipped, 2);
        assert!(rep.violations.is_empty());
    }

    #[test]
    fn z8_quasilocal_part() {
        let rep = run("Z8", FiniteRing::zn(8).unwrap(), tr, TR_PARTS);
        assert_eq!(rep.parts[5].checked, 3);
        assert!(rep.violations.is_empty());
        let rep = run("Z5", FiniteRing::zn(5).unwrap(), tr, TR_PARTS);
        assert_eq!(rep.parts[4].checked, 1);
    }

    #[test]
    fn z6_radical_and_intersection() {
        let rep = run("Z6", FiniteRing::zn(6).unwrap(), radical_prime, RADICAL_PARTS);
        assert_eq!(rep.parts[0].checked, 2);
        assert_eq!(rep.parts[0].skipped, 1);
        let rep = run("Z6", FiniteRing::zn(6).unwrap(), intersection, INTERSECTION_PARTS);
        // (0),(2),(3) are weakly 1AP with pairwise different radicals.
        assert_eq!(rep.parts[0].checked, 0);
        assert_eq!(rep.parts[0].skipped, 3);
        let rep = run("Z12", FiniteRing::zn(12).unwrap(), intersection, INTERSECTION_PARTS);
        assert!(rep.parts[0].checked >= 1);
        assert!(rep.violations.is_empty());
    }
}
