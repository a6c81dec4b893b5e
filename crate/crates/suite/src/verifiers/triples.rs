use absorb_core::classify::Scanner;
use absorb_core::ring_class;
use fixedbitset::FixedBitSet;

use super::{W1, AP1};
use crate::context::RingContext;
use crate::report::{Draft, Tally};

pub const TRIPLE_ZERO_PARTS: &[&str] = &[
    "abI = 0",
    "a,b not in (I:c) => bcI = acI = aI^2 = bI^2 = cI^2 = 0",
    "a,b not in (I:c) => I^3 = 0",
    "reduced, a,b not in (I:c) => I = 0",
    "reduced, I != 0 => ac in I or bc in I",
];

/// `{ x : xJ = 0 }` for the ideal `J`.
fn killers(ctx: &RingContext, j: usize) -> FixedBitSet {
    ctx.ideal(ctx.residual(ctx.zero(), j)).members().clone()
}

pub fn triple_zero(ctx: &RingContext, t: &mut Tally) {
    let r = &ctx.ring;
    let reduced = ring_class::is_reduced(r);
    for k in ctx.proper() {
        // 1-triple-zeros of a weakly 1AP ideal exist exactly when it is not 1AP.
        if !ctx.w1(k) || ctx.holds(k, AP1) {
            t.skip(0);
            continue;
        }
        let i = ctx.ideal(k);
        let i2 = ctx.product(k, k);
        let i3 = ctx.product(i2, k);
        let kill_i = killers(ctx, k);
        let kill_i2 = killers(ctx, i2);
        let scan = Scanner::with_radical(i, ctx.ideal(ctx.radical(k)).clone()).expect("proper");
        let draft = |what: &str, w: &[usize]| {
            Draft::new(what.to_string()).ideal(i).witness(r, w).claim(i, W1, true).claim(i, AP1, false)
        };
        scan.for_each_triple_zero(|tz| {
            let (a, b, c) = (tz.a, tz.b, tz.c);
            let w = [a, b, c];
            t.check(0, kill_i.contains(r.mul(a, b)), || draft("abI != 0", &w));
            let outside = !i.contains(r.mul(a, c)) && !i.contains(r.mul(b, c));
            if outside {
                let ok = kill_i.contains(r.mul(b, c))
                    && kill_i.contains(r.mul(a, c))
                    && kill_i2.contains(a)
                    && kill_i2.contains(b)
                    && kill_i2.contains(c);
                t.check(1, ok, || draft("some product with I or I^2 is nonzero", &w));
                t.check(2, i3 == ctx.zero(), || draft("I^3 != 0", &w));
                if reduced {
                    t.check(3, k == ctx.zero(), || draft("I != 0", &w));
                } else {
                    t.skip(3);
                }
            } else {
                t.skip(1);
                t.skip(2);
                t.skip(3);
            }
            if reduced && k != ctx.zero() {
                t.check(4, !outside, || draft("neither ac nor bc lies in I", &w));
            } else {
                t.skip(4);
            }
            true
        });
    }
}

pub const FREE_PARTS: &[&str] = &[
    "nonunits a,b: abJ in I, ab not in I, no 1-triple-zero (a,b,j) => J in sqrt(I)",
    "0 != I1I2I3 in I, free => I1I2 in I or I3 in sqrt(I)",
];

const OBS_UNIT: &str = "(I,J) pairs refuting the statement when a or b may be a unit";

pub fn free_triple(ctx: &RingContext, t: &mut Tally) {
    let r = &ctx.ring;
    let proper: Vec<usize> = ctx.proper().collect();
    // how many ordered nonunit pairs multiply to each element
    let mut mult = vec![0u64; r.order()];
    for &a in r.nonunits() {
        for &b in r.nonunits() {
            mult[r.mul(a, b)] += 1;
        }
    }
    for k in ctx.proper() {
        if !ctx.w1(k) {
            t.skip(0);
            t.skip(1);
            continue;
        }
        let i = ctx.ideal(k);
        let rad = ctx.ideal(ctx.radical(k));
        let outside_rad: Vec<usize> = r.elements().filter(|&c| !rad.contains(c)).collect();
        for &j in &proper {
            let jj = ctx.ideal(j);
            let q = ctx.ideal(ctx.residual(k, j));
            let j_in_rad = ctx.subset(j, ctx.radical(k));
            let mut unit_reading_fails = false;
            for p in r.elements() {
                // p = ab with abJ in I and ab not in I
                if i.contains(p) || !q.contains(p) {
                    continue;
                }
                unit_reading_fails |= !j_in_rad;
                if mult[p] == 0 {
                    continue;
                }
                let has_tz = jj.elements().any(|c| !rad.contains(c) && r.mul(p, c) == r.zero());
                if has_tz {
                    t.skip_n(0, mult[p]);
                    continue;
                }
                for _ in 0..mult[p] {
                    t.check(0, j_in_rad, || {
                        Draft::new(format!("ab = {} but J is not inside sqrt(I)", r.name(p)))
                            .ideal(i)
                            .ideal(jj)
                            .claim(i, W1, true)
                    });
                }
            }
            if unit_reading_fails {
                t.observe(OBS_UNIT, 1);
            }
        }
        for &i1 in &proper {
            for &i2 in &proper {
                let p12 = ctx.product(i1, i2);
                for &i3 in &proper {
                    let p = ctx.product(p12, i3);
                    if p == ctx.zero() || !ctx.subset(p, k) {
                        continue;
                    }
                    // free: no a in I1, b in I2, c in I3 with abc = 0, ab not in I, c not in sqrt(I)
                    let mut ab = FixedBitSet::with_capacity(r.order());
                    for a in ctx.ideal(i1).elements() {
                        for b in ctx.ideal(i2).elements() {
                            let x = r.mul(a, b);
                            if !i.contains(x) {
                                ab.insert(x);
                            }
                        }
                    }
                    let c3 = ctx.ideal(i3);
                    let free = !ab.ones().any(|x| {
                        outside_rad.iter().any(|&c| c3.contains(c) && r.mul(x, c) == r.zero())
                    });
                    if !free {
                        t.skip(1);
                        continue;
                    }
                    let ok = ctx.subset(p12, k) || ctx.subset(i3, ctx.radical(k));
                    t.check(1, ok, || {
                        Draft::new("I1I2 not in I and I3 not in sqrt(I)")
                            .ideal(i)
                            .ideal(ctx.ideal(i1))
                            .ideal(ctx.ideal(i2))
                            .ideal(c3)
                            .claim(i, W1, true)
                    });
                }
            }
        }
    }
}
