//! Five conditions on a proper ideal of a u-ring:
//!
//! 1. `I` is weakly 1AP.
//! 2. For nonunits `a, b` with `ab ∉ I`: `(I:ab) = (0:ab)` or `(I:ab) ⊆ sqrt(I)`.
//! 3. For a nonunit `a` and `I1 ⊄ sqrt(I)` with `(I:aI1)` proper:
//!    `(I:aI1) = (0:aI1)` or `(I:aI1) ⊆ (I:a)`.
//! 4. For `I1 ⊄ sqrt(I)` and `I2` with `(I:I1I2)` proper:
//!    `(I:I1I2) = (0:I1I2)` or `(I:I1I2) ⊆ (I:I2)`.
//! 5. For `0 != I1I2I3 ⊆ I`: `I1I2 ⊆ I` or `I3 ⊆ sqrt(I)`.
//!
//! The ideals `I1, I2, I3` range over proper ideals. When they may also be
//! the whole ring, conditions 4 and 5 reduce to weak primariness at the
//! ideal level; the number of ideals where that reading disagrees with
//! condition 1 is recorded as an observation.

use super::W1;
use crate::context::RingContext;
use crate::report::{Draft, Tally};

pub const PARTS: &[&str] = &["(1) <=> (2)", "(1) <=> (3)", "(1) <=> (4)", "(1) <=> (5)"];

const OBS_WHOLE: &str = "ideals where (4) or (5) with I1, I2, I3 allowed to be R disagrees with (1)";

pub fn ch(ctx: &RingContext, t: &mut Tally) {
    if !ctx.is_u_ring() {
        for part in 0..PARTS.len() {
            t.skip_n(part, (ctx.len() - 1) as u64);
        }
        return;
    }
    let r = &ctx.ring;
    let n = ctx.len();
    let zero = ctx.zero();
    let whole = ctx.whole();
    let proper: Vec<usize> = ctx.proper().collect();
    let all: Vec<usize> = (0..n).collect();
    // products of two nonunits
    let mut products = vec![false; r.order()];
    for &a in r.nonunits() {
        for &b in r.nonunits() {
            products[r.mul(a, b)] = true;
        }
    }
    for k in ctx.proper() {
        let i = ctx.ideal(k);
        let rad = ctx.radical(k);
        let c1 = ctx.w1(k);
        let c2 = r.elements().filter(|&p| products[p] && !i.contains(p)).all(|p| {
            let q = ctx.residual_element(k, p);
            q == ctx.residual_element(zero, p) || ctx.subset(q, rad)
        });
        let c3 = r.nonunits().iter().all(|&a| {
            let ia = ctx.residual_element(k, a);
            proper.iter().filter(|&&i1| !ctx.subset(i1, rad)).all(|&i1| {
                let x = ctx.scale(a, i1);
                let q = ctx.residual(k, x);
                q == whole || q == ctx.residual(zero, x) || ctx.subset(q, ia)
            })
        });
        let cond4 = |range: &[usize]| {
            range.iter().filter(|&&i1| !ctx.subset(i1, rad)).all(|&i1| {
                range.iter().all(|&i2| {
                    let x = ctx.product(i1, i2);
                    let q = ctx.residual(k, x);
                    q == whole || q == ctx.residual(zero, x) || ctx.subset(q, ctx.residual(k, i2))
                })
            })
        };
        let cond5 = |range: &[usize]| {
            range.iter().all(|&i1| {
                range.iter().all(|&i2| {
                    let p12 = ctx.product(i1, i2);
                    range.iter().all(|&i3| {
                        let p = ctx.product(p12, i3);
                        p == zero || !ctx.subset(p, k) || ctx.subset(p12, k) || ctx.subset(i3, rad)
                    })
                })
            })
        };
        let c4 = cond4(&proper);
        let c5 = cond5(&proper);
        let conds = [c1, c2, c3, c4, c5];
        for part in 0..4 {
            t.check(part, conds[part + 1] == c1, || {
                let text: Vec<String> = conds.iter().enumerate().map(|(j, c)| format!("({})={c}", j + 1)).collect();
                if c1 {
                    Draft::new(text.join(", ")).ideal(i).claim(i, W1, true)
                } else {
                    super::failed(ctx, k, W1, text.join(", "))
                }
            });
        }
        if cond4(&all) != c1 || cond5(&all) != c1 {
            t.observe(OBS_WHOLE, 1);
        }
    }
}
