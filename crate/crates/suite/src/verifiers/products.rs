use std::sync::Arc;

use absorb_core::classify;
use absorb_core::ring_class;
use absorb_core::{FiniteRing, Ideal, Predicate as P};

use super::{AP1, W1};
use crate::context::RingContext;
use crate::report::{Draft, Tally};

pub const W1_PARTS: &[&str] =
    &["R1, R2 not fields, I != 0: weakly 1AP <=> I1 x R2 or R1 x I2 with primary component <=> 1AP <=> primary"];

/// Coordinate projections of an ideal of a two-factor product.
fn components(ring: &FiniteRing, i: &Ideal, factors: &[Arc<FiniteRing>]) -> (Ideal, Ideal) {
    let mut c0 = Vec::new();
    let mut c1 = Vec::new();
    for x in i.elements() {
        let c = ring.coords(x).expect("product ring");
        c0.push(c[0]);
        c1.push(c[1]);
    }
    (
        Ideal::from_elements(&factors[0], &c0).expect("projection of an ideal"),
        Ideal::from_elements(&factors[1], &c1).expect("projection of an ideal"),
    )
}

fn primary(i: &Ideal) -> bool {
    i.is_proper() && classify::check(P::Primary, i).expect("proper").holds
}

pub fn product_w1(ctx: &RingContext, t: &mut Tally) {
    let r = &ctx.ring;
    let factors = match r.factors() {
        Some(f) if f.len() == 2 && !ring_class::is_field(&f[0]) && !ring_class::is_field(&f[1]) => f,
        _ => {
            t.skip_n(0, (ctx.len() - 1) as u64);
            return;
        }
    };
    for k in ctx.proper() {
        if k == ctx.zero() {
            t.skip(0);
            continue;
        }
        let i = ctx.ideal(k);
        let (i1, i2) = components(r, i, factors);
        let c2 = (i2.is_whole() && primary(&i1)) || (i1.is_whole() && primary(&i2));
        let conds = [ctx.w1(k), c2, ctx.holds(k, AP1), ctx.holds(k, P::Primary)];
        t.check(0, conds.iter().all(|&c| c == conds[0]), || {
            Draft::new(format!(
                "weakly 1AP={}, split primary={}, 1AP={}, primary={}",
                conds[0], conds[1], conds[2], conds[3]
            ))
            .ideal(i)
            .claim(i, W1, conds[0])
            .claim(i, AP1, conds[2])
            .claim(i, P::Primary, conds[3])
        });
    }
}

pub const FI_PARTS: &[&str] = &[
    "every proper ideal weakly 1AP <=> two factors, both fields",
    "every proper ideal weakly primary <=> two factors, both fields",
    "two fields => von Neumann regular",
];

pub fn fi(ctx: &RingContext, t: &mut Tally) {
    let r = &ctx.ring;
    let factors = match r.factors() {
        Some(f) if (2..=3).contains(&f.len()) => f,
        _ => {
            for part in 0..3 {
                t.skip(part);
            }
            return;
        }
    };
    let two_fields = factors.len() == 2 && factors.iter().all(|f| ring_class::is_field(f));
    let first_bad = |p: P| ctx.proper().find(|&k| !ctx.holds(k, p));
    for (part, p) in [(0, W1), (1, P::WeaklyPrimary)] {
        let bad = first_bad(p);
        t.check(part, bad.is_none() == two_fields, || match bad {
            Some(k) => super::failed(ctx, k, p, format!("{p} fails although the factors are two fields")),
            None => Draft::new(format!("every proper ideal is {p} but the factors are not two fields"))
                .claim(ctx.ideal(ctx.zero()), p, true),
        });
    }
    if two_fields {
        t.check(2, ring_class::is_von_neumann_regular(r), || Draft::new("not von Neumann regular"));
    } else {
        t.skip(2);
    }
}
