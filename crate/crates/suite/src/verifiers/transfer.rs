//! Transfer of the weakly 1AP property along homomorphisms, quotient maps
//! and localizations. Codomain rings get their own (lazily classified)
//! contexts.

use std::collections::BTreeSet;
use std::sync::Arc;

use absorb_core::construct::multiplicative_closure;
use absorb_core::ideal::{z_relative, zero_divisors, DEFAULT_MAX_IDEALS};
use absorb_core::ring::Construction;
use absorb_core::{quotient as make_quotient, FiniteRing, Localization, RingHom};
use fixedbitset::FixedBitSet;

use super::{AP1, W1};
use crate::context::RingContext;
use crate::report::{Draft, Tally};

pub const HOM_PARTS: &[&str] = &[
    "injective, nonunits to nonunits: preimage of weakly 1AP is weakly 1AP",
    "surjective, ker f in I: image of weakly 1AP is weakly 1AP",
];

const DIAGONAL_MAX: usize = 16;
const IDEALIZE_MAX: usize = 16;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Generated homomorphisms out of `ring`: identity, projections, quotient
/// maps, diagonals into `R x R`, inclusions `Z_n -> Z_n(+)(d)` and reductions
/// `Z_n -> Z_a x Z_b` with `lcm(a, b) = n`.
pub fn hom_family(ring: &Arc<FiniteRing>, ideals: &[absorb_core::Ideal]) -> Vec<RingHom> {
    let mut out = vec![RingHom::identity(ring)];
    if let Some(f) = ring.factors() {
        for k in 0..f.len() {
            out.push(RingHom::projection(ring, k).expect("product ring"));
        }
    }
    for j in ideals.iter().filter(|j| j.is_proper() && !j.is_zero()) {
        out.push(make_quotient(ring, j).expect("proper ideal").1);
    }
    if ring.order() <= DIAGONAL_MAX {
        let sq = Arc::new(FiniteRing::product(vec![Arc::clone(ring), Arc::clone(ring)]).expect("two factors"));
        let map = ring.elements().map(|a| sq.from_coords(&[a, a]).expect("in range")).collect();
        out.push(RingHom::new(Arc::clone(ring), sq, map).expect("shape"));
    }
    if let Construction::Zn(n) = *ring.construction() {
        if n <= IDEALIZE_MAX {
            for d in (1..n).filter(|d| n % d == 0) {
                let t = Arc::new(FiniteRing::idealization(n, d).expect("d | n"));
                let map = ring.elements().map(|a| a * (n / d)).collect();
                out.push(RingHom::new(Arc::clone(ring), t, map).expect("shape"));
            }
        }
        for a in (2..n).filter(|a| n % a == 0) {
            for b in (a..n).filter(|b| n % b == 0 && a * b / gcd(a, *b) == n) {
                let t = Arc::new(
                    FiniteRing::product(vec![
                        Arc::new(FiniteRing::zn(a).expect("a >= 2")),
                        Arc::new(FiniteRing::zn(b).expect("b >= 2")),
                    ])
                    .expect("two factors"),
                );
                let map = ring.elements().map(|x| t.from_coords(&[x % a, x % b]).expect("in range")).collect();
                out.push(RingHom::new(Arc::clone(ring), t, map).expect("shape"));
            }
        }
    }
    out
}

pub fn hom(ctx: &RingContext, t: &mut Tally) {
    for f in hom_family(&ctx.ring, &ctx.ideals) {
        if let Err(v) = f.check() {
            t.check(0, false, || Draft::new(format!("generated map is not a homomorphism: {v}")));
            continue;
        }
        let cod = RingContext::new(f.codomain().label().to_string(), Arc::clone(f.codomain()), DEFAULT_MAX_IDEALS)
            .expect("codomain is small");
        if f.is_injective() && f.preserves_nonunits() {
            for j in cod.proper() {
                if !cod.w1(j) {
                    t.skip(0);
                    continue;
                }
                let pre = f.preimage_ideal(cod.ideal(j)).expect("codomain ideal");
                let k = ctx.index_of(&pre);
                t.check(0, ctx.w1(k), || {
                    super::failed(ctx, k, W1, format!("preimage under {f:?} is not weakly 1AP"))
                        .ideal(cod.ideal(j))
                        .claim(cod.ideal(j), W1, true)
                });
            }
        } else {
            t.skip(0);
            if f.is_injective() {
                t.observe("injective maps sending a nonunit to a unit", 1);
            }
        }
        if f.is_surjective() {
            let ker = ctx.index_of(&f.kernel());
            for k in ctx.proper() {
                if !(ctx.w1(k) && ctx.subset(ker, k)) {
                    t.skip(1);
                    continue;
                }
                let img = f.image_ideal(ctx.ideal(k)).expect("surjective");
                let j = cod.index_of(&img);
                t.check(1, cod.w1(j), || {
                    Draft::new(format!("image under {f:?} is not weakly 1AP"))
                        .ideal(ctx.ideal(k))
                        .ideal(cod.ideal(j))
                        .claim(ctx.ideal(k), W1, true)
                        .claim(cod.ideal(j), W1, false)
                });
            }
        } else {
            t.skip(1);
        }
    }
}

pub const QUOTIENT_PARTS: &[&str] = &[
    "J in I, I weakly 1AP => I/J weakly 1AP",
    "U(R/J) = U(R)+J, J 1AP, I/J weakly 1AP => I 1AP",
    "(0) 1AP, I weakly 1AP => I 1AP",
    "U(R/J) = U(R)+J, J weakly 1AP, I/J weakly 1AP => I weakly 1AP",
];

pub fn quotient(ctx: &RingContext, t: &mut Tally) {
    let r = &ctx.ring;
    let zero_1ap = ctx.holds(ctx.zero(), AP1);
    for k in ctx.proper() {
        super::conclude(t, ctx, 2, k, zero_1ap && ctx.w1(k), &[(W1, true)], AP1);
    }
    for j in ctx.proper().filter(|&j| j != ctx.zero()) {
        let (q, pi) = make_quotient(r, ctx.ideal(j)).expect("proper ideal");
        let qctx = RingContext::new(q.label().to_string(), Arc::clone(&q), DEFAULT_MAX_IDEALS).expect("small quotient");
        let lifted: BTreeSet<usize> = r.units().iter().map(|&u| pi.apply(u)).collect();
        let units_lift = lifted.len() == q.units().len();
        for k in ctx.proper().filter(|&k| ctx.subset(j, k)) {
            let img = pi.image_ideal(ctx.ideal(k)).expect("projection is onto");
            let kb = qctx.index_of(&img);
            let w1_bar = qctx.w1(kb);
            let fail = |what: &str| {
                Draft::new(format!("{what} (J = {})", ctx.ideal(j)))
                    .ideal(ctx.ideal(k))
                    .ideal(qctx.ideal(kb))
                    .claim(qctx.ideal(kb), W1, w1_bar)
            };
            if ctx.w1(k) {
                t.check(0, w1_bar, || fail("I/J is not weakly 1AP").claim(ctx.ideal(k), W1, true));
            } else {
                t.skip(0);
            }
            if units_lift && ctx.holds(j, AP1) && w1_bar {
                t.check(1, ctx.holds(k, AP1), || {
                    fail("I is not 1AP").claim(ctx.ideal(j), AP1, true).claim(ctx.ideal(k), AP1, false)
                });
            } else {
                t.skip(1);
            }
            if units_lift && ctx.w1(j) && w1_bar {
                t.check(3, ctx.w1(k), || {
                    fail("I is not weakly 1AP").claim(ctx.ideal(j), W1, true).claim(ctx.ideal(k), W1, false)
                });
            } else {
                t.skip(3);
            }
        }
    }
}

pub const LOCALIZATION_PARTS: &[&str] = &[
    "I weakly 1AP, I and S disjoint => S^-1 I weakly 1AP",
    "S misses Z(R) and Z_I(R), S^-1 I weakly 1AP => I weakly 1AP",
];

/// Multiplicative sets: the closure of each non-nilpotent nonunit, and the
/// unit group.
pub fn multiplicative_sets(ring: &FiniteRing) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut candidates: Vec<Vec<usize>> =
        ring.nonunits().iter().filter(|&&x| !ring.is_nilpotent(x)).map(|&x| vec![x]).collect();
    candidates.push(ring.units().to_vec());
    for gens in candidates {
        let s = multiplicative_closure(ring, &gens).expect("in range");
        if seen.insert(s.clone()) {
            out.push(gens);
        }
    }
    out
}

pub fn localization(ctx: &RingContext, t: &mut Tally) {
    let r = &ctx.ring;
    let zd = zero_divisors(r);
    for gens in multiplicative_sets(r) {
        let loc = Localization::new(r, &gens).expect("0 not in S");
        let lctx = RingContext::new(loc.ring.label().to_string(), Arc::clone(&loc.ring), DEFAULT_MAX_IDEALS)
            .expect("small localization");
        let mut s_bits = FixedBitSet::with_capacity(r.order());
        for &s in &loc.set {
            s_bits.insert(s);
        }
        let s_regular = !s_bits.ones().any(|s| zd.contains(s));
        for k in ctx.proper() {
            let i = ctx.ideal(k);
            let ext = loc.extend_ideal(i).expect("same ring");
            let e = lctx.index_of(&ext);
            let disjoint = !s_bits.ones().any(|s| i.contains(s));
            if ctx.w1(k) && disjoint {
                t.check(0, e != lctx.whole() && lctx.w1(e), || {
                    Draft::new(format!("S^-1 I is not weakly 1AP in {}", loc.ring.label()))
                        .ideal(i)
                        .ideal(lctx.ideal(e))
                        .claim(i, W1, true)
                })
            } else {
                t.skip(0);
            }
            let zi = z_relative(i).expect("proper");
            let hyp = s_regular && !s_bits.ones().any(|s| zi.contains(s)) && e != lctx.whole() && lctx.w1(e);
            if hyp {
                t.check(1, ctx.w1(k), || {
                    super::failed(ctx, k, W1, format!("I is not weakly 1AP though S^-1 I is in {}", loc.ring.label()))
                        .claim(lctx.ideal(e), W1, true)
                });
            } else {
                t.skip(1);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let r = Arc::new(FiniteRing::zn(12).unwrap());
        let ideals = absorb_core::all_ideals(&r, 100).unwrap();
        let fam = hom_family(&r, &ideals);
        // identity, 4 quotients, diagonal, 5 idealization inclusions, Z4xZ3, Z4xZ6
        assert_eq!(fam.len(), 1 + 4 + 1 + 5 + 2);
        for f in &fam {
            assert!(f.check().is_ok(), "{f:?}");
        }
        let sets = multiplicative_sets(&r);
        // closures of 2,3,4,6,8,9,10 collapse; plus the units
        assert!(sets.iter().any(|g| g == &vec![4]));
        assert!(sets.iter().any(|g| g == &vec![3]));
    }
}
