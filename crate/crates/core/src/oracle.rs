//! Slow, definition-literal versions of the predicates. They share nothing
//! with the optimized scans beyond the ring tables: units, radical membership
//! and ideal sums are recomputed from scratch, and every tuple is visited.

use crate::classify::{Predicate, TripleZero};
use crate::ideal::Ideal;
use crate::ring::FiniteRing;

struct Literal<'a> {
    ring: &'a FiniteRing,
    inside: Vec<bool>,
    in_radical: Vec<bool>,
    unit: Vec<bool>,
}

impl<'a> Literal<'a> {
    fn new(i: &'a Ideal) -> Literal<'a> {
        let ring: &FiniteRing = i.ring();
        let n = ring.order();
        let inside: Vec<bool> = (0..n).map(|a| i.contains(a)).collect();
        let unit = (0..n)
            .map(|a| (0..n).any(|b| ring.mul(a, b) == ring.one()))
            .collect();
        // a in sqrt(I) iff a^k in I for some k <= n
        let in_radical = (0..n)
            .map(|a| {
                let mut p = a;
                for _ in 0..n {
                    if inside[p] {
                        return true;
                    }
                    p = ring.mul(p, a);
                }
                false
            })
            .collect();
        Literal { ring, inside, in_radical, unit }
    }

    fn pair(&self, pred: Predicate) -> Option<Vec<usize>> {
        let r = self.ring;
        let n = r.order();
        for a in 0..n {
            for b in 0..n {
                let p = r.mul(a, b);
                let (lhs, concl) = match pred {
                    Predicate::Prime => (self.inside[p], self.inside[a] || self.inside[b]),
                    Predicate::WeaklyPrime => {
                        (self.inside[p] && p != r.zero(), self.inside[a] || self.inside[b])
                    }
                    Predicate::Primary => (self.inside[p], self.inside[a] || self.in_radical[b]),
                    Predicate::WeaklyPrimary => {
                        (self.inside[p] && p != r.zero(), self.inside[a] || self.in_radical[b])
                    }
                    Predicate::Semiprimary => {
                        (self.in_radical[p], self.in_radical[a] || self.in_radical[b])
                    }
                    _ => unreachable!(),
                };
                if lhs && !concl {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    fn triple(&self, pred: Predicate) -> Option<Vec<usize>> {
        let r = self.ring;
        let n = r.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let abc = r.mul(r.mul(a, b), c);
                    let (ab, bc, ac) = (r.mul(a, b), r.mul(b, c), r.mul(a, c));
                    let nonzero = abc != r.zero();
                    let nonunits = !self.unit[a] && !self.unit[b] && !self.unit[c];
                    let (lhs, concl) = match pred {
                        Predicate::TwoAbsorbing => {
                            (self.inside[abc], self.inside[ab] || self.inside[bc] || self.inside[ac])
                        }
                        Predicate::WeaklyTwoAbsorbing => (
                            self.inside[abc] && nonzero,
                            self.inside[ab] || self.inside[bc] || self.inside[ac],
                        ),
                        Predicate::TwoAbsorbingPrimary => (
                            self.inside[abc],
                            self.inside[ab] || self.in_radical[bc] || self.in_radical[ac],
                        ),
                        Predicate::WeaklyTwoAbsorbingPrimary => (
                            self.inside[abc] && nonzero,
                            self.inside[ab] || self.in_radical[bc] || self.in_radical[ac],
                        ),
                        Predicate::OneAbsorbingPrimary => {
                            (nonunits && self.inside[abc], self.inside[ab] || self.in_radical[c])
                        }
                        Predicate::WeaklyOneAbsorbingPrimary => (
                            nonunits && self.inside[abc] && nonzero,
                            self.inside[ab] || self.in_radical[c],
                        ),
                        _ => unreachable!(),
                    };
                    if lhs && !concl {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    }
}

/// First violating tuple in lexicographic order, or `None` when the
/// predicate holds. The ideal must be proper.
pub fn witness(pred: Predicate, i: &Ideal) -> Option<Vec<usize>> {
    assert!(i.is_proper(), "oracle called on an improper ideal");
    let lit = Literal::new(i);
    match pred {
        Predicate::Prime
        | Predicate::WeaklyPrime
        | Predicate::Primary
        | Predicate::WeaklyPrimary
        | Predicate::Semiprimary => lit.pair(pred),
        _ => lit.triple(pred),
    }
}

pub fn holds(pred: Predicate, i: &Ideal) -> bool {
    witness(pred, i).is_none()
}

pub fn triple_zeros(i: &Ideal) -> Vec<TripleZero> {
    let lit = Literal::new(i);
    let r = lit.ring;
    let n = r.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !lit.unit[a]
                    && !lit.unit[b]
                    && !lit.unit[c]
                    && r.mul(r.mul(a, b), c) == r.zero()
                    && !lit.inside[r.mul(a, b)]
                    && !lit.in_radical[c]
                {
                    out.push(TripleZero { a, b, c });
                }
            }
        }
    }
    out
}

/// u-ring test by brute force over every subfamily of ideals not containing
/// `I`. Exponential; only for rings with few ideals.
pub fn is_u_ring(ideals: &[Ideal]) -> bool {
    for i in ideals {
        let family: Vec<&Ideal> = ideals.iter().filter(|j| !i.is_subset(j)).collect();
        assert!(family.len() < 24, "too many ideals for the subset oracle");
        for mask in 1u32..(1u32 << family.len()) {
            let covered = i.elements().all(|x| {
                family
                    .iter()
                    .enumerate()
                    .any(|(k, j)| mask & (1 << k) != 0 && j.contains(x))
            });
            if covered {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{find_triple_zeros, Scanner};
    use crate::ideal::{all_ideals, DEFAULT_MAX_IDEALS};
    use crate::ring_class;
    use crate::{catalog, FiniteRing};
    use std::sync::Arc;

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::zn(n).unwrap())
    }

    fn sample() -> Vec<Arc<FiniteRing>> {
        let mut rings: Vec<Arc<FiniteRing>> = (2..=24).map(z).collect();
        rings.push(Arc::new(FiniteRing::product(vec![z(2), z(2), z(2)]).unwrap()));
        rings.push(Arc::new(FiniteRing::product(vec![z(4), z(3)]).unwrap()));
        rings.push(Arc::new(FiniteRing::product(vec![z(4), z(4)]).unwrap()));
        rings.push(Arc::new(FiniteRing::product(vec![z(2), z(9)]).unwrap()));
        rings.push(Arc::new(FiniteRing::idealization(12, 6).unwrap()));
        rings.push(Arc::new(FiniteRing::idealization(8, 2).unwrap()));
        rings.push(Arc::new(catalog::f2xy_mod_square()));
        rings
    }

    #[test]
    fn scans_agree_with_literal_definitions() {
        for r in sample() {
            for i in all_ideals(&r, DEFAULT_MAX_IDEALS).unwrap() {
                if !i.is_proper() {
                    continue;
                }
                let scan = Scanner::new(&i).unwrap();
                for p in Predicate::ALL {
                    let fast = scan.check(p);
                    let slow = witness(p, &i);
                    assert_eq!(fast.holds, slow.is_none(), "{} {} {p}", r.label(), i.display_set());
                    if p == Predicate::Semiprimary {
                        continue;
                    }
                    assert_eq!(fast.witness, slow, "{} {} {p}", r.label(), i.display_set());
                }
                assert_eq!(find_triple_zeros(&i).unwrap(), triple_zeros(&i));
            }
        }
    }

    #[test]
    fn u_ring_agrees_with_subfamily_search() {
        for r in sample() {
            let ideals = all_ideals(&r, DEFAULT_MAX_IDEALS).unwrap();
            assert_eq!(ring_class::is_u_ring(&ideals), is_u_ring(&ideals), "{}", r.label());
        }
    }
}
