//! Quotient rings `R/J` and localizations `S^{-1}R`.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Result, RingError};
use crate::hom::RingHom;
use crate::ideal::Ideal;
use crate::ring::{Construction, FiniteRing, RawRing};

/// `R/J` over coset representatives (the smallest index in each coset),
/// together with the natural projection.
pub fn quotient(ring: &Arc<FiniteRing>, j: &Ideal) -> Result<(Arc<FiniteRing>, RingHom)> {
    if j.ring().id() != ring.id() {
        return Err(RingError::RingMismatch);
    }
    if !j.is_proper() {
        return Err(RingError::ImproperIdeal);
    }
    let n = ring.order();
    let rep: Vec<usize> = ring
        .elements()
        .map(|a| j.elements().map(|x| ring.add(a, x)).min().expect("J contains 0"))
        .collect();
    let mut reps: Vec<usize> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let mut slot = vec![usize::MAX; n];
    for (k, &r) in reps.iter().enumerate() {
        slot[r] = k;
    }
    let q = reps.len();
    let mut add = Vec::with_capacity(q * q);
    let mut mul = Vec::with_capacity(q * q);
    for &x in &reps {
        for &y in &reps {
            add.push(slot[rep[ring.add(x, y)]] as u32);
            mul.push(slot[rep[ring.mul(x, y)]] as u32);
        }
    }
    let quotient = RawRing {
        label: format!("quot({},{})", ring.label(), j),
        order: q,
        add,
        mul,
        zero: slot[rep[ring.zero()]],
        one: slot[rep[ring.one()]],
        names: reps.iter().map(|&r| ring.name(r).to_string()).collect(),
        construction: Construction::Quotient,
    }
    .build();
    let quotient = Arc::new(quotient);
    let map = ring.elements().map(|a| slot[rep[a]]).collect();
    let pi = RingHom::new(Arc::clone(ring), Arc::clone(&quotient), map)?;
    Ok((quotient, pi))
}

/// `S^{-1}R` built on fraction pairs `(a, s)`.
pub struct Localization {
    pub ring: Arc<FiniteRing>,
    /// `a ↦ a/1`.
    pub canonical: RingHom,
    /// The saturated multiplicative set, sorted.
    pub set: Vec<usize>,
    class: Vec<usize>,
    slot: Vec<usize>,
}

/// Closes `gens ∪ {1}` under multiplication.
pub fn multiplicative_closure(ring: &FiniteRing, gens: &[usize]) -> Result<Vec<usize>> {
    let mut s = FixedBitSet::with_capacity(ring.order());
    let mut queue = vec![ring.one()];
    s.insert(ring.one());
    for &g in gens {
        if g >= ring.order() {
            return Err(RingError::ElementOutOfRange { index: g, order: ring.order() });
        }
        if !s.contains(g) {
            s.insert(g);
            queue.push(g);
        }
    }
    while let Some(x) = queue.pop() {
        let members: Vec<usize> = s.ones().collect();
        for y in members {
            let p = ring.mul(x, y);
            if !s.contains(p) {
                s.insert(p);
                queue.push(p);
            }
        }
    }
    Ok(s.ones().collect())
}

impl Localization {
    /// Fractions `(a,s) ~ (b,t)` iff `u(at - bs) = 0` for some `u` in `S`.
    /// With `K = {x : ux = 0 for some u in S}` this is `at - bs in K`. Each `s`
    /// has some `t` with `st - 1 in K` (finite ring), so `(a,s) ~ (at,1)` and
    /// classes are labelled by the coset `at + K`.
    pub fn new(ring: &Arc<FiniteRing>, gens: &[usize]) -> Result<Localization> {
        let set = multiplicative_closure(ring, gens)?;
        if set.contains(&ring.zero()) {
            return Err(RingError::DegenerateLocalization);
        }
        let n = ring.order();
        let mut killed = FixedBitSet::with_capacity(n);
        for x in ring.elements() {
            if set.iter().any(|&u| ring.mul(u, x) == ring.zero()) {
                killed.insert(x);
            }
        }
        let coset_min = |x: usize| killed.ones().map(|k| ring.add(x, k)).min().expect("0 in K");
        let inverse_mod_k: Vec<usize> = set
            .iter()
            .map(|&s| {
                ring.elements()
                    .find(|&t| killed.contains(ring.sub(ring.mul(s, t), ring.one())))
                    .expect("every element of S is invertible modulo K")
            })
            .collect();
        let m = set.len();
        // class[a * m + si] = coset_min(a * t_si), the class label of (a, S[si]).
        let mut class = vec![0usize; n * m];
        for a in ring.elements() {
            for (si, &t) in inverse_mod_k.iter().enumerate() {
                class[a * m + si] = coset_min(ring.mul(a, t));
            }
        }
        let mut labels: Vec<usize> = class.clone();
        labels.sort_unstable();
        labels.dedup();
        let mut slot = vec![usize::MAX; n];
        for (k, &l) in labels.iter().enumerate() {
            slot[l] = k;
        }
        let q = labels.len();
        let one_idx = set.binary_search(&ring.one()).expect("1 in S");
        // Each label l is the class of (l, 1).
        let mut add = Vec::with_capacity(q * q);
        let mut mul = Vec::with_capacity(q * q);
        for &x in &labels {
            for &y in &labels {
                // x/1 + y/1 = (x + y)/1 and (x/1)(y/1) = xy/1.
                add.push(slot[class[ring.add(x, y) * m + one_idx]] as u32);
                mul.push(slot[class[ring.mul(x, y) * m + one_idx]] as u32);
            }
        }
        let gens_text: Vec<&str> = gens.iter().map(|&g| ring.name(g)).collect();
        let loc = RawRing {
            label: format!("loc({},{{{}}})", ring.label(), gens_text.join(",")),
            order: q,
            add,
            mul,
            zero: slot[class[ring.zero() * m + one_idx]],
            one: slot[class[ring.one() * m + one_idx]],
            names: labels.iter().map(|&l| ring.name(l).to_string()).collect(),
            construction: Construction::Localization,
        }
        .build();
        let loc = Arc::new(loc);
        let map = ring.elements().map(|a| slot[class[a * m + one_idx]]).collect();
        let canonical = RingHom::new(Arc::clone(ring), Arc::clone(&loc), map)?;
        Ok(Localization { ring: loc, canonical, set, class, slot })
    }

    /// Index in the localized ring of the fraction `a/s`.
    pub fn fraction(&self, a: usize, s: usize) -> Option<usize> {
        let si = self.set.binary_search(&s).ok()?;
        Some(self.slot[self.class[a * self.set.len() + si]])
    }

    /// `S^{-1}I = { i/s : i in I, s in S }`.
    pub fn extend_ideal(&self, i: &Ideal) -> Result<Ideal> {
        if i.ring().id() != self.canonical.domain().id() {
            return Err(RingError::RingMismatch);
        }
        let mut bits = FixedBitSet::with_capacity(self.ring.order());
        for a in i.elements() {
            for &s in &self.set {
                bits.insert(self.fraction(a, s).expect("s in S"));
            }
        }
        Ok(Ideal::from_bits_unchecked(&self.ring, bits))
    }
}

/// Convenience wrapper returning the ring and its canonical map.
pub fn localization(ring: &Arc<FiniteRing>, gens: &[usize]) -> Result<(Arc<FiniteRing>, RingHom)> {
    let l = Localization::new(ring, gens)?;
    Ok((l.ring, l.canonical))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::zn(n).unwrap())
    }

    /// Class count of the literal fraction relation, one representative per
    /// class by linear scan.
    fn literal_class_count(ring: &FiniteRing, set: &[usize]) -> usize {
        let pairs: Vec<(usize, usize)> = ring
            .elements()
            .flat_map(|a| set.iter().map(move |&s| (a, s)))
            .collect();
        let related = |(a, s): (usize, usize), (b, t): (usize, usize)| {
            let d = ring.sub(ring.mul(a, t), ring.mul(b, s));
            set.iter().any(|&u| ring.mul(u, d) == ring.zero())
        };
        let mut reps: Vec<(usize, usize)> = Vec::new();
        for &p in &pairs {
            if !reps.iter().any(|&r| related(p, r)) {
                reps.push(p);
            }
        }
        reps.len()
    }

    #[test]
    fn fraction_relation_is_an_equivalence() {
        let r = z(12);
        let set = multiplicative_closure(&r, &[4]).unwrap();
        let pairs: Vec<(usize, usize)> =
            r.elements().flat_map(|a| set.iter().map(move |&s| (a, s))).collect();
        let rel = |(a, s): (usize, usize), (b, t): (usize, usize)| {
            let d = r.sub(r.mul(a, t), r.mul(b, s));
            set.iter().any(|&u| r.mul(u, d) == r.zero())
        };
        for &p in &pairs {
            assert!(rel(p, p));
            for &q in &pairs {
                assert_eq!(rel(p, q), rel(q, p));
                if rel(p, q) {
                    for &w in &pairs {
                        if rel(q, w) {
                            assert!(rel(p, w));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn quotients() {
        let r = z(12);
        let (q, _) = quotient(&r, &Ideal::generated(&r, &[4]).unwrap()).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.units().len(), 2);
        assert_eq!(q.label(), "quot(Z12,(4))");
        let (q, _) = quotient(&r, &Ideal::generated(&r, &[2]).unwrap()).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.units().len(), 1);
        let r6 = z(6);
        let (q, pi) = quotient(&r6, &Ideal::zero(&r6)).unwrap();
        assert_eq!(q.order(), 6);
        assert!(pi.is_injective() && pi.is_surjective());
        assert_eq!(quotient(&r6, &Ideal::whole(&r6)).unwrap_err(), RingError::ImproperIdeal);
        assert!(q.validate().is_empty());
    }

    #[test]
    fn localizations_of_z12() {
        let r = z(12);
        let l = Localization::new(&r, &[4]).unwrap();
        assert_eq!(l.set, vec![1, 4]);
        assert_eq!(l.ring.order(), 3);
        assert!(l.ring.is_unit(l.canonical.apply(4)));
        assert!(l.canonical.check().is_ok());
        assert!(l.ring.validate().is_empty());
        assert_eq!(literal_class_count(&r, &l.set), 3);

        let l = Localization::new(&r, &[3]).unwrap();
        assert_eq!(l.set, vec![1, 3, 9]);
        assert_eq!(l.ring.order(), 4);

        let r6 = z(6);
        let l = Localization::new(&r6, &[5]).unwrap();
        assert_eq!(l.ring.order(), 6);
        assert_eq!(l.ring.fingerprint(), r6.fingerprint());

        assert_eq!(Localization::new(&r, &[6]).err().map(|e| e.to_string()),
            Some(RingError::DegenerateLocalization.to_string()));
    }

    #[test]
    fn fraction_relation_matches_literal_definition() {
        let rings = [
            z(12),
            z(18),
            z(8),
            Arc::new(FiniteRing::product(vec![z(4), z(3)]).unwrap()),
            Arc::new(FiniteRing::idealization(8, 2).unwrap()),
        ];
        for r in &rings {
            for g in r.elements() {
                let Ok(l) = Localization::new(r, &[g]) else { continue };
                assert_eq!(literal_class_count(r, &l.set), l.ring.order(), "{} S=<{g}>", r.label());
                assert!(l.ring.validate().is_empty());
                assert!(l.canonical.check().is_ok());
                for &s in &l.set {
                    assert!(l.ring.is_unit(l.canonical.apply(s)));
                    // s/s = 1/1
                    assert_eq!(l.fraction(s, s), Some(l.ring.one()));
                }
            }
        }
    }
}
