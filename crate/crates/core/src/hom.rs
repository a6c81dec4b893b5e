use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Result, RingError};
use crate::ideal::Ideal;
use crate::ring::FiniteRing;

/// A map between finite rings given as an element table.
#[derive(Clone)]
pub struct RingHom {
    domain: Arc<FiniteRing>,
    codomain: Arc<FiniteRing>,
    map: Vec<usize>,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.domain.label(), self.codomain.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomLaw {
    PreservesZero,
    PreservesOne,
    Additive,
    Multiplicative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomViolation {
    pub law: HomLaw,
    pub witness: Vec<usize>,
}

impl fmt::Display for HomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.law {
            HomLaw::PreservesZero => write!(f, "f(0)=0 violated"),
            HomLaw::PreservesOne => write!(f, "f(1)=1 violated"),
            HomLaw::Additive => write!(f, "f(a+b)=f(a)+f(b) violated at {:?}", self.witness),
            HomLaw::Multiplicative => write!(f, "f(ab)=f(a)f(b) violated at {:?}", self.witness),
        }
    }
}

impl RingHom {
    /// Checks shape only; use [`RingHom::check`] for the homomorphism laws.
    pub fn new(domain: Arc<FiniteRing>, codomain: Arc<FiniteRing>, map: Vec<usize>) -> Result<RingHom> {
        if map.len() != domain.order() {
            return Err(RingError::MalformedHom(format!(
                "map has {} entries for a domain of order {}",
                map.len(),
                domain.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= codomain.order()) {
            return Err(RingError::MalformedHom(format!(
                "image index {bad} out of range for codomain of order {}",
                codomain.order()
            )));
        }
        Ok(RingHom { domain, codomain, map })
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> RingHom {
        RingHom {
            domain: Arc::clone(ring),
            codomain: Arc::clone(ring),
            map: ring.elements().collect(),
        }
    }

    /// Projection of a product ring onto factor `k`.
    pub fn projection(product: &Arc<FiniteRing>, k: usize) -> Result<RingHom> {
        let factors = product
            .factors()
            .ok_or_else(|| RingError::Precondition("projection needs a product ring".into()))?;
        let target = factors
            .get(k)
            .cloned()
            .ok_or_else(|| RingError::Precondition(format!("no factor {k}")))?;
        let map = product
            .elements()
            .map(|a| product.coords(a).expect("product ring")[k])
            .collect();
        Ok(RingHom { domain: Arc::clone(product), codomain: target, map })
    }

    pub fn domain(&self) -> &Arc<FiniteRing> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteRing> {
        &self.codomain
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    /// Unital ring homomorphism laws, first violation reported.
    pub fn check(&self) -> std::result::Result<(), HomViolation> {
        let (d, c) = (&*self.domain, &*self.codomain);
        if self.map[d.zero()] != c.zero() {
            return Err(HomViolation { law: HomLaw::PreservesZero, witness: vec![d.zero()] });
        }
        if self.map[d.one()] != c.one() {
            return Err(HomViolation { law: HomLaw::PreservesOne, witness: vec![d.one()] });
        }
        for a in d.elements() {
            for b in d.elements() {
                if self.map[d.add(a, b)] != c.add(self.map[a], self.map[b]) {
                    return Err(HomViolation { law: HomLaw::Additive, witness: vec![a, b] });
                }
                if self.map[d.mul(a, b)] != c.mul(self.map[a], self.map[b]) {
                    return Err(HomViolation { law: HomLaw::Multiplicative, witness: vec![a, b] });
                }
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.codomain.order());
        self.map.iter().all(|&v| {
            let fresh = !seen.contains(v);
            seen.insert(v);
            fresh
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.codomain.order());
        for &v in &self.map {
            seen.insert(v);
        }
        seen.count_ones(..) == self.codomain.order()
    }

    /// Every nonunit of the domain lands on a nonunit.
    pub fn preserves_nonunits(&self) -> bool {
        self.domain
            .nonunits()
            .iter()
            .all(|&a| !self.codomain.is_unit(self.map[a]))
    }

    /// First domain nonunit sent to a unit, if any.
    pub fn nonunit_sent_to_unit(&self) -> Option<usize> {
        self.domain
            .nonunits()
            .iter()
            .copied()
            .find(|&a| self.codomain.is_unit(self.map[a]))
    }

    pub fn kernel(&self) -> Ideal {
        self.preimage_ideal(&Ideal::zero(&self.codomain))
            .expect("zero ideal lives in the codomain")
    }

    /// `f^{-1}(J)`, always an ideal for a homomorphism.
    pub fn preimage_ideal(&self, j: &Ideal) -> Result<Ideal> {
        if j.ring().id() != self.codomain.id() {
            return Err(RingError::RingMismatch);
        }
        let mut s = FixedBitSet::with_capacity(self.domain.order());
        for a in self.domain.elements() {
            if j.contains(self.map[a]) {
                s.insert(a);
            }
        }
        Ok(Ideal::from_bits_unchecked(&self.domain, s))
    }

    /// `f(I)`; requires `f` surjective, otherwise the image need not be an ideal.
    pub fn image_ideal(&self, i: &Ideal) -> Result<Ideal> {
        if i.ring().id() != self.domain.id() {
            return Err(RingError::RingMismatch);
        }
        if !self.is_surjective() {
            return Err(RingError::NotSurjective);
        }
        let mut s = FixedBitSet::with_capacity(self.codomain.order());
        for a in i.elements() {
            s.insert(self.map[a]);
        }
        Ok(Ideal::from_bits_unchecked(&self.codomain, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::quotient;

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::zn(n).unwrap())
    }

    #[test]
    fn projections_and_quotient_maps_are_homs() {
        let r = z(12);
        let j = Ideal::generated(&r, &[4]).unwrap();
        let (q, pi) = quotient(&r, &j).unwrap();
        assert_eq!(q.order(), 4);
        assert!(pi.check().is_ok());
        assert_eq!(pi.kernel(), j);
        assert!(pi.preimage_ideal(&Ideal::whole(&q)).unwrap().is_whole());
        let img = pi.image_ideal(&Ideal::generated(&r, &[2]).unwrap()).unwrap();
        assert_eq!(img.len(), 2);
        assert!(img.is_proper());

        let p = Arc::new(FiniteRing::product(vec![z(2), z(3)]).unwrap());
        let pr = RingHom::projection(&p, 0).unwrap();
        assert!(pr.check().is_ok());
        let e = p.find("(1,0)").unwrap();
        assert!(!p.is_unit(e));
        assert!(pr.codomain().is_unit(pr.apply(e)));
        assert_eq!(pr.nonunit_sent_to_unit(), Some(e));
        assert!(!pr.preserves_nonunits());
    }

    #[test]
    fn broken_maps() {
        let r = z(6);
        let f = RingHom::new(Arc::clone(&r), Arc::clone(&r), vec![0; 6]).unwrap();
        let v = f.check().unwrap_err();
        assert_eq!(v.law, HomLaw::PreservesOne);
        assert_eq!(v.to_string(), "f(1)=1 violated");
        assert!(RingHom::new(Arc::clone(&r), Arc::clone(&r), vec![0; 5]).is_err());
        let sq = RingHom::new(Arc::clone(&r), Arc::clone(&r), (0..6).map(|a| a * a % 6).collect()).unwrap();
        assert_eq!(sq.check().unwrap_err().law, HomLaw::Additive);
    }

    #[test]
    fn image_needs_surjection() {
        let r = z(6);
        let p = Arc::new(FiniteRing::product(vec![z(6), z(6)]).unwrap());
        let diag = RingHom::new(Arc::clone(&r), Arc::clone(&p), (0..6).map(|a| a * 6 + a).collect()).unwrap();
        assert!(diag.check().is_ok());
        assert!(diag.is_injective());
        assert!(diag.preserves_nonunits());
        assert_eq!(diag.image_ideal(&Ideal::whole(&r)).unwrap_err(), RingError::NotSurjective);
    }
}
