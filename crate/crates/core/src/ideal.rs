//! Ideals as canonical element sets, and the ideal arithmetic used by the
//! classifiers: radical, residual, annihilator, sums, products.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Result, RingError};
use crate::ring::FiniteRing;

/// Default cap on the number of ideals [`all_ideals`] may produce.
pub const DEFAULT_MAX_IDEALS: usize = 4096;

#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: FixedBitSet,
    size: usize,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.members == other.members
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.id().hash(state);
        self.members.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Size first, then lexicographic on the sorted element list.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .id()
            .cmp(&other.ring.id())
            .then(self.size.cmp(&other.size))
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_set())
    }
}

impl fmt::Display for Ideal {
    /// Generator notation, e.g. `(4)` or `((1,0,0))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.is_empty() {
            return write!(f, "(0)");
        }
        let names: Vec<&str> = gens.iter().map(|&g| self.ring.name(g)).collect();
        write!(f, "({})", names.join(","))
    }
}

/// Subgroup of `(R, +)` generated by `base` and `extra`, where `base` is
/// already a subgroup.
fn extend_subgroup(ring: &FiniteRing, base: &mut FixedBitSet, extra: impl Iterator<Item = usize>) {
    let mut current: Vec<usize> = base.ones().collect();
    for x in extra {
        if base.contains(x) {
            continue;
        }
        let mut cyclic = Vec::new();
        let mut m = x;
        while m != ring.zero() {
            cyclic.push(m);
            m = ring.add(m, x);
        }
        let mut next = current.clone();
        for &s in &current {
            for &c in &cyclic {
                let t = ring.add(s, c);
                if !base.contains(t) {
                    base.insert(t);
                    next.push(t);
                }
            }
        }
        current = next;
    }
}

fn zero_set(ring: &FiniteRing) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(ring.order());
    s.insert(ring.zero());
    s
}

impl Ideal {
    /// Wraps a set already known to be an ideal.
    pub(crate) fn from_bits_unchecked(ring: &Arc<FiniteRing>, members: FixedBitSet) -> Ideal {
        let size = members.count_ones(..);
        Ideal { ring: Arc::clone(ring), members, size }
    }

    /// Checks zero membership and closure before accepting `members`.
    pub fn from_bits(ring: &Arc<FiniteRing>, members: FixedBitSet) -> Result<Ideal> {
        if members.len() != ring.order() {
            return Err(RingError::Precondition("set length differs from ring order".into()));
        }
        if !members.contains(ring.zero()) {
            return Err(RingError::Precondition("set does not contain 0".into()));
        }
        for a in members.ones() {
            for b in members.ones() {
                if !members.contains(ring.add(a, b)) {
                    return Err(RingError::Precondition(format!(
                        "not closed under addition: {} + {}",
                        ring.name(a),
                        ring.name(b)
                    )));
                }
            }
            for r in ring.elements() {
                if !members.contains(ring.mul(r, a)) {
                    return Err(RingError::Precondition(format!(
                        "not closed under multiplication: {} * {}",
                        ring.name(r),
                        ring.name(a)
                    )));
                }
            }
        }
        Ok(Self::from_bits_unchecked(ring, members))
    }

    pub fn from_elements(ring: &Arc<FiniteRing>, elems: &[usize]) -> Result<Ideal> {
        let mut bits = FixedBitSet::with_capacity(ring.order());
        for &e in elems {
            if e >= ring.order() {
                return Err(RingError::ElementOutOfRange { index: e, order: ring.order() });
            }
            bits.insert(e);
        }
        Self::from_bits(ring, bits)
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Ideal {
        Self::from_bits_unchecked(ring, zero_set(ring))
    }

    pub fn whole(ring: &Arc<FiniteRing>) -> Ideal {
        let mut s = FixedBitSet::with_capacity(ring.order());
        s.insert_range(..);
        Self::from_bits_unchecked(ring, s)
    }

    /// `(a) = { ra : r in R }`.
    pub fn principal(ring: &Arc<FiniteRing>, a: usize) -> Ideal {
        let mut s = FixedBitSet::with_capacity(ring.order());
        for r in ring.elements() {
            s.insert(ring.mul(r, a));
        }
        Self::from_bits_unchecked(ring, s)
    }

    /// Smallest ideal containing `gens`.
    pub fn generated(ring: &Arc<FiniteRing>, gens: &[usize]) -> Result<Ideal> {
        let mut bits = zero_set(ring);
        for &g in gens {
            if g >= ring.order() {
                return Err(RingError::ElementOutOfRange { index: g, order: ring.order() });
            }
            let p = Self::principal(ring, g);
            extend_subgroup(ring, &mut bits, p.members.ones());
        }
        Ok(Self::from_bits_unchecked(ring, bits))
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size == self.ring.order()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring.id() != other.ring.id() {
            return Err(RingError::RingMismatch);
        }
        Ok(())
    }

    /// Greedy generating set: scan elements in index order and keep each one
    /// not already in the span of those kept.
    pub fn generators(&self) -> Vec<usize> {
        let mut span = zero_set(&self.ring);
        let mut gens = Vec::new();
        for a in self.members.ones() {
            if span.contains(a) {
                continue;
            }
            gens.push(a);
            let p = Self::principal(&self.ring, a);
            extend_subgroup(&self.ring, &mut span, p.members.ones());
            if span.count_ones(..) == self.size {
                break;
            }
        }
        gens
    }

    /// Element names in index order, e.g. `{0,4,8}`.
    pub fn display_set(&self) -> String {
        let names: Vec<&str> = self.members.ones().map(|a| self.ring.name(a)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// `sqrt(I) = { a : a^k in I for some k >= 1 }`. The power sequence of
    /// every element repeats within `|R|` steps, so the cached distinct powers
    /// are exhaustive.
    pub fn radical(&self) -> Ideal {
        let mut s = FixedBitSet::with_capacity(self.ring.order());
        for a in self.ring.elements() {
            if self.ring.powers(a).any(|p| self.contains(p)) {
                s.insert(a);
            }
        }
        Self::from_bits_unchecked(&self.ring, s)
    }

    /// `(I : J) = { a : aJ ⊆ I }`.
    pub fn residual(&self, j: &Ideal) -> Result<Ideal> {
        self.same_ring(j)?;
        let gens = j.generators();
        let mut s = FixedBitSet::with_capacity(self.ring.order());
        for a in self.ring.elements() {
            if gens.iter().all(|&g| self.contains(self.ring.mul(a, g))) {
                s.insert(a);
            }
        }
        Ok(Self::from_bits_unchecked(&self.ring, s))
    }

    /// `(I : c) = { a : ac in I }`.
    pub fn residual_element(&self, c: usize) -> Ideal {
        let mut s = FixedBitSet::with_capacity(self.ring.order());
        for a in self.ring.elements() {
            if self.contains(self.ring.mul(a, c)) {
                s.insert(a);
            }
        }
        Self::from_bits_unchecked(&self.ring, s)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut bits = self.members.clone();
        extend_subgroup(&self.ring, &mut bits, other.members.ones());
        Ok(Self::from_bits_unchecked(&self.ring, bits))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut bits = self.members.clone();
        bits.intersect_with(&other.members);
        Ok(Self::from_bits_unchecked(&self.ring, bits))
    }

    /// Ideal generated by the pairwise products. The product set is already
    /// closed under multiplication by R, so only additive closure is needed.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut products = FixedBitSet::with_capacity(self.ring.order());
        for a in self.members.ones() {
            for b in other.members.ones() {
                products.insert(self.ring.mul(a, b));
            }
        }
        let mut bits = zero_set(&self.ring);
        extend_subgroup(&self.ring, &mut bits, products.ones());
        Ok(Self::from_bits_unchecked(&self.ring, bits))
    }

    /// `I^k` for `k >= 1`.
    pub fn power(&self, k: usize) -> Result<Ideal> {
        if k == 0 {
            return Err(RingError::Precondition("ideal power needs k >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `xI = { xi : i in I }`, an ideal for every `x`.
    pub fn scale(&self, x: usize) -> Ideal {
        let mut s = FixedBitSet::with_capacity(self.ring.order());
        for a in self.members.ones() {
            s.insert(self.ring.mul(x, a));
        }
        Self::from_bits_unchecked(&self.ring, s)
    }
}

/// `ann(x) = (0 : x)`.
pub fn annihilator(ring: &Arc<FiniteRing>, x: usize) -> Ideal {
    Ideal::zero(ring).residual_element(x)
}

/// `Z(R)`: elements `r` with `rs = 0` for some `s != 0`.
pub fn zero_divisors(ring: &FiniteRing) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(ring.order());
    for r in ring.elements() {
        if ring
            .elements()
            .any(|t| t != ring.zero() && ring.mul(r, t) == ring.zero())
        {
            s.insert(r);
        }
    }
    s
}

/// `Z_I(R)`: elements `r` with `rs in I` for some `s` outside `I`.
pub fn z_relative(i: &Ideal) -> Result<FixedBitSet> {
    if !i.is_proper() {
        return Err(RingError::ImproperIdeal);
    }
    let ring = i.ring();
    let outside: Vec<usize> = ring.elements().filter(|&s| !i.contains(s)).collect();
    let mut z = FixedBitSet::with_capacity(ring.order());
    for r in ring.elements() {
        if outside.iter().any(|&s| i.contains(ring.mul(r, s))) {
            z.insert(r);
        }
    }
    Ok(z)
}

/// Every ideal of `ring`, obtained by closing the principal ideals under
/// pairwise sums. Sorted by size, then lexicographically.
pub fn all_ideals(ring: &Arc<FiniteRing>, max_ideals: usize) -> Result<Vec<Ideal>> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut known: Vec<Ideal> = Vec::new();
    for a in ring.elements() {
        let p = Ideal::principal(ring, a);
        if seen.insert(p.members.clone()) {
            known.push(p);
        }
    }
    let mut i = 0;
    while i < known.len() {
        for j in 0..i {
            if known[i].is_subset(&known[j]) || known[j].is_subset(&known[i]) {
                continue;
            }
            let s = known[i].sum(&known[j])?;
            if seen.insert(s.members.clone()) {
                known.push(s);
                if known.len() > max_ideals {
                    return Err(RingError::TooManyIdeals { max: max_ideals });
                }
            }
        }
        i += 1;
    }
    if known.len() > max_ideals {
        return Err(RingError::TooManyIdeals { max: max_ideals });
    }
    known.sort();
    Ok(known)
}

/// Definition check: `ab in P` forces `a in P` or `b in P`.
pub fn is_prime(p: &Ideal) -> bool {
    if !p.is_proper() {
        return false;
    }
    let ring = p.ring();
    let outside: Vec<usize> = ring.elements().filter(|&a| !p.contains(a)).collect();
    outside
        .iter()
        .all(|&a| outside.iter().all(|&b| !p.contains(ring.mul(a, b))))
}

/// Proper ideals not strictly inside another proper ideal.
pub fn maximal_ideals(ideals: &[Ideal]) -> Vec<Ideal> {
    let proper: Vec<&Ideal> = ideals.iter().filter(|i| i.is_proper()).collect();
    proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
        .map(|i| (*i).clone())
        .collect()
}

pub fn prime_ideals(ideals: &[Ideal]) -> Vec<Ideal> {
    ideals.iter().filter(|i| is_prime(i)).cloned().collect()
}

pub fn nilradical(ring: &Arc<FiniteRing>) -> Ideal {
    Ideal::zero(ring).radical()
}

pub fn jacobson_radical(ring: &Arc<FiniteRing>, ideals: &[Ideal]) -> Ideal {
    maximal_ideals(ideals)
        .iter()
        .fold(Ideal::whole(ring), |acc, m| acc.intersection(m).expect("same ring"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::zn(n).unwrap())
    }

    fn elems(i: &Ideal) -> Vec<usize> {
        i.elements().collect()
    }

    #[test]
    fn generated_ideals() {
        let r = z(12);
        assert_eq!(elems(&Ideal::generated(&r, &[8]).unwrap()), vec![0, 4, 8]);
        assert!(Ideal::generated(&r, &[]).unwrap().is_zero());
        let r6 = z(6);
        assert!(Ideal::generated(&r6, &[2, 3]).unwrap().is_whole());
        assert_eq!(
            Ideal::generated(&r, &[4, 6]).unwrap(),
            Ideal::generated(&r, &[6, 4]).unwrap()
        );
        assert!(Ideal::generated(&r, &[12]).is_err());
    }

    #[test]
    fn ideal_counts_match_divisors() {
        for n in 2..=60usize {
            let r = z(n);
            let d = (1..=n).filter(|k| n % k == 0).count();
            assert_eq!(all_ideals(&r, DEFAULT_MAX_IDEALS).unwrap().len(), d, "Z{n}");
        }
        let r = z(12);
        let ideals = all_ideals(&r, 100).unwrap();
        let gens: Vec<String> = ideals.iter().map(|i| i.to_string()).collect();
        assert_eq!(gens, ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
    }

    #[test]
    fn field_and_product_ideals() {
        let f = z(7);
        assert_eq!(all_ideals(&f, 10).unwrap().len(), 2);
        let p = Arc::new(FiniteRing::product(vec![z(2), z(2)]).unwrap());
        assert_eq!(all_ideals(&p, 10).unwrap().len(), 4);
        assert_eq!(all_ideals(&z(12), 3).unwrap_err(), RingError::TooManyIdeals { max: 3 });
    }

    #[test]
    fn radicals() {
        let r = z(12);
        let i = Ideal::generated(&r, &[4]).unwrap();
        assert_eq!(i.radical(), Ideal::generated(&r, &[2]).unwrap());
        assert!(Ideal::zero(&z(6)).radical().is_zero());

        let r = Arc::new(FiniteRing::idealization(12, 6).unwrap());
        let i = Ideal::generated(&r, &[r.find("(0,6)").unwrap()]).unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!(i.radical().display_set(), "{(0,0),(0,6),(6,0),(6,6)}");
    }

    #[test]
    fn residuals_and_annihilators() {
        let r = z(12);
        let i4 = Ideal::generated(&r, &[4]).unwrap();
        let i2 = Ideal::generated(&r, &[2]).unwrap();
        assert_eq!(i4.residual(&i2).unwrap(), i2);
        assert_eq!(i4.residual(&Ideal::whole(&r)).unwrap(), i4);
        let r6 = z(6);
        assert_eq!(elems(&Ideal::zero(&r6).residual_element(3)), vec![0, 2, 4]);
        assert_eq!(annihilator(&r, 6), i2);
        assert!(annihilator(&r, 0).is_whole());
        assert!(annihilator(&r, 1).is_zero());
        assert_eq!(i4.residual(&Ideal::zero(&z(12))), Err(RingError::RingMismatch));
    }

    #[test]
    fn zero_divisor_sets() {
        let r = z(6);
        assert_eq!(zero_divisors(&r).ones().collect::<Vec<_>>(), vec![0, 2, 3, 4]);
        assert_eq!(zero_divisors(&z(7)).ones().collect::<Vec<_>>(), vec![0]);
        let r = z(12);
        let zi = z_relative(&Ideal::generated(&r, &[4]).unwrap()).unwrap();
        assert!(zi.contains(2));
        assert_eq!(z_relative(&Ideal::whole(&r)).unwrap_err(), RingError::ImproperIdeal);
    }

    #[test]
    fn products_sums_intersections() {
        let r = z(12);
        let g = |x| Ideal::generated(&r, &[x]).unwrap();
        assert_eq!(g(2).product(&g(3)).unwrap(), g(6));
        assert_eq!(g(4).product(&Ideal::whole(&r)).unwrap(), g(4));
        assert_eq!(g(2).sum(&g(3)).unwrap(), Ideal::whole(&r));
        assert_eq!(g(2).power(2).unwrap(), g(4));
        assert_eq!(g(6).power(2).unwrap(), g(0));
        let r6 = z(6);
        let i = Ideal::generated(&r6, &[2]).unwrap();
        let j = Ideal::generated(&r6, &[3]).unwrap();
        assert!(i.intersection(&j).unwrap().is_zero());
    }

    #[test]
    fn radicals_of_rings() {
        let r = z(12);
        let ideals = all_ideals(&r, 100).unwrap();
        let g = |x| Ideal::generated(&r, &[x]).unwrap();
        assert_eq!(nilradical(&r), g(6));
        assert_eq!(maximal_ideals(&ideals), vec![g(3), g(2)]);
        assert_eq!(jacobson_radical(&r, &ideals), g(6));
        assert_eq!(prime_ideals(&ideals), vec![g(3), g(2)]);

        let r8 = z(8);
        let ideals = all_ideals(&r8, 100).unwrap();
        let two = Ideal::generated(&r8, &[2]).unwrap();
        assert_eq!(nilradical(&r8), two);
        assert_eq!(maximal_ideals(&ideals), vec![two]);

        let f = z(5);
        let ideals = all_ideals(&f, 100).unwrap();
        assert!(nilradical(&f).is_zero());
        assert!(jacobson_radical(&f, &ideals).is_zero());
    }

    #[test]
    fn display_uses_generators() {
        let p = Arc::new(
            FiniteRing::product(vec![z(2), z(2), z(2)]).unwrap(),
        );
        let i = Ideal::generated(&p, &[p.find("(1,0,0)").unwrap()]).unwrap();
        assert_eq!(i.to_string(), "((1,0,0))");
        assert_eq!(i.display_set(), "{(0,0,0),(1,0,0)}");
    }
}
