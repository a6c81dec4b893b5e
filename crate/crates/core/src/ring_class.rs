//! Ring-level predicates: fields, quasilocal, reduced, von Neumann regular,
//! divided, chained and u-rings, plus irreducible elements.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::ideal::{is_prime, maximal_ideals, Ideal};
use crate::ring::FiniteRing;

pub fn is_field(ring: &FiniteRing) -> bool {
    ring.nonunits() == [ring.zero()]
}

/// No zero divisors besides 0.
pub fn is_domain(ring: &FiniteRing) -> bool {
    let z = ring.zero();
    ring.elements()
        .filter(|&a| a != z)
        .all(|a| ring.elements().filter(|&b| b != z).all(|b| ring.mul(a, b) != z))
}

/// Exactly one maximal ideal among `ideals` (the full ideal list of the ring).
pub fn is_quasilocal(ideals: &[Ideal]) -> bool {
    maximal_ideals(ideals).len() == 1
}

pub fn is_reduced(ring: &FiniteRing) -> bool {
    ring.nilpotents().count_ones(..) == 1
}

/// Every `x` has some `y` with `x^2 y = x`.
pub fn is_von_neumann_regular(ring: &FiniteRing) -> bool {
    ring.elements().all(|x| {
        let x2 = ring.mul(x, x);
        ring.elements().any(|y| ring.mul(x2, y) == x)
    })
}

/// `x | y` means `y in (x)`.
fn divisibility(ring: &Arc<FiniteRing>) -> Vec<FixedBitSet> {
    ring.elements()
        .map(|x| Ideal::principal(ring, x).members().clone())
        .collect()
}

/// For every prime `P` and every `x` outside `P`, `x` divides each element of `P`.
pub fn is_divided(ring: &Arc<FiniteRing>, ideals: &[Ideal]) -> bool {
    let div = divisibility(ring);
    ideals.iter().filter(|p| is_prime(p)).all(|p| {
        ring.elements()
            .filter(|&x| !p.contains(x))
            .all(|x| p.members().is_subset(&div[x]))
    })
}

/// Divisibility is a total preorder: `x | y` or `y | x` for all pairs.
pub fn is_chained(ring: &Arc<FiniteRing>) -> bool {
    let div = divisibility(ring);
    ring.elements()
        .all(|x| ring.elements().all(|y| div[x].contains(y) || div[y].contains(x)))
}

/// An ideal covered by a union of ideals, none of which contains it.
#[derive(Debug, Clone)]
pub struct UnionCover {
    pub covered: Ideal,
    pub cover: Vec<Ideal>,
}

/// u-ring test. For each ideal `I` it is enough to test the largest candidate
/// family `{J : I ⊄ J}`: any covering family with no member containing `I`
/// is a subfamily of it. On failure the family is pruned to an irredundant
/// cover and returned.
pub fn u_ring_cover(ideals: &[Ideal]) -> Option<UnionCover> {
    for i in ideals {
        let family: Vec<&Ideal> = ideals.iter().filter(|j| !i.is_subset(j)).collect();
        let covered = |fam: &[&Ideal]| {
            i.elements().all(|x| fam.iter().any(|j| j.contains(x)))
        };
        if !covered(&family) {
            continue;
        }
        let mut cover = family;
        let mut k = 0;
        while k < cover.len() {
            let mut trial = cover.clone();
            trial.remove(k);
            if covered(&trial) {
                cover = trial;
            } else {
                k += 1;
            }
        }
        return Some(UnionCover {
            covered: i.clone(),
            cover: cover.into_iter().cloned().collect(),
        });
    }
    None
}

pub fn is_u_ring(ideals: &[Ideal]) -> bool {
    u_ring_cover(ideals).is_none()
}

/// Nonunits `x` admitting no factorization `x = cd` with `c, d` both
/// nonunits. Zero is excluded because `0 = 0 * 0`.
pub fn irreducible_elements(ring: &FiniteRing) -> Vec<usize> {
    let nu = ring.nonunits();
    let mut products = FixedBitSet::with_capacity(ring.order());
    for (k, &c) in nu.iter().enumerate() {
        for &d in &nu[k..] {
            products.insert(ring.mul(c, d));
        }
    }
    nu.iter().copied().filter(|&x| !products.contains(x)).collect()
}
