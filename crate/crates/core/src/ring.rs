//! Finite commutative rings with identity, stored as Cayley tables over
//! element indices `0..order`.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Axiom, AxiomViolation, Result, RingError};

/// Largest ring order accepted by default.
pub const DEFAULT_MAX_ORDER: usize = 512;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Identity token of a constructed ring. Two rings built from identical
/// tables still get different ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

impl RingId {
    fn fresh() -> Self {
        RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// A ring-scoped element handle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Element {
    ring: RingId,
    index: usize,
}

impl Element {
    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn index(&self) -> usize {
        self.index
    }
}

/// How a ring was built. Products keep their factors so that coordinates
/// and projections can be recovered.
#[derive(Debug, Clone)]
pub enum Construction {
    Zn(usize),
    Product(Vec<Arc<FiniteRing>>),
    Idealization { n: usize, d: usize },
    Quotient,
    Localization,
    Table,
}

pub struct FiniteRing {
    id: RingId,
    label: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    names: Vec<String>,
    name_index: HashMap<String, usize>,
    units: FixedBitSet,
    unit_list: Vec<usize>,
    nonunit_list: Vec<usize>,
    powers: Vec<Vec<u32>>,
    nilpotent: FixedBitSet,
    construction: Construction,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("units", &self.unit_list.len())
            .finish()
    }
}

/// Additive and multiplicative tables before any caches are derived.
pub(crate) struct RawRing {
    pub label: String,
    pub order: usize,
    pub add: Vec<u32>,
    pub mul: Vec<u32>,
    pub zero: usize,
    pub one: usize,
    pub names: Vec<String>,
    pub construction: Construction,
}

impl RawRing {
    pub(crate) fn build(self) -> FiniteRing {
        let n = self.order;
        let mut neg = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if self.add[a * n + b] as usize == self.zero {
                    neg[a] = b as u32;
                    break;
                }
            }
        }
        let mut units = FixedBitSet::with_capacity(n);
        for a in 0..n {
            if (0..n).any(|b| self.mul[a * n + b] as usize == self.one) {
                units.insert(a);
            }
        }
        let unit_list: Vec<usize> = units.ones().collect();
        let nonunit_list: Vec<usize> = (0..n).filter(|&a| !units.contains(a)).collect();

        let mut powers = Vec::with_capacity(n);
        let mut nilpotent = FixedBitSet::with_capacity(n);
        let mut seen = FixedBitSet::with_capacity(n);
        for a in 0..n {
            seen.clear();
            let mut seq = Vec::new();
            let mut p = a;
            while !seen.contains(p) {
                seen.insert(p);
                seq.push(p as u32);
                p = self.mul[p * n + a] as usize;
            }
            if seen.contains(self.zero) {
                nilpotent.insert(a);
            }
            powers.push(seq);
        }
        let name_index = self
            .names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        FiniteRing {
            id: RingId::fresh(),
            label: self.label,
            order: n,
            add: self.add,
            mul: self.mul,
            neg,
            zero: self.zero,
            one: self.one,
            names: self.names,
            name_index,
            units,
            unit_list,
            nonunit_list,
            powers,
            nilpotent,
            construction: self.construction,
        }
    }
}

fn flatten(table: &[Vec<usize>], n: usize, closed: Axiom) -> Result<Vec<u32>> {
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(RingError::MalformedTable(format!(
            "tables must both be {n}x{n}"
        )));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, row) in table.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(RingError::Axioms(vec![AxiomViolation {
                    axiom: closed,
                    witness: vec![i, j],
                }]));
            }
            out.push(v as u32);
        }
    }
    Ok(out)
}

impl FiniteRing {
    /// The integers modulo `n`.
    pub fn zn(n: usize) -> Result<FiniteRing> {
        if n < 2 {
            return Err(RingError::InvalidOrder(n));
        }
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(((a + b) % n) as u32);
                mul.push(((a * b) % n) as u32);
            }
        }
        Ok(RawRing {
            label: format!("Z{n}"),
            order: n,
            add,
            mul,
            zero: 0,
            one: 1,
            names: (0..n).map(|i| i.to_string()).collect(),
            construction: Construction::Zn(n),
        }
        .build())
    }

    /// Componentwise product. Element indices are mixed-radix with the first
    /// factor most significant, so index order is lexicographic tuple order.
    pub fn product(factors: Vec<Arc<FiniteRing>>) -> Result<FiniteRing> {
        if factors.len() < 2 {
            return Err(RingError::Arity(factors.len()));
        }
        let orders: Vec<usize> = factors.iter().map(|r| r.order).collect();
        let n: usize = orders.iter().product();
        let decode = |mut idx: usize| -> Vec<usize> {
            let mut coords = vec![0; orders.len()];
            for k in (0..orders.len()).rev() {
                coords[k] = idx % orders[k];
                idx /= orders[k];
            }
            coords
        };
        let encode = |coords: &[usize]| -> usize {
            coords
                .iter()
                .zip(&orders)
                .fold(0, |acc, (&c, &o)| acc * o + c)
        };
        let coords: Vec<Vec<usize>> = (0..n).map(decode).collect();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        let mut buf = vec![0; orders.len()];
        for a in 0..n {
            for b in 0..n {
                for (k, f) in factors.iter().enumerate() {
                    buf[k] = f.add(coords[a][k], coords[b][k]);
                }
                add.push(encode(&buf) as u32);
                for (k, f) in factors.iter().enumerate() {
                    buf[k] = f.mul(coords[a][k], coords[b][k]);
                }
                mul.push(encode(&buf) as u32);
            }
        }
        let zero = encode(&factors.iter().map(|f| f.zero).collect::<Vec<_>>());
        let one = encode(&factors.iter().map(|f| f.one).collect::<Vec<_>>());
        let names = coords
            .iter()
            .map(|c| {
                let parts: Vec<&str> = c
                    .iter()
                    .zip(&factors)
                    .map(|(&x, f)| f.name(x))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let label = format!(
            "prod({})",
            factors
                .iter()
                .map(|f| f.label.as_str())
                .collect::<Vec<_>>()
                .join(",")
        );
        Ok(RawRing {
            label,
            order: n,
            add,
            mul,
            zero,
            one,
            names,
            construction: Construction::Product(factors),
        }
        .build())
    }

    /// `Z_n (+) (d)`: pairs `(a, m)` with `m` in the ideal `(d)` of `Z_n`,
    /// multiplied by `(a,m)(b,k) = (ab, ak + bm)`.
    pub fn idealization(n: usize, d: usize) -> Result<FiniteRing> {
        if n < 2 {
            return Err(RingError::InvalidOrder(n));
        }
        if d == 0 || n % d != 0 {
            return Err(RingError::InvalidModule { n, d });
        }
        let msize = n / d;
        let order = n * msize;
        let encode = |a: usize, m: usize| a * msize + m / d;
        let decode = |i: usize| (i / msize, (i % msize) * d);
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a, m) = decode(x);
            for y in 0..order {
                let (b, k) = decode(y);
                add.push(encode((a + b) % n, (m + k) % n) as u32);
                mul.push(encode((a * b) % n, (a * k + b * m) % n) as u32);
            }
        }
        let names = (0..order)
            .map(|i| {
                let (a, m) = decode(i);
                format!("({a},{m})")
            })
            .collect();
        Ok(RawRing {
            label: format!("idealize({n},{d})"),
            order,
            add,
            mul,
            zero: encode(0, 0),
            one: encode(1 % n, 0),
            names,
            construction: Construction::Idealization { n, d },
        }
        .build())
    }

    /// Validates explicit tables. Additive and multiplicative identities are
    /// located by scan; element names default to the indices.
    pub fn from_tables(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<FiniteRing> {
        let n = add.len();
        if n == 0 {
            return Err(RingError::MalformedTable("empty table".into()));
        }
        let add = flatten(add, n, Axiom::AddClosed)?;
        let mul = flatten(mul, n, Axiom::MulClosed)?;
        Self::from_flat_tables("table".into(), n, add, mul, None)
    }

    pub(crate) fn from_flat_tables(
        label: String,
        n: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        names: Option<Vec<String>>,
    ) -> Result<FiniteRing> {
        let is_identity =
            |t: &[u32], e: usize| (0..n).all(|x| t[e * n + x] as usize == x);
        let zero = (0..n).find(|&e| is_identity(&add, e));
        let one = (0..n).find(|&e| is_identity(&mul, e));
        let mut violations = Vec::new();
        if zero.is_none() {
            violations.push(AxiomViolation { axiom: Axiom::AddIdentity, witness: vec![] });
        }
        if one.is_none() {
            violations.push(AxiomViolation { axiom: Axiom::MulIdentity, witness: vec![] });
        }
        let raw = RawRing {
            label,
            order: n,
            add,
            mul,
            zero: zero.unwrap_or(0),
            one: one.unwrap_or(0),
            names: names.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect()),
            construction: Construction::Table,
        };
        violations.extend(check_axioms(&raw.add, &raw.mul, n, raw.zero, raw.one, zero.is_some()));
        if !violations.is_empty() {
            return Err(RingError::Axioms(violations));
        }
        Ok(raw.build())
    }

    /// Full table scan of every ring axiom. Empty for a valid ring.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let n = self.order;
        let mut v = Vec::new();
        if !(0..n).all(|x| self.add(self.zero, x) == x) {
            v.push(AxiomViolation { axiom: Axiom::AddIdentity, witness: vec![self.zero] });
        }
        if !(0..n).all(|x| self.mul(self.one, x) == x) {
            v.push(AxiomViolation { axiom: Axiom::MulIdentity, witness: vec![self.one] });
        }
        v.extend(check_axioms(&self.add, &self.mul, n, self.zero, self.one, true));
        v
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    /// DSL-style description of how the ring was built, e.g. `prod(Z2,Z3)`.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Replaces the label, e.g. to record the file a table was read from.
    pub fn with_label(mut self, label: impl Into<String>) -> FiniteRing {
        self.label = label.into();
        self
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    /// `a^k` for `k >= 1`; `a^0` is the identity.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// The distinct positive powers `a, a^2, ...` in order of first appearance.
    pub fn powers(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.powers[a].iter().map(|&p| p as usize)
    }

    #[inline]
    pub fn is_unit(&self, a: usize) -> bool {
        self.units.contains(a)
    }

    pub fn units(&self) -> &[usize] {
        &self.unit_list
    }

    pub fn unit_set(&self) -> &FixedBitSet {
        &self.units
    }

    pub fn nonunits(&self) -> &[usize] {
        &self.nonunit_list
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.nilpotent.contains(a)
    }

    pub fn nilpotents(&self) -> &FixedBitSet {
        &self.nilpotent
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Element index by display name (whitespace-insensitive).
    pub fn find(&self, name: &str) -> Option<usize> {
        let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        self.name_index.get(&key).copied()
    }

    pub fn element(&self, index: usize) -> Result<Element> {
        if index >= self.order {
            return Err(RingError::ElementOutOfRange { index, order: self.order });
        }
        Ok(Element { ring: self.id, index })
    }

    /// Unwraps a handle, rejecting handles from other rings.
    pub fn index_of(&self, e: Element) -> Result<usize> {
        if e.ring != self.id {
            return Err(RingError::RingMismatch);
        }
        Ok(e.index)
    }

    pub fn add_elements(&self, a: Element, b: Element) -> Result<Element> {
        let s = self.add(self.index_of(a)?, self.index_of(b)?);
        self.element(s)
    }

    pub fn mul_elements(&self, a: Element, b: Element) -> Result<Element> {
        let p = self.mul(self.index_of(a)?, self.index_of(b)?);
        self.element(p)
    }

    /// Product factors, when the ring was built with [`FiniteRing::product`].
    pub fn factors(&self) -> Option<&[Arc<FiniteRing>]> {
        match &self.construction {
            Construction::Product(f) => Some(f),
            _ => None,
        }
    }

    /// Coordinates of a product element.
    pub fn coords(&self, mut a: usize) -> Option<Vec<usize>> {
        let factors = self.factors()?;
        let mut c = vec![0; factors.len()];
        for k in (0..factors.len()).rev() {
            c[k] = a % factors[k].order;
            a /= factors[k].order;
        }
        Some(c)
    }

    /// Inverse of [`FiniteRing::coords`].
    pub fn from_coords(&self, coords: &[usize]) -> Option<usize> {
        let factors = self.factors()?;
        if coords.len() != factors.len() {
            return None;
        }
        Some(
            coords
                .iter()
                .zip(factors)
                .fold(0, |acc, (&c, f)| acc * f.order + c),
        )
    }

    /// Fingerprint used in place of isomorphism testing.
    pub fn fingerprint(&self) -> (usize, usize) {
        (self.order, self.unit_list.len())
    }
}

fn check_axioms(
    add: &[u32],
    mul: &[u32],
    n: usize,
    zero: usize,
    one: usize,
    have_zero: bool,
) -> Vec<AxiomViolation> {
    let a_ = |x: usize, y: usize| add[x * n + y] as usize;
    let m_ = |x: usize, y: usize| mul[x * n + y] as usize;
    let mut v = Vec::new();
    let mut first = |axiom: Axiom, found: Option<Vec<usize>>| {
        if let Some(witness) = found {
            v.push(AxiomViolation { axiom, witness });
        }
    };
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    let triples = || {
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    };
    first(
        Axiom::AddCommutative,
        pairs().find(|&(x, y)| a_(x, y) != a_(y, x)).map(|(x, y)| vec![x, y]),
    );
    first(
        Axiom::AddAssociative,
        triples()
            .find(|&(x, y, z)| a_(a_(x, y), z) != a_(x, a_(y, z)))
            .map(|(x, y, z)| vec![x, y, z]),
    );
    if have_zero {
        first(
            Axiom::AddInverse,
            (0..n).find(|&x| (0..n).all(|y| a_(x, y) != zero)).map(|x| vec![x]),
        );
    }
    first(
        Axiom::MulCommutative,
        pairs().find(|&(x, y)| m_(x, y) != m_(y, x)).map(|(x, y)| vec![x, y]),
    );
    first(
        Axiom::MulAssociative,
        triples()
            .find(|&(x, y, z)| m_(m_(x, y), z) != m_(x, m_(y, z)))
            .map(|(x, y, z)| vec![x, y, z]),
    );
    first(
        Axiom::Distributive,
        triples()
            .find(|&(x, y, z)| m_(x, a_(y, z)) != a_(m_(x, y), m_(x, z)))
            .map(|(x, y, z)| vec![x, y, z]),
    );
    if zero == one {
        first(Axiom::NonzeroIdentity, Some(vec![zero]));
    }
    v
}
