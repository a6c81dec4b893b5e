//! Evaluation of ring and ideal expressions.

use std::path::Path;
use std::sync::Arc;

use absorb_core::{catalog, localization, quotient, table_format, FiniteRing, Ideal, RingError, RingHom};

use crate::dsl::{IdealExpr, Lit, ParseError, RingExpr};

/// Failure classes, each with its own exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Semantic(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Semantic(_) => 3,
            CliError::Resource(_) => 4,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::TooLarge { .. } | RingError::TooManyIdeals { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

/// A constructed ring, with the ring it was built from (for quotients and
/// localizations) so element literals can name parent elements.
pub struct Built {
    pub ring: Arc<FiniteRing>,
    parent: Option<(Box<Built>, RingHom)>,
}

/// Order of the ring an expression denotes, when known without building it.
fn order_hint(e: &RingExpr) -> Option<u128> {
    match e {
        RingExpr::Zn(n) => Some(*n as u128),
        RingExpr::Prod(fs) => fs.iter().try_fold(1u128, |acc, f| order_hint(f).map(|o| acc.saturating_mul(o))),
        RingExpr::Idealize(n, d) if *d > 0 && n % d == 0 => Some((*n as u128) * (*n / *d) as u128),
        _ => None,
    }
}

fn check_order(label: &str, order: u128, max: usize) -> Result<(), CliError> {
    if order > max as u128 {
        return Err(CliError::Resource(format!(
            "{label} has order {order}, above --max-order {max}; nothing was computed for it"
        )));
    }
    Ok(())
}

pub fn build(e: &RingExpr, max_order: usize) -> Result<Built, CliError> {
    if let Some(o) = order_hint(e) {
        check_order(&e.to_string(), o, max_order)?;
    }
    let leaf = |r: FiniteRing| Built { ring: Arc::new(r), parent: None };
    let built = match e {
        RingExpr::Zn(n) => leaf(FiniteRing::zn(*n)?),
        RingExpr::Idealize(n, d) => leaf(FiniteRing::idealization(*n, *d)?),
        RingExpr::Prod(fs) => {
            let factors = fs.iter().map(|f| build(f, max_order).map(|b| b.ring)).collect::<Result<Vec<_>, _>>()?;
            leaf(FiniteRing::product(factors)?)
        }
        RingExpr::Quot(r, i) => {
            let parent = build(r, max_order)?;
            let j = parent.ideal(i)?;
            if !j.is_proper() {
                return Err(CliError::Semantic(format!("quot({r},{i}): the ideal is the whole ring")));
            }
            let (q, pi) = quotient(&parent.ring, &j)?;
            Built { ring: q, parent: Some((Box::new(parent), pi)) }
        }
        RingExpr::Loc(r, s) => {
            let parent = build(r, max_order)?;
            let gens = s.iter().map(|l| parent.element(l)).collect::<Result<Vec<_>, _>>()?;
            let (l, canon) = localization(&parent.ring, &gens)?;
            Built { ring: l, parent: Some((Box::new(parent), canon)) }
        }
        RingExpr::Table(p) => {
            if let Some(name) = p.strip_prefix('@') {
                let r = catalog::by_name(name)
                    .ok_or_else(|| CliError::Semantic(format!("unknown catalog ring '@{name}' (known: @f2xy)")))?;
                leaf(r)
            } else {
                let text = std::fs::read_to_string(Path::new(p))
                    .map_err(|err| CliError::Semantic(format!("cannot read table {p}: {err}")))?;
                let r = table_format::parse(&text)?;
                check_order(p, r.order() as u128, max_order)?;
                leaf(r.with_label(format!("table({p})")))
            }
        }
    };
    check_order(built.ring.label(), built.ring.order() as u128, max_order)?;
    Ok(built)
}

fn canonical(l: &Lit) -> String {
    match l {
        Lit::Atom(a) => match a.parse::<u128>() {
            Ok(v) => v.to_string(),
            Err(_) => a.clone(),
        },
        Lit::Tuple(items) => format!("({})", items.iter().map(canonical).collect::<Vec<_>>().join(",")),
    }
}

impl Built {
    /// Index of an element literal: by name, or through the parent ring.
    pub fn element(&self, l: &Lit) -> Result<usize, CliError> {
        if let Some(x) = self.ring.find(&canonical(l)) {
            return Ok(x);
        }
        if let Some((p, map)) = &self.parent {
            if let Ok(x) = p.element(l) {
                return Ok(map.apply(x));
            }
        }
        Err(CliError::Parse(format!("element literal '{l}' is out of range for {}", self.ring.label())))
    }

    /// The ideal generated by an ideal expression. In rings whose elements
    /// are tuples, `(1,0,0)` names the single generator `(1,0,0)`.
    pub fn ideal(&self, e: &IdealExpr) -> Result<Ideal, CliError> {
        let tuples = self.ring.name(0).starts_with('(');
        let gens = if tuples && e.gens.len() > 1 && e.gens.iter().all(|g| matches!(g, Lit::Atom(_))) {
            vec![self.element(&Lit::Tuple(e.gens.clone()))?]
        } else {
            e.gens.iter().map(|g| self.element(g)).collect::<Result<Vec<_>, _>>()?
        };
        Ok(Ideal::generated(&self.ring, &gens)?)
    }
}

pub fn ring_from_text(text: &str, max_order: usize) -> Result<Built, CliError> {
    build(&crate::dsl::parse_ring(text)?, max_order)
}
