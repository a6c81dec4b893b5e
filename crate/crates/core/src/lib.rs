//! Finite commutative rings with identity, their ideals, and decision
//! procedures for prime-like ideal properties (prime, primary, weakly
//! 1-absorbing primary and relatives) with violation witnesses.

pub mod catalog;
pub mod classify;
pub mod construct;
pub mod error;
pub mod hom;
pub mod ideal;
pub mod oracle;
pub mod ring;
pub mod ring_class;
pub mod table_format;

pub use classify::{classify, Predicate, PropertyRecord, TripleZero, Verdict};
pub use construct::{localization, quotient, Localization};
pub use error::{Result, RingError};
pub use hom::RingHom;
pub use ideal::{all_ideals, Ideal};
pub use ring::{FiniteRing, DEFAULT_MAX_ORDER};
