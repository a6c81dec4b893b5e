use std::fmt;

use thiserror::Error;

/// A ring axiom checked by full table scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    AddClosed,
    AddCommutative,
    AddAssociative,
    AddIdentity,
    AddInverse,
    MulClosed,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    Distributive,
    NonzeroIdentity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AddClosed => "addition table entries in range",
            Axiom::AddCommutative => "addition is commutative",
            Axiom::AddAssociative => "addition is associative",
            Axiom::AddIdentity => "addition has an identity",
            Axiom::AddInverse => "every element has an additive inverse",
            Axiom::MulClosed => "multiplication table entries in range",
            Axiom::MulCommutative => "multiplication is commutative",
            Axiom::MulAssociative => "multiplication is associative",
            Axiom::MulIdentity => "multiplication has an identity",
            Axiom::Distributive => "multiplication distributes over addition",
            Axiom::NonzeroIdentity => "1 != 0",
        };
        f.write_str(s)
    }
}

/// One failed axiom together with the element indices that break it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("invalid ring order {0}: need n >= 2")]
    InvalidOrder(usize),
    #[error("a product needs at least 2 factors, got {0}")]
    Arity(usize),
    #[error("invalid module: {d} does not divide {n}")]
    InvalidModule { n: usize, d: usize },
    #[error("ideal is not proper")]
    ImproperIdeal,
    #[error("multiplicative set contains 0 after closure; the localization would be the zero ring")]
    DegenerateLocalization,
    #[error("ring order {order} exceeds the configured maximum {max}")]
    TooLarge { order: usize, max: usize },
    #[error("ideal enumeration exceeded the configured maximum of {max} ideals")]
    TooManyIdeals { max: usize },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("element index {index} is out of range for a ring of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("ring axioms violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Axioms(Vec<AxiomViolation>),
    #[error("malformed homomorphism: {0}")]
    MalformedHom(String),
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;
