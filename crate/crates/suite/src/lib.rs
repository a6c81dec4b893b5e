//! Exhaustive verification of weakly 1-absorbing primary ideal results over
//! corpora of small finite commutative rings.

pub mod context;
pub mod corpus;
pub mod report;
pub mod ring_report;
pub mod run;
pub mod search;
pub mod verifiers;

pub use context::RingContext;
pub use corpus::{Corpus, CorpusBounds, CorpusEntry, Skipped};
pub use report::{Status, TheoremReport, Violation};
pub use ring_report::{ring_report, RingReport};
pub use run::{run_nq_question, run_separation, run_suite, SuiteError, SuiteOptions, SuiteReport, SCHEMA};
pub use search::{NqReport, SeparationReport};
