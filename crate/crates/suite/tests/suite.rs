use std::sync::Arc;

use absorb_core::FiniteRing;
use absorb_suite::report::Status;
use absorb_suite::run::{select, NQ_QUESTION};
use absorb_suite::verifiers::THEOREMS;
use absorb_suite::{run_suite, Corpus, CorpusBounds, SuiteError, SuiteOptions};

fn small_bounds() -> CorpusBounds {
    CorpusBounds { zn_max: 24, pair_max: 4, idealize_max: 8, ..CorpusBounds::default() }
}

fn z(n: usize) -> Arc<FiniteRing> {
    Arc::new(FiniteRing::zn(n).unwrap())
}

#[test]
fn empty_corpus_gives_vacuous_reports() {
    let rep = run_suite(&Corpus::empty(), &SuiteOptions::default()).unwrap();
    assert_eq!(rep.rings, 0);
    assert_eq!(rep.reports.len(), THEOREMS.len());
    assert!(rep.reports.iter().all(|r| r.instances == 0 && r.status == Status::Vacuous));
    assert_eq!(rep.total_violations, 0);
    assert_eq!(rep.out_of_scope.len(), 3);
    assert!(rep.out_of_scope.iter().all(|o| !o.reason.is_empty()));
}

#[test]
fn single_ring_counts_are_reproducible() {
    let corpus = Corpus::from_rings([z(6)], &CorpusBounds::default());
    let a = run_suite(&corpus, &SuiteOptions::default()).unwrap();
    let b = run_suite(&corpus, &SuiteOptions { jobs: Some(1), ..Default::default() }).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.rings, 1);
    // Z6 (0) is weakly 1AP but not 1AP
    let tz = a.report("triple_zero").unwrap();
    assert!(tz.instances > 0 && tz.violations.is_empty());
}

#[test]
fn worker_count_does_not_change_the_report() {
    let corpus = Corpus::standard(&small_bounds());
    let one = run_suite(&corpus, &SuiteOptions { jobs: Some(1), ..Default::default() }).unwrap();
    let four = run_suite(&corpus, &SuiteOptions { jobs: Some(4), ..Default::default() }).unwrap();
    assert_eq!(one, four);
    assert!(one.elapsed_ms.is_none() && one.reports.iter().all(|r| r.elapsed_ms.is_none()));
}

#[test]
fn every_violation_replays_under_the_oracle() {
    let rep = run_suite(&Corpus::standard(&small_bounds()), &SuiteOptions::default()).unwrap();
    for r in &rep.reports {
        let part_names: Vec<&str> = r.parts.iter().map(|p| p.part.as_str()).collect();
        for v in &r.violations {
            assert!(v.oracle_confirmed, "{v:?}");
            assert!(part_names.contains(&v.part.as_str()));
        }
        assert_eq!(r.status == Status::Violated, !r.violations.is_empty());
    }
    assert_eq!(rep.total_violations, rep.reports.iter().map(|r| r.violations.len() as u64).sum::<u64>());
}

#[test]
fn known_counterexamples_are_reported() {
    let corpus = Corpus::from_rings([z(12)], &CorpusBounds::default());
    let opts = SuiteOptions { theorems: Some(vec!["ch".into(), "residual".into()]), ..Default::default() };
    let rep = run_suite(&corpus, &opts).unwrap();
    let ch = rep.report("ch").unwrap();
    assert!(ch.violations.iter().all(|v| v.ideals[0] == "(6) = {0,6}"));
    assert_eq!(ch.violations.len(), 2);
    // (0:2) = (6) is not weakly primary although (0) is weakly 1AP
    let res = rep.report("residual").unwrap();
    assert!(res.violations.iter().any(|v| v.detail == "((0):2) = (6) is not weakly primary"));
}

#[test]
fn filters() {
    let (t, miner) = select(Some(&["fi".into(), "tr".into()])).unwrap();
    assert_eq!(t.iter().map(|t| t.id).collect::<Vec<_>>(), ["tr", "fi"]);
    assert!(!miner);
    let (t, miner) = select(Some(&[NQ_QUESTION.into()])).unwrap();
    assert!(t.is_empty() && miner);
    assert_eq!(select(Some(&["nope".into()])).unwrap_err(), SuiteError::UnknownTheorem("nope".into()));
}

#[test]
fn nq_miner_states_its_conclusion() {
    let rep = run_suite(&Corpus::standard(&small_bounds()), &SuiteOptions::default()).unwrap();
    let nq = rep.nq_question.unwrap();
    assert!(nq.rings > 0 && !nq.conclusion.is_empty());
    assert!(nq.candidates.iter().all(|c| c.oracle_confirmed));
}
