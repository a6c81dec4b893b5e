use std::sync::Arc;

use absorb_core::classify::{self, Predicate, Scanner};
use absorb_core::ideal::{all_ideals, DEFAULT_MAX_IDEALS};
use absorb_core::{oracle, quotient, table_format, FiniteRing};
use proptest::prelude::*;

fn zn(n: usize) -> Arc<FiniteRing> {
    Arc::new(FiniteRing::zn(n).unwrap())
}

/// Small rings of every construction the corpus uses.
fn small_ring() -> impl Strategy<Value = Arc<FiniteRing>> {
    prop_oneof![
        (2usize..=30).prop_map(zn),
        (2usize..=6, 2usize..=6).prop_map(|(a, b)| Arc::new(FiniteRing::product(vec![zn(a), zn(b)]).unwrap())),
        (2usize..=12, 1usize..=12).prop_filter_map("d | n", |(n, d)| {
            (n % d == 0).then(|| Arc::new(FiniteRing::idealization(n, d).unwrap()))
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructions_satisfy_ring_axioms(r in small_ring()) {
        prop_assert!(r.validate().is_empty());
    }

    #[test]
    fn ideal_lattice_is_closed(r in small_ring()) {
        let ideals = all_ideals(&r, DEFAULT_MAX_IDEALS).unwrap();
        let known = |i: &absorb_core::Ideal| ideals.iter().any(|j| j == i);
        prop_assert!(ideals[0].is_zero());
        prop_assert!(ideals.last().unwrap().is_whole());
        for a in &ideals {
            prop_assert!(known(&a.radical()));
            for b in &ideals {
                prop_assert!(known(&a.sum(b).unwrap()));
                prop_assert!(known(&a.intersection(b).unwrap()));
                prop_assert!(known(&a.product(b).unwrap()));
                prop_assert!(known(&a.residual(b).unwrap()));
            }
        }
    }

    #[test]
    fn records_respect_the_implication_lattice(r in small_ring()) {
        for i in all_ideals(&r, DEFAULT_MAX_IDEALS).unwrap().iter().filter(|i| i.is_proper()) {
            let rec = classify::classify(i).unwrap();
            prop_assert!(rec.lattice_violations().is_empty(), "{} in {}", i, r.label());
        }
    }

    #[test]
    fn scans_agree_with_the_oracle(r in small_ring()) {
        for i in all_ideals(&r, DEFAULT_MAX_IDEALS).unwrap().iter().filter(|i| i.is_proper()) {
            let scan = Scanner::new(i).unwrap();
            for p in Predicate::ALL {
                prop_assert_eq!(scan.check(p).holds, oracle::holds(p, i), "{} {} in {}", p, i, r.label());
            }
            prop_assert_eq!(scan.triple_zeros(), oracle::triple_zeros(i));
        }
    }

    #[test]
    fn witnesses_refute(r in small_ring()) {
        for i in all_ideals(&r, DEFAULT_MAX_IDEALS).unwrap().iter().filter(|i| i.is_proper()) {
            for p in [Predicate::WeaklyOneAbsorbingPrimary, Predicate::OneAbsorbingPrimary] {
                let v = classify::check(p, i).unwrap();
                if let Some(w) = v.witness {
                    let (a, b, c) = (w[0], w[1], w[2]);
                    let abc = r.mul3(a, b, c);
                    prop_assert!(!r.is_unit(a) && !r.is_unit(b) && !r.is_unit(c));
                    prop_assert!(i.contains(abc) && !i.contains(r.mul(a, b)));
                    prop_assert!(!i.radical().contains(c));
                    if p == Predicate::WeaklyOneAbsorbingPrimary {
                        prop_assert!(abc != r.zero());
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_maps_are_surjective_homs(r in small_ring()) {
        for j in all_ideals(&r, DEFAULT_MAX_IDEALS).unwrap().iter().filter(|j| j.is_proper()) {
            let (q, pi) = quotient(&r, j).unwrap();
            prop_assert!(pi.check().is_ok());
            prop_assert!(pi.is_surjective());
            prop_assert_eq!(&pi.kernel(), j);
            prop_assert_eq!(q.order() * j.len(), r.order());
        }
    }

    #[test]
    fn table_format_round_trips(r in small_ring()) {
        let back = table_format::parse(&table_format::write(&r)).unwrap();
        prop_assert_eq!(back.order(), r.order());
        for a in r.elements() {
            for b in r.elements() {
                prop_assert_eq!(back.add(a, b), r.add(a, b));
                prop_assert_eq!(back.mul(a, b), r.mul(a, b));
            }
        }
    }
}

#[test]
fn u_ring_cover_on_the_catalog_ring() {
    let r = Arc::new(absorb_core::catalog::f2xy_mod_square());
    let ideals = all_ideals(&r, DEFAULT_MAX_IDEALS).unwrap();
    assert!(!absorb_core::ring_class::is_u_ring(&ideals));
    assert!(!oracle::is_u_ring(&ideals));
    for n in 2..=16 {
        let ideals = all_ideals(&zn(n), DEFAULT_MAX_IDEALS).unwrap();
        assert!(absorb_core::ring_class::is_u_ring(&ideals));
        assert!(oracle::is_u_ring(&ideals));
    }
}
