use std::io::Write as _;
use std::process::Command;

use absorb_cli::commands::{ClassifyReport, IdealsReport, SearchReport};
use absorb_cli::{parse_ideal, parse_ring, IdealExpr, Lit, RingExpr};
use absorb_suite::ring_report::RingReport;
use absorb_suite::SuiteReport;
use proptest::prelude::*;

fn absorb(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_absorb")).args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn corpus_file(lines: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(lines.as_bytes()).unwrap();
    f
}

fn lit() -> impl Strategy<Value = Lit> {
    let atom = prop_oneof!["[0-9]{1,3}", "[a-z][a-z0-9+]{0,3}"].prop_map(Lit::Atom);
    atom.prop_recursive(2, 8, 3, |inner| prop::collection::vec(inner, 2..4).prop_map(Lit::Tuple))
}

fn ring_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (2usize..100).prop_map(RingExpr::Zn),
        (2usize..20, 1usize..20).prop_map(|(n, d)| RingExpr::Idealize(n, d)),
        "[a-z]{1,6}(/[a-z]{1,6})?\\.txt".prop_map(RingExpr::Table),
        "@[a-z0-9]{1,6}".prop_map(RingExpr::Table),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(RingExpr::Prod),
            (inner.clone(), prop::collection::vec(lit(), 1..3))
                .prop_map(|(r, gens)| RingExpr::Quot(Box::new(r), IdealExpr { gens })),
            (inner, prop::collection::vec(lit(), 1..3)).prop_map(|(r, s)| RingExpr::Loc(Box::new(r), s)),
        ]
    })
}

proptest! {
    #[test]
    fn ring_syntax_round_trips(e in ring_expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_ring(&text).unwrap(), e.clone());
        // whitespace between tokens is ignored
        let spaced = text.replace(',', " , ").replace('(', "( ");
        if !matches!(e, RingExpr::Table(_)) {
            prop_assert_eq!(parse_ring(&spaced).unwrap(), e);
        }
    }

    #[test]
    fn ideal_syntax_round_trips(gens in prop::collection::vec(lit(), 1..4)) {
        let e = IdealExpr { gens };
        prop_assert_eq!(parse_ideal(&e.to_string()).unwrap(), e);
    }
}

#[test]
fn classify_json_round_trips() {
    let (out, _, code) = absorb(&["classify", "Z6", "(0)", "--json"]);
    assert_eq!(code, 0);
    let rep: ClassifyReport = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&rep).unwrap() + "\n", out);
    assert_eq!(rep.schema, "absorb-classify/1");
    assert!(out.contains("\"weakly_one_absorbing_primary\": true"));
}

#[test]
fn ideals_and_report_json_round_trip() {
    let (out, _, code) = absorb(&["ideals", "Z12", "--json"]);
    assert_eq!(code, 0);
    let rep: IdealsReport = serde_json::from_str(&out).unwrap();
    assert_eq!(rep.ideals.len(), 6);
    assert_eq!(serde_json::to_string_pretty(&rep).unwrap() + "\n", out);

    let (out, _, _) = absorb(&["report", "prod(Z4,Z9)", "--json"]);
    let rep: RingReport = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&rep).unwrap() + "\n", out);
}

#[test]
fn verify_json_is_deterministic_and_round_trips() {
    let f = corpus_file("# small\nZ6\nZ12\nprod(Z2,Z4)\nidealize(8,4)\nquot(prod(Z4,Z2),((2,0)))\n@f2xy\nZ1000\n");
    let path = f.path().to_str().unwrap();
    let (a, _, code_a) = absorb(&["verify", "--corpus", path, "--json", "--jobs", "1"]);
    let (b, _, code_b) = absorb(&["verify", "--corpus", path, "--json", "--jobs", "3"]);
    assert_eq!(a, b);
    assert_eq!(code_a, code_b);
    let rep: SuiteReport = serde_json::from_str(&a).unwrap();
    assert_eq!(serde_json::to_string_pretty(&rep).unwrap() + "\n", a);
    assert_eq!(rep.schema, "absorb-suite/1");
    assert_eq!(rep.rings, 6);
    assert_eq!(rep.skipped.len(), 1);
    // Z12 carries known counterexamples, so the run reports violations
    assert_eq!(code_a, if rep.total_violations > 0 { 1 } else { 0 });
}

#[test]
fn search_json_round_trips() {
    let f = corpus_file("Z6\nZ8\nprod(Z2,Z3)\n");
    let path = f.path().to_str().unwrap();
    let (out, _, code) = absorb(&["search", "separation", "--a=weakly_1AP", "--b=1AP", "--corpus", path, "--json"]);
    assert_eq!(code, 0);
    let rep: SearchReport = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&rep).unwrap() + "\n", out);
    let SearchReport::Separation { report, .. } = rep else { panic!("separation mode") };
    assert!(report.hits.iter().any(|h| h.ring == "Z6" && h.ideal == "(0)"));

    let (out, _, _) = absorb(&["search", "nq-question", "--corpus", path, "--json"]);
    let rep: SearchReport = serde_json::from_str(&out).unwrap();
    assert!(matches!(rep, SearchReport::NqQuestion { .. }));
}

#[test]
fn exit_codes() {
    assert_eq!(absorb(&["classify", "Z12", "(4)"]).2, 0);
    assert_eq!(absorb(&["classify", "Zx", "(4)"]).2, 2);
    assert_eq!(absorb(&["classify", "Z12", "(13)"]).2, 2);
    assert_eq!(absorb(&["classify", "Z12", "(5)"]).2, 3);
    assert_eq!(absorb(&["classify", "idealize(12,5)", "(0)"]).2, 3);
    assert_eq!(absorb(&["ideals", "Z600"]).2, 4);
    assert_eq!(absorb(&["ideals", "Z600", "--max-order", "600"]).2, 0);
    assert_eq!(absorb(&["verify", "--theorems=nope"]).2, 2);
    let f = corpus_file("Z6\nprod(Z2)\n");
    let (_, err, code) = absorb(&["verify", "--corpus", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains(":2:"), "{err}");
    let f = corpus_file("Z6\nZ8\n");
    assert_eq!(absorb(&["verify", "--theorems=fi,tr", "--corpus", f.path().to_str().unwrap()]).2, 0);
}

#[test]
fn text_output() {
    let (out, _, _) = absorb(&["classify", "Z12", "(4)"]);
    assert!(out.contains("✓ primary"), "{out}");
    let (out, _, _) = absorb(&["ideals", "Z12"]);
    assert!(out.starts_with("Z12: order 12, 6 ideals"));
    let (out, _, _) = absorb(&["report", "Z6"]);
    assert!(out.contains("= (0) IS weakly 1AP"), "{out}");
}

#[test]
fn table_rings_load_from_files() {
    // F4 = F2[t]/(t^2+t+1): 0, 1, t, t+1
    let f = corpus_file(
        "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n0 0 0 0\n0 1 2 3\n0 2 3 1\n0 3 1 2\n",
    );
    let ring = format!("table({})", f.path().display());
    let (out, err, code) = absorb(&["report", &ring, "--json"]);
    assert_eq!(code, 0, "{err}");
    let rep: RingReport = serde_json::from_str(&out).unwrap();
    assert!(rep.flags["field"]);
    assert_eq!(rep.ideals.len(), 2);
    let bad = corpus_file("2\n0 1 1 0\n0 0 0 0\n");
    assert_eq!(absorb(&["ideals", &format!("table({})", bad.path().display())]).2, 3);
}
