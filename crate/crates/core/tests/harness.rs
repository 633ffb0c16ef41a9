use std::time::Duration;

use binodiv::harness::report::{to_csv, to_json, to_text};
use binodiv::harness::{claims, list_claims, lookup, run_claim, Bounds, ClaimKind, RunReport, Verdict};

fn small(id: &str) -> Bounds {
    let record = lookup(id).unwrap();
    let mut b = record.defaults;
    let shrink = |v: Option<u64>, to: u64| v.map(|x| x.min(to));
    b.a = shrink(b.a, 3);
    b.b = shrink(b.b, 3);
    b.m = shrink(b.m, 3);
    b.n = shrink(b.n, if record.kind == ClaimKind::Divisibility { 40 } else { 8 }).map(|n| n.max(record.n_min));
    b
}

#[test]
fn registry_lists_every_named_claim() {
    let ids: Vec<_> = list_claims(None).iter().map(|c| c.id).collect();
    for id in [
        "thm-1.1", "thm-1.2", "thm-1.3", "thm-1.4", "cor-1.5", "lem-2.1", "lem-2.2", "lem-2.3",
        "lem-5.1", "lem-5.2", "thm-6.1", "cor-6.2", "thm-7.2", "thm-7.4", "conj-7.1", "conj-7.3",
        "conj-7.4-unimodal", "conj-7.5", "wz-positivity", "parity-power-of-2",
    ] {
        assert!(ids.contains(&id), "{id} missing");
    }
}

#[test]
fn every_claim_runs_and_tallies_add_up() {
    for record in claims() {
        let r = run_claim(record.id, &small(record.id), 2).unwrap();
        assert_eq!(r.passed + r.failed + r.skipped, r.checked, "{}", record.id);
        assert_eq!(r.counterexamples.len() as u64, r.failed, "{}", record.id);
        assert_eq!(r.verdict == Verdict::Pass, r.failed == 0, "{}", record.id);
        assert_eq!(r.conjecture, record.id.starts_with("conj-"), "{}", record.id);
    }
}

#[test]
fn json_round_trip() {
    let r = run_claim("thm-1.3", &Bounds::n(20), 2).unwrap();
    let text = to_json(&r).unwrap();
    let back: RunReport = serde_json::from_str(&text).unwrap();
    let mut expected = r.clone();
    expected.wall_time = Duration::ZERO;
    assert_eq!(back, expected);
    assert!(!text.contains("wall"));
}

#[test]
fn json_keys_are_sorted() {
    let r = run_claim("thm-1.2", &Bounds::n(10), 1).unwrap();
    let text = to_json(&r).unwrap();
    let keys: Vec<_> = text
        .lines()
        .filter(|l| l.starts_with("  \"") && l.contains("\":"))
        .map(|l| l.trim().split('"').nth(1).unwrap().to_string())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(text.contains("\"failed\": 0"));
    assert!(text.contains("\"counterexamples\": []"));
}

#[test]
fn csv_rows_sorted_by_n() {
    let r = run_claim("lem-5.2-ext", &Bounds::n(120), 3).unwrap();
    let csv = to_csv(&r).unwrap();
    assert!(csv.starts_with("claim,variant,a,b,m,n,prime,d,index,detail\n"));
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let ns: Vec<u64> = reader
        .records()
        .map(|rec| rec.unwrap()[5].parse().unwrap())
        .collect();
    assert!(!ns.is_empty());
    assert!(ns.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn text_carries_the_anchor() {
    let r = run_claim("thm-1.1", &Bounds::n(10), 1).unwrap();
    let text = to_text(&r);
    assert!(text.contains(lookup("thm-1.1").unwrap().anchor));
    assert!(text.contains("all checks passed"));
}

#[test]
fn reports_independent_of_worker_count() {
    for (id, bounds) in [
        ("thm-1.3", Bounds::n(200)),
        ("thm-7.2", Bounds::n(12)),
        ("conj-7.1", Bounds::abn(5, 4, 15)),
        ("lem-5.2-ext", Bounds::n(300)),
    ] {
        let base = to_json(&run_claim(id, &bounds, 1).unwrap()).unwrap();
        for w in [4, 8] {
            assert_eq!(to_json(&run_claim(id, &bounds, w).unwrap()).unwrap(), base, "{id} with {w} workers");
        }
    }
}
