//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria 1, 4 and 8 contain statements that are false as printed (the
//! 3003 congruence, the `m | 10n+7` floor extension, and two of the five
//! polynomiality claims at n = 10 and 19). They are checked exactly as
//! stated and reported red; the process fails only when some other
//! criterion goes red, or when one of these unexpectedly turns green.

use std::process::Command;
use std::time::{Duration, Instant};

use binodiv::divisibility::{s_n, t_n};
use binodiv::harness::{default_workers, run_claim, Bounds, RunReport};
use binodiv::qseries::cyclotomic::cyclotomic;
use binodiv::qseries::families::family_direct_expansion;
use binodiv::qseries::{direct_expansion, expand, exponent_vector_of, qbinomial_instance, DensePoly, QFamily};
use binodiv::valuation::{legendre_ord, primes_up_to};
use num_bigint::BigUint;

const KNOWN_RED: [(u32, &str); 3] = [
    (1, "3003 t_n = 0 (mod 2n+1) fails when 5 | 2n+1, e.g. n = 2"),
    (4, "the m in {7,13,17}, m | 10n+7 extension fails, e.g. (n, m) = (1, 17)"),
    (8, "two of the five sextuple q-expressions are not polynomials at n = 10, 19 (Φ_9 exponent -1)"),
];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn run(id: &str, bounds: Bounds) -> RunReport {
    run_claim(id, &bounds, default_workers()).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn summarize(reports: &[RunReport]) -> (bool, String) {
    let ok = reports.iter().all(|r| r.failed == 0);
    let parts: Vec<String> = reports
        .iter()
        .map(|r| {
            let first = r
                .counterexamples
                .first()
                .map(|c| {
                    let mut w = Vec::new();
                    for (k, v) in [("a", c.a), ("b", c.b), ("m", c.m), ("n", c.n), ("d", c.d)] {
                        if let Some(v) = v {
                            w.push(format!("{k}={v}"));
                        }
                    }
                    format!(", first at {}", w.join(" "))
                })
                .unwrap_or_default();
            format!("{} {}/{} failed{first}", r.claim, r.failed, r.checked)
        })
        .collect();
    (ok, parts.join("; "))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let reports = [
        run("thm-1.1", Bounds::n(2000)),
        run("thm-1.2", Bounds::n(1000)),
        run("thm-1.3", Bounds::n(1000)),
    ];
    let elapsed = start.elapsed();
    let (ok, detail) = summarize(&reports);
    outcome(ok && elapsed < Duration::from_secs(120), format!("{detail} ({:.1}s)", elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let s1 = s_n(1).unwrap().value;
    let s2 = s_n(2).unwrap().value;
    let t1 = t_n(1).unwrap().value;
    let three_s1 = &s1 * 3u32;
    let twenty_one_t1 = &t1 * 21u32;
    let ok = s1 == BigUint::from(5u32)
        && s2 == BigUint::from(231u32)
        && t1 == BigUint::from(91u32)
        && three_s1 == BigUint::from(15u32)
        && (&three_s1 % 5u32) == BigUint::from(0u32)
        && twenty_one_t1 == BigUint::from(1911u32)
        && (&twenty_one_t1 % 13u32) == BigUint::from(0u32);
    outcome(ok, format!("S_1 = {s1}, S_2 = {s2}, t_1 = {t1}, 3 S_1 = {three_s1}, 21 t_1 = {twenty_one_t1}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let reports = [run("thm-1.4", Bounds::abmn(12)), run("cor-1.5", Bounds::n(5000))];
    let (ok, detail) = summarize(&reports);
    let elapsed = start.elapsed();
    outcome(ok && elapsed < Duration::from_secs(60), format!("{detail} ({:.1}s)", elapsed.as_secs_f64()))
}

fn criterion_4() -> Outcome {
    let mut reports = vec![run("lem-2.1", Bounds::NONE)];
    for id in ["lem-2.2", "lem-2.3", "lem-5.1", "lem-5.2", "lem-5.1-ext", "lem-5.2-ext"] {
        reports.push(run(id, Bounds::n(500)));
    }
    let (ok, detail) = summarize(&reports);
    outcome(ok, detail)
}

fn criterion_5() -> Outcome {
    let mut legendre_ok = true;
    for &p in primes_up_to(100).iter() {
        let mut acc = 0u64;
        for n in 1..=2000u64 {
            let mut k = n;
            while k % p == 0 {
                k /= p;
                acc += 1;
            }
            legendre_ok &= legendre_ord(p, n).unwrap() == acc;
        }
    }
    let reports = [run("ord2-digit-sum", Bounds::n(100_000)), run("parity-power-of-2", Bounds::n(10_000))];
    let (ok, detail) = summarize(&reports);
    outcome(legendre_ok && ok, format!("Legendre vs trial division: {legendre_ok}; {detail}"))
}

fn criterion_6() -> Outcome {
    let mut mismatches = Vec::new();
    for f in QFamily::ALL {
        for n in f.n_min()..=6 {
            let fast = expand(&exponent_vector_of(&f.instance(n).unwrap())).ok();
            let slow = family_direct_expansion(f, n).ok();
            if fast != slow {
                mismatches.push(format!("{} n={n}", f.id()));
            }
        }
    }
    for n in 0..=16 {
        for k in 0..=n {
            let inst = qbinomial_instance(n, k);
            if expand(&exponent_vector_of(&inst)).ok() != direct_expansion(&inst).ok() {
                mismatches.push(format!("[{n},{k}]"));
            }
        }
    }
    let mut phi_bad = Vec::new();
    for k in 1..=200u64 {
        let product = (1..=k)
            .filter(|d| k % d == 0)
            .fold(DensePoly::one(), |acc, d| &acc * &cyclotomic(d));
        let mut target = vec![0i64; k as usize + 1];
        target[0] = -1;
        target[k as usize] = 1;
        if product != DensePoly::from_i64s(&target) {
            phi_bad.push(k);
        }
    }
    outcome(
        mismatches.is_empty() && phi_bad.is_empty(),
        format!("expansion mismatches {mismatches:?}, cyclotomic product mismatches {phi_bad:?}"),
    )
}

fn criterion_7() -> Outcome {
    let reports = [run("thm-6.1", Bounds::abmn(5)), run("cor-6.2", Bounds::abmn(5))];
    let (ok, detail) = summarize(&reports);
    outcome(ok, detail)
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let reports = [
        run("thm-7.2", Bounds::n(20)),
        run("thm-7.4", Bounds::n(12)),
        run("wz-positivity", Bounds::n(12)),
        run("conj-7.4-unimodal", Bounds::n(12)),
        run("conj-7.3", Bounds::n(12)),
        run("conj-7.5", Bounds::n(12)),
    ];
    let elapsed = start.elapsed();
    let (ok, detail) = summarize(&reports);
    let skipped: u64 = reports.iter().map(|r| r.skipped).sum();
    outcome(
        ok && elapsed < Duration::from_secs(180),
        format!("{detail}; {skipped} conjecture instances skipped as non-polynomial ({:.1}s)", elapsed.as_secs_f64()),
    )
}

fn binodiv(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_binodiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn criterion_9() -> Outcome {
    let out = binodiv(&["verify", "conj-7.1", "--a-max", "6", "--b-max", "5", "--n-max", "40", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap_or_default();
    let failed = report["failed"].as_u64();
    let checked = report["checked"].as_u64();
    outcome(
        out.status.code() == Some(0) && failed == Some(0),
        format!("exit {:?}, checked {checked:?}, failed {failed:?}", out.status.code()),
    )
}

fn criterion_10() -> Outcome {
    let mut differing = Vec::new();
    for (claim, n) in [("thm-1.1", "2000"), ("thm-1.2", "1000"), ("thm-1.3", "1000")] {
        let outputs: Vec<Vec<u8>> = ["1", "4", "8"]
            .iter()
            .map(|w| binodiv(&["verify", claim, "--n-max", n, "--workers", w, "--format", "json"]).stdout)
            .collect();
        if outputs.iter().any(|o| o.is_empty() || *o != outputs[0]) {
            differing.push(claim);
        }
    }
    outcome(differing.is_empty(), format!("reports differing across 1/4/8 workers: {differing:?}"))
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "theorem sweeps", criterion_1),
        (2, "spot values", criterion_2),
        (3, "two-form identity and specializations", criterion_3),
        (4, "floor machinery", criterion_4),
        (5, "valuation layer", criterion_5),
        (6, "q-layer exactness", criterion_6),
        (7, "q-positivity with integer values at q = 1", criterion_7),
        (8, "q-families", criterion_8),
        (9, "binomial-quotient conjecture sweep", criterion_9),
        (10, "determinism across worker counts", criterion_10),
    ];
    let mut unexpected = Vec::new();
    let mut green = 0;
    for (id, name, check) in criteria {
        let o = check();
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id);
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {id:>2} ({name}): {}", o.detail);
        if let (false, Some((_, why))) = (o.ok, known) {
            println!("     blocked: {why}");
        }
        if o.ok {
            green += 1;
        }
        if o.ok == known.is_some() {
            unexpected.push(id);
        }
    }
    println!("acceptance: {green}/10 criteria pass");
    if !unexpected.is_empty() {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
