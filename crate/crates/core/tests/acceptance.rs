//! Acceptance criteria, one test and one summary line per criterion.
//!
//! All comparisons are exact. The only tolerances are wall-clock limits,
//! pinned below per check or per criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use coxeter::verify::{self, Check, CheckResult};

/// How a criterion's time limit applies.
enum Limit {
    /// Each check separately.
    PerCheck(fn(&str) -> Duration),
    /// All checks together, run on separate threads.
    Total(Duration),
    None,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn run_checks(checks: Vec<Check>, parallel: bool) -> Vec<(CheckResult, Duration)> {
    let timed = |c: &Check| {
        let t = Instant::now();
        let r = c.run();
        (r, t.elapsed())
    };
    if !parallel {
        return checks.iter().map(timed).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks.iter().map(|c| scope.spawn(move || timed(c))).collect();
        handles.into_iter().map(|h| h.join().expect("check thread")).collect()
    })
}

fn criterion(number: u32, title: &str, checks: Vec<Check>, limit: Limit) {
    assert!(!checks.is_empty(), "criterion {} has no checks", number);
    let start = Instant::now();
    let results = run_checks(checks, matches!(limit, Limit::Total(_) | Limit::None));
    let total = start.elapsed();
    let mut problems: Vec<String> = results.iter().filter(|(r, _)| !r.passed).map(|(r, _)| r.to_string()).collect();
    if let Limit::PerCheck(f) = &limit {
        for (r, t) in &results {
            if *t > f(&r.name) {
                problems.push(format!("{} took {:.1?}, limit {:?}", r.name, t, f(&r.name)));
            }
        }
    }
    if let Limit::Total(max) = &limit {
        if total > *max {
            problems.push(format!("took {:.1?}, limit {:?}", total, max));
        }
    }
    let passed = results.iter().filter(|(r, _)| r.passed).count();
    let status = if problems.is_empty() { "PASS" } else { "FAIL" };
    let line = format!("criterion {} {}: {} ({}/{} checks, {:.1?})\n", number, status, title, passed, results.len(), total);
    // written past the test harness's capture so the summary shows in every run
    std::io::stderr().write_all(line.as_bytes()).expect("stderr");
    assert!(problems.is_empty(), "criterion {} failed:\n{}", number, problems.join("\n"));
}

fn published(number: u32) -> Vec<Check> {
    verify::published_checks(true).into_iter().filter(|(k, _)| *k == number).map(|(_, c)| c).collect()
}

fn table_limit(name: &str) -> Duration {
    // rank 3 rows are affine A2, B2, G2; the optional affine A4 row gets the rank 4 limit
    if name.ends_with('2') {
        secs(10)
    } else {
        secs(300)
    }
}

#[test]
fn criterion_1_count_table() {
    criterion(1, "count table for the affine rows of rank 3, 4 and 5", published(1), Limit::PerCheck(table_limit));
}

#[test]
fn criterion_2_rank3_ultra_low() {
    criterion(2, "U = Gamma with counts 35, 26, 25", published(2), Limit::PerCheck(|_| secs(30)));
}

#[test]
fn criterion_3_tight_gate_formula() {
    criterion(3, "|Gamma0| = 2|E| - |S| and the graph families", published(3), Limit::Total(secs(60)));
}

#[test]
fn criterion_4_fixtures() {
    criterion(4, "tight gates and final roots of the three rank 3 types", published(4), Limit::Total(secs(60)));
}

#[test]
fn criterion_5_infinite_label() {
    criterion(5, "L = Gamma = U with an infinite bond", published(5), Limit::Total(secs(10)));
}

#[test]
fn criterion_6_shared_final_root() {
    criterion(6, "four tight gates sharing a final root", published(6), Limit::Total(secs(60)));
}

#[test]
fn criterion_7_oracles() {
    criterion(7, "tight-gate search against the automaton, Garside closure against the gates", published(7), Limit::None);
}

#[test]
fn criterion_8_property_suites() {
    let checks = verify::property_checks().into_iter().map(|(_, c)| c).collect();
    criterion(8, "property suites", checks, Limit::Total(secs(600)));
}
