//! Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use affchar_core::verify::{run, Check};
use affchar_core::Execution;

struct Criterion {
    id: u32,
    title: &'static str,
    suite: &'static str,
    budget: Duration,
}

const CRITERIA: [Criterion; 7] = [
    Criterion { id: 1, title: "su(4) Kostka matrix and inverse fixture", suite: "kostka-fixture", budget: Duration::from_secs(10) },
    Criterion { id: 2, title: "su(2) level-2 vacuum weight diagram", suite: "su2k2-figure", budget: Duration::from_secs(30) },
    Criterion { id: 3, title: "su(4) level-4 decomposition tables to q^4", suite: "su4-level4-tables", budget: Duration::from_secs(300) },
    Criterion { id: 4, title: "l1,0,l3 relation at level 4 to q^4", suite: "l1-0-l3", budget: Duration::from_secs(300) },
    Criterion { id: 5, title: "Littlewood-Richardson specialisation", suite: "lr-specialization", budget: Duration::from_secs(300) },
    Criterion { id: 6, title: "property suites", suite: "properties", budget: Duration::from_secs(600) },
    Criterion { id: 7, title: "affine Weyl translation fixture", suite: "weyl-translation", budget: Duration::from_secs(10) },
];

fn report(c: &Criterion, checks: &[Check], elapsed: Duration) -> bool {
    let passed = checks.iter().filter(|k| k.passed).count();
    let in_budget = elapsed <= c.budget;
    let ok = passed == checks.len() && !checks.is_empty() && in_budget;
    println!(
        "{} criterion {}: {} [{}/{} checks, {:.2?} of {:?}]",
        if ok { "PASS" } else { "FAIL" },
        c.id,
        c.title,
        passed,
        checks.len(),
        elapsed,
        c.budget
    );
    for k in checks.iter().filter(|k| !k.passed) {
        println!("    failed: {} -- {}", k.name, k.detail);
    }
    if !in_budget {
        println!("    over time budget");
    }
    ok
}

fn main() -> ExitCode {
    let mut failures = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let checks = run(c.suite, Execution::default()).expect("known suite");
        if !report(c, &checks, start.elapsed()) {
            failures.push(c.id);
        }
    }
    if failures.is_empty() {
        println!("acceptance: all {} criteria passed", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failures:?}");
        ExitCode::FAILURE
    }
}
