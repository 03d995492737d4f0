//! Acceptance run: nine criteria, one PASS/FAIL line each. All comparisons
//! are exact rational equality; the only numeric thresholds are the skip
//! ratio of criterion 4 and the wall-clock budgets.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jack_sov::algebra::{default_g_panel, rat};
use jack_sov::verify::{
    a1_suite, a2_factorization_suite, cmn_suite, conjecture_suite, oracle_suite, orthogonality_suite,
    recurrence_suite, representation_suite, separated_suite, specialization_suite, watson_suite,
    Outcome, SuiteRun,
};
use jack_sov::CouplingG;

const TOLERANCE: &str = "exact";

/// Largest allowed fraction of skipped cases in criterion 4.
fn max_skip_ratio() -> jack_sov::Rational {
    rat(1, 10)
}

struct Verdict {
    passed: bool,
    detail: String,
}

fn summary(run: &SuiteRun) -> String {
    format!(
        "cases {}, failed {}, continued {}, skipped {}",
        run.total(),
        run.failed(),
        run.continued(),
        run.skipped()
    )
}

fn log_cases(run: &SuiteRun, pick: impl Fn(&Outcome) -> bool) {
    for r in run.results.iter().filter(|r| pick(&r.outcome)) {
        match &r.outcome {
            Outcome::Skip(reason) => println!("    skip {}: {reason}", r.id),
            Outcome::Fail { expected, actual } => {
                println!("    fail {}: expected {expected}, got {actual}", r.id)
            }
            _ => {}
        }
    }
}

fn criterion(number: usize, title: &str, budget_s: u64, body: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let verdict = body();
    let elapsed = start.elapsed();
    let in_budget = elapsed <= Duration::from_secs(budget_s);
    let passed = verdict.passed && in_budget;
    println!(
        "criterion {number} [{title}]: {}  ({}; tolerance {TOLERANCE}; {:.1} s of {budget_s} s{})",
        if passed { "PASS" } else { "FAIL" },
        verdict.detail,
        elapsed.as_secs_f64(),
        if in_budget { "" } else { ", over budget" },
    );
    passed
}

fn all_pass(runs: &[&SuiteRun]) -> Verdict {
    for run in runs {
        log_cases(run, |o| matches!(o, Outcome::Fail { .. } | Outcome::Skip(_)));
    }
    Verdict {
        passed: runs.iter().all(|r| r.passed()),
        detail: runs
            .iter()
            .map(|r| format!("{}: {}", r.name, summary(r)))
            .collect::<Vec<_>>()
            .join("; "),
    }
}

fn main() -> ExitCode {
    let panel = default_g_panel();
    let integer_couplings = [CouplingG::from_ratio(1, 1).unwrap(), CouplingG::from_ratio(2, 1).unwrap()];
    let mut ok = true;

    ok &= criterion(1, "separated polynomial forms", 60, || {
        all_pass(&[&separated_suite(&panel, &[(2, 8), (3, 8), (4, 5)])])
    });

    ok &= criterion(2, "Watson product formula", 10, || all_pass(&[&watson_suite(&panel, 6)]));

    ok &= criterion(3, "two-variable forms vs oracle", 30, || all_pass(&[&a1_suite(&panel, 8, 3)]));

    ok &= criterion(4, "c_mn closed forms vs expansion", 120, || {
        let run = cmn_suite(&panel, 8);
        log_cases(&run, |o| matches!(o, Outcome::Fail { .. } | Outcome::Skip(_)));
        let ratio = run.skip_ratio();
        let within = ratio <= max_skip_ratio();
        Verdict {
            passed: run.passed() && within,
            detail: format!(
                "{}; skip ratio {} (limit {})",
                summary(&run),
                ratio,
                max_skip_ratio()
            ),
        }
    });

    ok &= criterion(5, "recurrences and anchor", 120, || {
        all_pass(&[&recurrence_suite(&panel, 8)])
    });

    ok &= criterion(6, "three-variable factorization and representations", 300, || {
        all_pass(&[
            &a2_factorization_suite(&panel, 6),
            &representation_suite(&panel, 6, 2),
        ])
    });

    ok &= criterion(7, "oracle physics checks", 120, || {
        all_pass(&[
            &oracle_suite(&panel, 8, 3),
            &orthogonality_suite(&integer_couplings, &[2, 3], 4),
        ])
    });

    ok &= criterion(8, "one-row and two-row specializations", 60, || {
        all_pass(&[&specialization_suite(&panel, 6, 5)])
    });

    ok &= criterion(9, "rectangular formula audit", 120, || {
        let run = conjecture_suite(&panel, &[4, 5], 3);
        let errors = run
            .results
            .iter()
            .filter(|r| matches!(&r.outcome, Outcome::Fail { actual, .. } if actual.starts_with("error:")))
            .count();
        let held = run.results.iter().filter(|r| r.outcome == Outcome::Pass).count();
        for r in &run.results {
            let status = if r.outcome == Outcome::Pass { "held" } else { "did not hold" };
            println!("    {}: {status}", r.id);
        }
        Verdict {
            passed: errors == 0,
            detail: format!("formula held in {held} of {} cases, {errors} evaluation errors", run.total()),
        }
    });

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
