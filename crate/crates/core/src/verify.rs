//! Verification suites. Each suite is a list of independent jobs run in
//! parallel; a job yields one or more named case results.

use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{format_rational, int, CouplingG, Rational};
use crate::continuation::Evaluation;
use crate::error::{Error, Result};
use crate::json::{Failure, Skip, SuiteReport};
use crate::oracle::{
    apply_hg, constant_term_inner, eigenvalue, jack_from_matrix, jack_oracle, operator_matrix,
};
use crate::partition::{partitions_of, Partition};
use crate::separated::{b_lambda, c_lambda, f_lambda_product_form_with, f_lambda_sum_form};
use crate::sov::a1::{
    jack_a1_elementary, jack_a1_gegenbauer, jack_a1_pmn, jack_a1_standard, s2_factorization_sides,
    watson_sides,
};
use crate::sov::a2::{
    jack_a2_with, jack_one_row, jack_one_row_a2_elementary, jack_one_row_e1e2, jack_one_row_pmn,
    jack_rectangular, jack_two_row, s3hat_factorization_sides, Representation,
};
use crate::sov::coeffs::{
    amn_table_with, cmn_by_expansion, cmn_closed_form_with, first_recurrence_residual,
    second_recurrence_residual, substitution_residual, two_term_residual, Branch, CoeffProblem,
};
use crate::sympoly::{elementary_to_monomial, SymPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Passed, but a strict evaluation was degenerate and the value was
    /// obtained by continuation in `g`.
    Continued,
    Fail { expected: String, actual: String },
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub id: String,
    pub outcome: Outcome,
}

impl CaseResult {
    fn new(id: impl Into<String>, outcome: Outcome) -> Self {
        CaseResult {
            id: id.into(),
            outcome,
        }
    }
}

type Job = Box<dyn Fn() -> Vec<CaseResult> + Send + Sync>;

/// Results of a suite, sorted by case id.
#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub name: String,
    pub results: Vec<CaseResult>,
    pub wall_time_ms: u64,
}

impl SuiteRun {
    fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.results.iter().filter(|r| pred(&r.outcome)).count()
    }

    pub fn total(&self) -> usize {
        self.results.len()
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Skip(_)))
    }

    pub fn continued(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Continued))
    }

    pub fn failed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Fail { .. }))
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0
    }

    /// Fraction of cases skipped, in `[0, 1]`.
    pub fn skip_ratio(&self) -> Rational {
        if self.results.is_empty() {
            Rational::zero()
        } else {
            Rational::new(self.skipped().into(), self.total().into())
        }
    }

    pub fn report(&self) -> SuiteReport {
        let mut failures = Vec::new();
        let mut skipped = Vec::new();
        for r in &self.results {
            match &r.outcome {
                Outcome::Fail { expected, actual } => failures.push(Failure {
                    case_id: r.id.clone(),
                    expected: expected.clone(),
                    actual: actual.clone(),
                }),
                Outcome::Skip(reason) => skipped.push(Skip {
                    case_id: r.id.clone(),
                    reason: reason.clone(),
                }),
                _ => {}
            }
        }
        failures.sort();
        skipped.sort();
        let cases_run = self.total() - skipped.len();
        SuiteReport {
            suite: self.name.clone(),
            cases_run,
            cases_passed: cases_run - failures.len(),
            failures,
            skipped,
            wall_time_ms: self.wall_time_ms,
        }
    }

    /// Concatenates several runs under one name.
    pub fn merge(name: &str, runs: Vec<SuiteRun>) -> SuiteRun {
        let mut results: Vec<CaseResult> = runs.iter().flat_map(|r| r.results.clone()).collect();
        results.sort_by(|a, b| a.id.cmp(&b.id));
        SuiteRun {
            name: name.to_string(),
            results,
            wall_time_ms: runs.iter().map(|r| r.wall_time_ms).sum(),
        }
    }
}

fn run(name: &str, jobs: Vec<Job>) -> SuiteRun {
    let start = Instant::now();
    let mut results: Vec<CaseResult> = jobs.par_iter().flat_map_iter(|job| job()).collect();
    results.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteRun {
        name: name.to_string(),
        results,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

fn fail(expected: impl ToString, actual: impl ToString) -> Outcome {
    Outcome::Fail {
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn error_outcome(e: &Error) -> Outcome {
    fail("a value", format!("error: {e}"))
}

fn compare<T: PartialEq>(expected: &T, actual: &T, show: impl Fn(&T) -> String) -> Option<Outcome> {
    (expected != actual).then(|| fail(show(expected), show(actual)))
}

fn show_poly(p: &SymPoly) -> String {
    p.display_monomial()
}

/// Runs `f` strictly, and by continuation if the strict run is degenerate.
fn strict_or_continued<T>(f: impl Fn(Evaluation) -> Result<T>) -> Result<(T, bool)> {
    match f(Evaluation::Exact) {
        Ok(v) => Ok((v, false)),
        Err(e) if e.is_degenerate() => Ok((f(Evaluation::Limit)?, true)),
        Err(e) => Err(e),
    }
}

fn settle(problems: Vec<Outcome>, continued: bool) -> Outcome {
    match problems.into_iter().next() {
        Some(o) => o,
        None if continued => Outcome::Continued,
        None => Outcome::Pass,
    }
}

fn p(parts: Vec<usize>) -> Partition {
    Partition::new(parts).expect("generated partitions are valid")
}

/// `f_λ` product form = nested-sum form, and `f_λ(1) = b_λ`, for length-`n`
/// partitions with `λ1 ≤ max_part`.
pub fn separated_suite(panel: &[CouplingG], bounds: &[(usize, usize)]) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for &(n, max_part) in bounds {
        for w in 0..=n * max_part {
            for lambda in partitions_of(w, n) {
                if lambda.largest() > max_part {
                    continue;
                }
                for g in panel {
                    let (lambda, g) = (lambda.clone(), g.clone());
                    jobs.push(Box::new(move || {
                        let id = format!("separated/n={}/{lambda}/g={g}", lambda.len());
                        vec![CaseResult::new(id, separated_case(&lambda, &g))]
                    }));
                }
            }
        }
    }
    run("separated", jobs)
}

fn separated_case(lambda: &Partition, g: &CouplingG) -> Outcome {
    let sum = match f_lambda_sum_form(lambda, g) {
        Ok(s) => s,
        Err(e) => return error_outcome(&e),
    };
    let (product, continued) = match strict_or_continued(|mode| f_lambda_product_form_with(lambda, g, mode)) {
        Ok(v) => v,
        Err(e) => return error_outcome(&e),
    };
    let mut problems = Vec::new();
    problems.extend(compare(&sum, &product, |u| u.to_string()));
    problems.extend(compare(&b_lambda(lambda, g), &sum.evaluate(&int(1)), format_rational));
    settle(problems, continued)
}

/// Watson's product formula at `b = g`, `c = 1 - n - g`, for `n ≤ max_n`.
pub fn watson_suite(panel: &[CouplingG], max_n: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for n in 0..=max_n {
        for g in panel {
            let g = g.clone();
            jobs.push(Box::new(move || {
                let b = g.value().clone();
                let c = int(1) - int(n as i64) - &b;
                let outcome = match watson_sides(n, &b, &c) {
                    Ok((lhs, rhs)) => compare(&lhs, &rhs, show_poly).unwrap_or(Outcome::Pass),
                    Err(e) => error_outcome(&e),
                };
                vec![CaseResult::new(format!("watson/n={n}/g={g}"), outcome)]
            }));
        }
    }
    run("watson", jobs)
}

/// All two-variable forms agree with the oracle, and `S2` factorizes them.
pub fn a1_suite(panel: &[CouplingG], max_l12: usize, max_l2: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for d in 0..=max_l12 {
        for l2 in 0..=max_l2 {
            for g in panel {
                let (lambda, g) = (p(vec![l2 + d, l2]), g.clone());
                jobs.push(Box::new(move || a1_case(&lambda, &g)));
            }
        }
    }
    run("a1", jobs)
}

fn a1_case(lambda: &Partition, g: &CouplingG) -> Vec<CaseResult> {
    let base = format!("a1/{lambda}/g={g}");
    let forms = (|| -> Result<Vec<(&str, SymPoly)>> {
        Ok(vec![
            ("standard", jack_a1_standard(lambda, g)?),
            ("pmn", jack_a1_pmn(lambda, g)?),
            ("elementary", jack_a1_elementary(lambda, g)?),
            ("gegenbauer", jack_a1_gegenbauer(lambda, g)?),
        ])
    })();
    let forms_outcome = match (forms, jack_oracle(lambda, g, 2)) {
        (Ok(forms), Ok(oracle)) => {
            let problems: Vec<Outcome> = forms
                .iter()
                .filter_map(|(name, f)| {
                    compare(&oracle, f, show_poly).map(|o| match o {
                        Outcome::Fail { expected, actual } => fail(expected, format!("{name}: {actual}")),
                        other => other,
                    })
                })
                .collect();
            settle(problems, false)
        }
        (Err(e), _) | (_, Err(e)) => error_outcome(&e),
    };
    let factor_outcome = match s2_factorization_sides(lambda, g) {
        Ok((lhs, rhs)) => compare(&rhs, &lhs, |e| format!("{e:?}")).unwrap_or(Outcome::Pass),
        Err(e) => error_outcome(&e),
    };
    vec![
        CaseResult::new(format!("{base}/forms"), forms_outcome),
        CaseResult::new(format!("{base}/s2-factorization"), factor_outcome),
    ]
}

/// Closed forms against the expansion table, entry by entry.
///
/// An entry is skipped only if both closed forms are degenerate there; a
/// degenerate branch is still checked through its continuation in `g`.
pub fn cmn_suite(panel: &[CouplingG], max_r1: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for r1 in 0..=max_r1 {
        for r2 in 0..=r1 {
            for g in panel {
                let g = g.clone();
                jobs.push(Box::new(move || cmn_case(r1, r2, &g)));
            }
        }
    }
    run("cmn", jobs)
}

fn cmn_case(r1: usize, r2: usize, g: &CouplingG) -> Vec<CaseResult> {
    let problem = CoeffProblem::new(r1, r2, g.clone()).expect("r2 <= r1");
    let base = format!("cmn/r1={r1}/r2={r2}/g={g}");
    let truth = match cmn_by_expansion(&problem.partition(), g) {
        Ok(t) => t,
        Err(e) => return vec![CaseResult::new(base, error_outcome(&e))],
    };
    let mut out = Vec::new();
    for (m, n) in problem.support() {
        let id = format!("{base}/m={m}/n={n}");
        let expected = truth.get(m, n);
        let mut problems = Vec::new();
        let mut degenerate = Vec::new();
        for branch in [Branch::First, Branch::Second] {
            match cmn_closed_form_with(&problem, branch, m, n, Evaluation::Exact) {
                Ok(v) => problems.extend(compare(&expected, &v, format_rational)),
                Err(e) if e.is_degenerate() => degenerate.push(branch),
                Err(e) => problems.push(error_outcome(&e)),
            }
        }
        for &branch in &degenerate {
            match cmn_closed_form_with(&problem, branch, m, n, Evaluation::Limit) {
                Ok(v) => problems.extend(compare(&expected, &v, format_rational).map(|o| match o {
                    Outcome::Fail { expected, actual } => {
                        fail(expected, format!("{branch} by continuation: {actual}"))
                    }
                    other => other,
                })),
                Err(e) => problems.push(error_outcome(&e)),
            }
        }
        let outcome = match (problems.into_iter().next(), degenerate.len()) {
            (Some(o), _) => o,
            (None, 2) => Outcome::Skip(
                "both closed forms degenerate; their continuations match the expansion".into(),
            ),
            (None, 1) => Outcome::Continued,
            (None, _) => Outcome::Pass,
        };
        out.push(CaseResult::new(id, outcome));
    }
    out
}

/// First recurrence on the c-table; second recurrence, the two-term
/// relation and the c/a substitution on the a-table.
pub fn recurrence_suite(panel: &[CouplingG], max_r1: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for r1 in 0..=max_r1 {
        for r2 in 0..=r1 {
            for g in panel {
                let g = g.clone();
                jobs.push(Box::new(move || recurrence_case(r1, r2, &g)));
            }
        }
    }
    if max_r1 >= 1 {
        for g in panel {
            let g = g.clone();
            jobs.push(Box::new(move || vec![anchor_case(&g)]));
        }
    }
    run("recurrences", jobs)
}

fn anchor_case(g: &CouplingG) -> CaseResult {
    let id = format!("recurrences/anchor/g={g}");
    let lambda = p(vec![1, 0, 0]);
    let outcome = match cmn_by_expansion(&lambda, g) {
        Ok(t) => {
            let got = [t.get(0, 0), t.get(1, 0), t.get(0, 1)];
            let want = [int(3) / int(2), int(3) / int(4), int(-1) / int(2)];
            compare(&want.to_vec(), &got.to_vec(), |v| {
                v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
            })
            .unwrap_or(Outcome::Pass)
        }
        Err(e) => error_outcome(&e),
    };
    CaseResult::new(id, outcome)
}

fn residual_outcome(
    support: &[(usize, usize)],
    residual: impl Fn(usize, usize) -> Rational,
    continued: bool,
) -> Outcome {
    for &(m, n) in support {
        let r = residual(m, n);
        if !r.is_zero() {
            return fail(format!("0 at (m, n) = ({m}, {n})"), format_rational(&r));
        }
    }
    settle(Vec::new(), continued)
}

fn recurrence_case(r1: usize, r2: usize, g: &CouplingG) -> Vec<CaseResult> {
    let problem = CoeffProblem::new(r1, r2, g.clone()).expect("r2 <= r1");
    let base = format!("recurrences/r1={r1}/r2={r2}/g={g}");
    let support = problem.support();
    let c = match cmn_by_expansion(&problem.partition(), g) {
        Ok(c) => c,
        Err(e) => return vec![CaseResult::new(base, error_outcome(&e))],
    };
    let mut out = vec![CaseResult::new(
        format!("{base}/first"),
        residual_outcome(&support, |m, n| first_recurrence_residual(&c, m, n), false),
    )];
    let a_ids = ["second", "two-term", "substitution"].map(|k| format!("{base}/{k}"));
    let (a, continued) = match strict_or_continued(|mode| amn_table_with(&problem, mode)) {
        Ok(v) => v,
        Err(e @ Error::PoleSurvives { .. }) => {
            let reason = format!("a-table has a pole at this g: {e}");
            out.extend(a_ids.map(|id| CaseResult::new(id, Outcome::Skip(reason.clone()))));
            return out;
        }
        Err(e) => {
            out.extend(a_ids.map(|id| CaseResult::new(id, error_outcome(&e))));
            return out;
        }
    };
    let inner: Vec<(usize, usize)> = support.iter().copied().filter(|&(m, n)| m + n < r1).collect();
    let [second, two_term, substitution] = a_ids;
    out.push(CaseResult::new(
        second,
        residual_outcome(&support, |m, n| second_recurrence_residual(&a, m, n), continued),
    ));
    out.push(CaseResult::new(
        two_term,
        residual_outcome(&inner, |m, n| two_term_residual(&a, m, n), continued),
    ));
    out.push(CaseResult::new(
        substitution,
        residual_outcome(&support, |m, n| substitution_residual(&c, &a, m, n), continued),
    ));
    out
}

/// `Ŝ3 p_λ = c_λ b_λ^{-2} f_λ(x1) f_λ(x2)` with `P_λ` from the oracle, for
/// `λ = (λ13, λ23, 0)` with `λ13 ≤ max_l13`.
pub fn a2_factorization_suite(panel: &[CouplingG], max_l13: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for r1 in 0..=max_l13 {
        for r2 in 0..=r1 {
            for g in panel {
                let (lambda, g) = (p(vec![r1, r2, 0]), g.clone());
                jobs.push(Box::new(move || {
                    let outcome = match jack_oracle(&lambda, &g, 3)
                        .and_then(|jack| s3hat_factorization_sides(&lambda, &jack, &g))
                    {
                        Ok((lhs, rhs)) => compare(&rhs, &lhs, |e| format!("{e:?}")).unwrap_or(Outcome::Pass),
                        Err(e) => error_outcome(&e),
                    };
                    vec![CaseResult::new(format!("s3-factorization/{lambda}/g={g}"), outcome)]
                }));
            }
        }
    }
    run("s3-factorization", jobs)
}

/// Both triple-sum representations against the oracle, plus normalization.
pub fn representation_suite(panel: &[CouplingG], max_l1: usize, max_l3: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for l1 in 0..=max_l1 {
        for l2 in 0..=l1 {
            for l3 in 0..=l2.min(max_l3) {
                for g in panel {
                    let (lambda, g) = (p(vec![l1, l2, l3]), g.clone());
                    jobs.push(Box::new(move || representation_case(&lambda, &g)));
                }
            }
        }
    }
    run("representations", jobs)
}

fn representation_case(lambda: &Partition, g: &CouplingG) -> Vec<CaseResult> {
    let base = format!("representations/{lambda}/g={g}");
    let oracle = match jack_oracle(lambda, g, 3) {
        Ok(o) => o,
        Err(e) => return vec![CaseResult::new(base, error_outcome(&e))],
    };
    let mut out = Vec::new();
    for which in [Representation::First, Representation::Second] {
        let label = match which {
            Representation::First => "repr1",
            Representation::Second => "repr2",
        };
        let outcome = match strict_or_continued(|mode| jack_a2_with(lambda, g, which, mode)) {
            Ok((poly, continued)) => {
                let mut problems = Vec::new();
                problems.extend(compare(&oracle, &poly, show_poly));
                problems.extend(compare(&int(1), &poly.coeff(lambda), format_rational));
                let ones = vec![Rational::one(); 3];
                match poly.evaluate(&ones) {
                    Ok(v) => problems.extend(compare(&c_lambda(lambda, g), &v, format_rational)),
                    Err(e) => problems.push(error_outcome(&e)),
                }
                settle(problems, continued)
            }
            Err(e) => error_outcome(&e),
        };
        out.push(CaseResult::new(format!("{base}/{label}"), outcome));
    }
    out
}

/// One-row forms against the first representation (`r ≤ max_one`), and the
/// two-row form against the second (`r ≤ max_two`).
pub fn specialization_suite(panel: &[CouplingG], max_one: usize, max_two: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for g in panel {
        for r in 0..=max_one {
            let g = g.clone();
            jobs.push(Box::new(move || one_row_case(r, &g)));
        }
        for r in 0..=max_two {
            let g = g.clone();
            jobs.push(Box::new(move || {
                let lambda = p(vec![r, r, 0]);
                let outcome = match (
                    strict_or_continued(|mode| jack_a2_with(&lambda, &g, Representation::Second, mode)),
                    jack_two_row(r, &g),
                ) {
                    (Ok((repr, continued)), Ok(two)) => {
                        settle(compare(&repr, &two, show_poly).into_iter().collect(), continued)
                    }
                    (Err(e), _) | (_, Err(e)) => error_outcome(&e),
                };
                vec![CaseResult::new(format!("two-row/r={r}/g={g}"), outcome)]
            }));
        }
    }
    run("specialization", jobs)
}

fn one_row_case(r: usize, g: &CouplingG) -> Vec<CaseResult> {
    let base = format!("one-row/r={r}/g={g}");
    let lambda = p(vec![r, 0, 0]);
    let (repr, continued) =
        match strict_or_continued(|mode| jack_a2_with(&lambda, g, Representation::First, mode)) {
            Ok(v) => v,
            Err(e) => return vec![CaseResult::new(base, error_outcome(&e))],
        };
    let forms: [(&str, Result<SymPoly>); 4] = [
        ("pmn", jack_one_row_pmn(r, g)),
        ("e1e2", jack_one_row_e1e2(r, g)),
        ("e1e2e3", jack_one_row_a2_elementary(r, g).map(|e| elementary_to_monomial(&e, 3))),
        ("general", Ok(jack_one_row(r, 3, g))),
    ];
    forms
        .into_iter()
        .map(|(name, form)| {
            let outcome = match form {
                Ok(f) => settle(compare(&repr, &f, show_poly).into_iter().collect(), continued),
                Err(e) => error_outcome(&e),
            };
            CaseResult::new(format!("{base}/{name}"), outcome)
        })
        .collect()
}

/// Eigen-relation, triangularity, homogeneity, shift and the all-ones value
/// for every partition of weight `≤ max_weight` in `2..=max_nvars` variables.
pub fn oracle_suite(panel: &[CouplingG], max_weight: usize, max_nvars: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for nvars in 2..=max_nvars {
        for w in 0..=max_weight {
            for g in panel {
                let g = g.clone();
                jobs.push(Box::new(move || oracle_case(w, nvars, &g)));
            }
        }
    }
    run("oracle", jobs)
}

fn oracle_case(w: usize, nvars: usize, g: &CouplingG) -> Vec<CaseResult> {
    let base = format!("oracle/n={nvars}/w={w}/g={g}");
    let matrix = operator_matrix(w, nvars, g);
    let mut out = vec![
        CaseResult::new(
            format!("{base}/triangular"),
            if matrix.is_triangular() { Outcome::Pass } else { fail("triangular", "not triangular") },
        ),
        CaseResult::new(
            format!("{base}/diagonal"),
            if matrix.diagonal_matches_eigenvalues() {
                Outcome::Pass
            } else {
                fail("diagonal = E_g", "mismatch")
            },
        ),
    ];
    for lambda in &matrix.basis {
        let id = format!("oracle/n={nvars}/{lambda}/g={g}");
        let jack = match jack_from_matrix(lambda, &matrix) {
            Ok(j) => j,
            Err(e @ Error::EigenvalueCollision { .. }) => {
                out.push(CaseResult::new(id, Outcome::Skip(e.to_string())));
                continue;
            }
            Err(e) => {
                out.push(CaseResult::new(id, error_outcome(&e)));
                continue;
            }
        };
        let mut problems = Vec::new();
        match eigenvalue(lambda, g, nvars) {
            Ok(e) => problems.extend(compare(&jack.scale(&e), &apply_hg(&jack, g), show_poly)),
            Err(e) => problems.push(error_outcome(&e)),
        }
        problems.extend(compare(&vec![w], &jack.degrees(), |d| format!("degrees {d:?}")));
        let ones = vec![Rational::one(); nvars];
        match jack.evaluate(&ones) {
            Ok(v) => problems.extend(compare(&c_lambda(lambda, g), &v, format_rational)),
            Err(e) => problems.push(error_outcome(&e)),
        }
        for s in 1..=2 {
            match jack_oracle(&lambda.shifted(s), g, nvars) {
                Ok(shifted) => {
                    problems.extend(compare(&jack.times_full_monomial(s), &shifted, show_poly))
                }
                Err(e) => problems.push(error_outcome(&e)),
            }
        }
        out.push(CaseResult::new(id, settle(problems, false)));
    }
    out
}

/// Pairwise orthogonality of distinct Jack polynomials of equal weight under
/// the constant-term product, and nonvanishing norms.
pub fn orthogonality_suite(couplings: &[CouplingG], nvars: &[usize], max_weight: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for g in couplings {
        for &n in nvars {
            for w in 0..=max_weight {
                let g = g.clone();
                jobs.push(Box::new(move || orthogonality_case(w, n, &g)));
            }
        }
    }
    run("orthogonality", jobs)
}

fn orthogonality_case(w: usize, n: usize, g: &CouplingG) -> Vec<CaseResult> {
    let base = format!("orthogonality/n={n}/w={w}/g={g}");
    let basis = partitions_of(w, n);
    let jacks: Result<Vec<SymPoly>> = basis.iter().map(|l| jack_oracle(l, g, n)).collect();
    let jacks = match jacks {
        Ok(j) => j,
        Err(e) => return vec![CaseResult::new(base, error_outcome(&e))],
    };
    let mut out = Vec::new();
    for (i, a) in jacks.iter().enumerate() {
        for (j, b) in jacks.iter().enumerate().skip(i) {
            let id = format!("{base}/{}/{}", basis[i], basis[j]);
            let outcome = match constant_term_inner(a, b, g, n) {
                Ok(v) if i == j && v.is_zero() => fail("nonzero norm", "0"),
                Ok(v) if i != j && !v.is_zero() => fail("0", format_rational(&v)),
                Ok(_) => Outcome::Pass,
                Err(e) => error_outcome(&e),
            };
            out.push(CaseResult::new(id, outcome));
        }
    }
    out
}

/// The rectangular elementary-basis formula against the oracle at
/// `λ = (r^{n-1}, 0)`. Each case records whether the formula held.
pub fn conjecture_suite(panel: &[CouplingG], nvars: &[usize], max_r: usize) -> SuiteRun {
    let mut jobs: Vec<Job> = Vec::new();
    for &n in nvars {
        for r in 0..=max_r {
            for g in panel {
                let g = g.clone();
                jobs.push(Box::new(move || {
                    let mut parts = vec![r; n - 1];
                    parts.push(0);
                    let lambda = p(parts);
                    let outcome = match (jack_rectangular(r, n, &g), jack_oracle(&lambda, &g, n)) {
                        (Ok(rect), Ok(oracle)) => compare(&oracle, &rect, show_poly).unwrap_or(Outcome::Pass),
                        (Err(e), _) | (_, Err(e)) => error_outcome(&e),
                    };
                    vec![CaseResult::new(format!("rectangular/n={n}/{lambda}/g={g}"), outcome)]
                }));
            }
        }
    }
    run("conjecture-rect", jobs)
}

pub const SUITES: [&str; 10] = [
    "separated",
    "watson",
    "a1",
    "cmn",
    "recurrences",
    "sov-a2",
    "oracle",
    "orthogonality",
    "conjecture-rect",
    "all",
];

/// A named suite at size `w`: the largest part, `r1`, weight, or row length
/// depending on the suite. Secondary bounds are fixed.
pub fn run_named(name: &str, w: usize, panel: &[CouplingG]) -> Result<SuiteRun> {
    let integer_couplings = [CouplingG::from_ratio(1, 1)?, CouplingG::from_ratio(2, 1)?];
    let out = match name {
        "separated" => separated_suite(panel, &[(2, w), (3, w), (4, w)]),
        "watson" => watson_suite(panel, w),
        "a1" => a1_suite(panel, w, 3),
        "cmn" => cmn_suite(panel, w),
        "recurrences" => recurrence_suite(panel, w),
        "sov-a2" => SuiteRun::merge(
            "sov-a2",
            vec![
                a2_factorization_suite(panel, w),
                representation_suite(panel, w, 2),
                specialization_suite(panel, w, w),
            ],
        ),
        "oracle" => oracle_suite(panel, w, 3),
        "orthogonality" => orthogonality_suite(&integer_couplings, &[2, 3], w),
        "conjecture-rect" => conjecture_suite(panel, &[4, 5], w),
        "all" => {
            let runs: Result<Vec<SuiteRun>> = SUITES[..SUITES.len() - 1]
                .iter()
                .map(|s| run_named(s, w, panel))
                .collect();
            SuiteRun::merge("all", runs?)
        }
        other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
    };
    Ok(out)
}
