//! The `c_{m,n}` coefficients of `f_λ(x1) f_λ(x2)` in the `p_{mn}` basis,
//! the auxiliary `a_{m,n}` table, and the recurrences relating them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{binomial, factorial, from_usize, int, pochhammer, sign, CouplingG, Rational};
use crate::continuation::{pfq_terms, sum_terms, Affine, Evaluation, Term};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::Poly;
use crate::separated::{b_lambda, f_lambda_sum_form};
use crate::sympoly::{sympoly_to_pmn, SymPoly};

/// `r1 = λ1 - λ3`, `r2 = λ2 - λ3` and the coupling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffProblem {
    pub r1: usize,
    pub r2: usize,
    pub g: CouplingG,
}

impl CoeffProblem {
    pub fn new(r1: usize, r2: usize, g: CouplingG) -> Result<Self> {
        if r2 > r1 {
            return Err(Error::InvalidIndex(format!("r2 = {r2} exceeds r1 = {r1}")));
        }
        Ok(CoeffProblem { r1, r2, g })
    }

    pub fn from_partition(lambda: &Partition, g: &CouplingG) -> Result<Self> {
        if lambda.len() != 3 {
            return Err(Error::VariableCount {
                expected: 3,
                found: lambda.len(),
            });
        }
        CoeffProblem::new(lambda.diff(0, 2), lambda.diff(1, 2), g.clone())
    }

    /// The representative partition `(r1, r2, 0)`.
    pub fn partition(&self) -> Partition {
        Partition::new(vec![self.r1, self.r2, 0]).expect("r1 >= r2")
    }

    /// All `(m, n)` with `m + n ≤ r1`, ordered by `(m + n, m)`.
    pub fn support(&self) -> Vec<(usize, usize)> {
        (0..=self.r1)
            .flat_map(|total| (0..=total).map(move |m| (m, total - m)))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    C,
    A,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::C => "c",
            TableKind::A => "a",
        })
    }
}

/// A triangular coefficient array; zero entries are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub problem: CoeffProblem,
    pub kind: TableKind,
    pub entries: BTreeMap<(usize, usize), Rational>,
}

impl CoeffTable {
    pub fn new(
        problem: CoeffProblem,
        kind: TableKind,
        entries: impl IntoIterator<Item = ((usize, usize), Rational)>,
    ) -> Self {
        CoeffTable {
            problem,
            kind,
            entries: entries.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn get(&self, m: usize, n: usize) -> Rational {
        self.entries
            .get(&(m, n))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Which closed form produced a coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    First,
    Second,
}

impl Branch {
    pub fn sibling(self) -> Branch {
        match self {
            Branch::First => Branch::Second,
            Branch::Second => Branch::First,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::First => "f1",
            Branch::Second => "f2",
        })
    }
}

fn fixed(k: i64) -> Affine {
    Affine::fixed(int(k))
}

fn ratio_factorials(num: usize, den: usize) -> Rational {
    factorial(num) / factorial(den)
}

/// Normalization of the first branch.
fn alpha_1(r1: usize, r2: usize) -> Term {
    Term::constant(ratio_factorials(r1 - r2, r1))
        .poch(Affine::of(3, 0), r1)
        .poch(Affine::of(2, 0), r2)
        .over_poch(Affine::of(2, 0), r1 - r2)
        .over_poch(Affine::of(-1, 1), r2)
}

/// Normalization of the second branch.
fn alpha_2(r1: usize, r2: usize) -> Term {
    Term::constant(ratio_factorials(r2, r1))
        .poch(Affine::of(1, 1), r1)
        .poch(Affine::of(1, 0), r1 - r2)
        .over_poch(Affine::of(1, 1), r2)
        .over_poch(Affine::of(2, 0), r1 - r2)
        .poch(Affine::of(3, 0), r1)
        .poch(Affine::of(2, 0), r2)
        .over_poch(Affine::of(2, 0), r1)
        .over_poch(Affine::of(1, 0), r2)
}

fn expand_with(outer: Term, series: Vec<Term>) -> Vec<Term> {
    series.iter().map(|t| outer.product(t)).collect()
}

/// Summands of the closed form for `c_{m,n}` on the given branch.
pub fn closed_form_terms(p: &CoeffProblem, branch: Branch, m: usize, n: usize) -> Result<Vec<Term>> {
    let (r1, r2) = (p.r1 as i64, p.r2 as i64);
    let (mi, s) = (m as i64, (m + n) as i64);
    let inv = Rational::from_integer(1.into()) / (factorial(m) * factorial(n));
    match branch {
        Branch::First => {
            let outer = alpha_1(p.r1, p.r2)
                .times(&inv)
                .poch(fixed(-r1), m + n)
                .poch(Affine::of(1, -r2), m + n)
                .poch(Affine::of(-1, 1), m)
                .over_poch(Affine::of(-2, 1 - r1), m)
                .over_poch(Affine::of(-1, 1 - r2), m)
                .over_poch(Affine::of(3, 0), n);
            let series = pfq_terms(
                &[fixed(-r2), Affine::of(1, 0), Affine::of(-1, -r1), Affine::of(-2, 1 - s)],
                &[Affine::of(-1, 1 - r2), Affine::of(-2, 1 - r1), Affine::of(1, -mi)],
            )?;
            Ok(expand_with(outer, series))
        }
        Branch::Second => {
            let outer = alpha_2(p.r1, p.r2)
                .times(&inv)
                .poch(Affine::of(-2, 1 - r2), m)
                .poch(fixed(-r1), m + n)
                .poch(Affine::of(2, 0), m + n)
                .over_poch(Affine::of(-2, 1 - r1), m)
                .over_poch(Affine::of(-1, 1 - r2), m)
                .over_poch(Affine::of(3, 0), n);
            let series = pfq_terms(
                &[fixed(r2 - r1), Affine::of(1, 0), Affine::of(2, r2), Affine::of(-1, 1 + r2 - s)],
                &[Affine::of(-1, 1 + r2 - r1), Affine::of(1, 1 + r2), Affine::of(2, r2 - mi)],
            )?;
            Ok(expand_with(outer, series))
        }
    }
}

fn closed_form_site(branch: Branch, m: usize, n: usize) -> String {
    format!("closed form {branch} at (m, n) = ({m}, {n})")
}

fn check_range(p: &CoeffProblem, m: usize, n: usize) -> Result<()> {
    if m + n > p.r1 {
        return Err(Error::InvalidIndex(format!(
            "(m, n) = ({m}, {n}) lies outside m + n <= {}",
            p.r1
        )));
    }
    Ok(())
}

/// One closed-form coefficient under an explicit evaluation mode.
pub fn cmn_closed_form_with(
    p: &CoeffProblem,
    branch: Branch,
    m: usize,
    n: usize,
    mode: Evaluation,
) -> Result<Rational> {
    check_range(p, m, n)?;
    let site = closed_form_site(branch, m, n);
    let hint = format!("closed form {} may apply", branch.sibling());
    sum_terms(closed_form_terms(p, branch, m, n)?, &p.g, mode, &site)
        .map_err(|e| e.with_hint(&hint))
}

/// `c_{m,n}` from the first closed form, by substitution.
pub fn cmn_closed_form_1(p: &CoeffProblem, m: usize, n: usize) -> Result<Rational> {
    cmn_closed_form_with(p, Branch::First, m, n, Evaluation::Exact)
}

/// `c_{m,n}` from the second closed form, by substitution.
pub fn cmn_closed_form_2(p: &CoeffProblem, m: usize, n: usize) -> Result<Rational> {
    cmn_closed_form_with(p, Branch::Second, m, n, Evaluation::Exact)
}

/// A whole table from one branch.
pub fn closed_form_table(p: &CoeffProblem, branch: Branch, mode: Evaluation) -> Result<CoeffTable> {
    let entries = p
        .support()
        .into_iter()
        .map(|(m, n)| Ok(((m, n), cmn_closed_form_with(p, branch, m, n, mode)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoeffTable::new(p.clone(), TableKind::C, entries))
}

/// A c-table assembled entry by entry from whichever branch is regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineTable {
    pub table: CoeffTable,
    pub branches: BTreeMap<(usize, usize), Branch>,
}

/// Tries the first closed form, then the second, for every entry; fails
/// only if both are degenerate somewhere.
pub fn cmn_engine(p: &CoeffProblem) -> Result<EngineTable> {
    let mut entries = Vec::new();
    let mut branches = BTreeMap::new();
    for (m, n) in p.support() {
        let (value, branch) = match cmn_closed_form_1(p, m, n) {
            Ok(v) => (v, Branch::First),
            Err(e1) if e1.is_degenerate() => match cmn_closed_form_2(p, m, n) {
                Ok(v) => (v, Branch::Second),
                Err(e2) if e2.is_degenerate() => {
                    return Err(match e2 {
                        Error::DegenerateLowerParameter {
                            parameter,
                            index,
                            site,
                            ..
                        } => Error::DegenerateLowerParameter {
                            parameter,
                            index,
                            site: format!("both closed forms; {site}"),
                            hint: Some("choose a different g or use the expansion table".into()),
                        },
                        other => other,
                    })
                }
                Err(e2) => return Err(e2),
            },
            Err(e1) => return Err(e1),
        };
        entries.push(((m, n), value));
        branches.insert((m, n), branch);
    }
    Ok(EngineTable {
        table: CoeffTable::new(p.clone(), TableKind::C, entries),
        branches,
    })
}

/// Ground truth: multiply `f_λ(x1) f_λ(x2)`, strip `(x1 x2)^{λ3}` and
/// convert to the `p_{mn}` basis.
pub fn cmn_by_expansion(lambda: &Partition, g: &CouplingG) -> Result<CoeffTable> {
    let problem = CoeffProblem::from_partition(lambda, g)?;
    let f = f_lambda_sum_form(lambda, g)?;
    let mut p1 = Poly::zero(2);
    let mut p2 = Poly::zero(2);
    for (k, v) in f.coeffs().iter().enumerate() {
        p1.add_term(vec![k, 0], v.clone());
        p2.add_term(vec![0, k], v.clone());
    }
    let product = SymPoly::from_poly(&(&p1 * &p2))?;
    let expansion = sympoly_to_pmn(&product)?.relative_to(lambda.smallest())?;
    Ok(CoeffTable::new(problem, TableKind::C, expansion.terms))
}

/// `ξ_k = c_{k-λ3, 0} / b_λ` for `k = λ3, …, λ1`.
pub fn xi_coeffs_from_cmn(lambda: &Partition, g: &CouplingG) -> Result<Vec<Rational>> {
    let problem = CoeffProblem::from_partition(lambda, g)?;
    let engine = cmn_engine(&problem)?;
    let b = b_lambda(lambda, g);
    Ok((0..=problem.r1).map(|m| engine.table.get(m, 0) / &b).collect())
}

/// Summands of `a_{m,0}` on the given branch.
fn am0_terms(p: &CoeffProblem, branch: Branch, m: usize) -> Result<Vec<Term>> {
    let (r1, r2, mi) = (p.r1 as i64, p.r2 as i64, m as i64);
    match branch {
        Branch::First => {
            let outer = alpha_1(p.r1, p.r2)
                .poch(Affine::of(-1, 1), m)
                .over_poch(Affine::of(2, 0), m);
            let series = pfq_terms(
                &[fixed(-r2), Affine::of(1, 0), Affine::of(-1, -r1), Affine::of(-2, 1 - mi)],
                &[Affine::of(-1, 1 - r2), Affine::of(-2, 1 - r1), Affine::of(1, -mi)],
            )?;
            Ok(expand_with(outer, series))
        }
        Branch::Second => {
            let outer = alpha_2(p.r1, p.r2)
                .poch(Affine::of(-2, 1 - r2), m)
                .over_poch(Affine::of(1, -r2), m);
            let series = pfq_terms(
                &[fixed(r2 - r1), Affine::of(1, 0), Affine::of(2, r2), Affine::of(-1, 1 + r2 - mi)],
                &[Affine::of(-1, 1 + r2 - r1), Affine::of(1, 1 + r2), Affine::of(2, r2 - mi)],
            )?;
            Ok(expand_with(outer, series))
        }
    }
}

/// `a_{m,0}` from one branch.
pub fn am0_with(p: &CoeffProblem, branch: Branch, m: usize, mode: Evaluation) -> Result<Rational> {
    let site = format!("a_(m,0) branch {branch} at m = {m}");
    sum_terms(am0_terms(p, branch, m)?, &p.g, mode, &site)
}

/// `a_{m,n} = Σ_l (-1)^l C(n,l) a_{m+l,0}` over `m + n ≤ r1`, with
/// `a_{m,0}` from the first branch, falling back to the second.
pub fn amn_table(p: &CoeffProblem) -> Result<CoeffTable> {
    amn_table_with(p, Evaluation::Exact)
}

pub fn amn_table_with(p: &CoeffProblem, mode: Evaluation) -> Result<CoeffTable> {
    let mut first_column = Vec::with_capacity(p.r1 + 1);
    for m in 0..=p.r1 {
        let v = match am0_with(p, Branch::First, m, mode) {
            Ok(v) => v,
            Err(e) if e.is_degenerate() => am0_with(p, Branch::Second, m, mode)?,
            Err(e) => return Err(e),
        };
        first_column.push(v);
    }
    let mut entries = Vec::new();
    for (m, n) in p.support() {
        let mut acc = Rational::zero();
        for l in 0..=n {
            acc += sign(l) * binomial(n, l)? * &first_column[m + l];
        }
        entries.push(((m, n), acc));
    }
    Ok(CoeffTable::new(p.clone(), TableKind::A, entries))
}

/// Residual of the first recurrence at `(m, n)`; zero when it holds.
pub fn first_recurrence_residual(c: &CoeffTable, m: usize, n: usize) -> Rational {
    let (r1, r2) = (from_usize(c.problem.r1), from_usize(c.problem.r2));
    let g = c.problem.g.value();
    let (mm, nn, s) = (from_usize(m), from_usize(n), from_usize(m + n));
    let one = int(1);
    let three_g = g * int(3);
    c.get(m + 1, n) * (&mm + &one) * (&one - g * int(2) + &mm - &r1) * (&one - g + &mm - &r2)
        + c.get(m, n + 1) * (&nn + &one) * (&three_g + &nn - &one) * (&three_g + &nn)
        + c.get(m, n) * (g * int(2) + &s) * (&r1 - &s) * (g + &s - &r2)
}

/// Residual of the second recurrence for the a-table at `(m, n)`.
pub fn second_recurrence_residual(a: &CoeffTable, m: usize, n: usize) -> Rational {
    let (r1, r2) = (from_usize(a.problem.r1), from_usize(a.problem.r2));
    let g = a.problem.g.value();
    let (mm, nn, s) = (from_usize(m), from_usize(n), from_usize(m + n));
    let one = int(1);
    let three_g = g * int(3);
    let left = if m > 0 {
        &mm * (g * int(2) + &r1 - &mm) * (g + &r2 - &mm) * a.get(m - 1, n)
    } else {
        Rational::zero()
    };
    let down = if n > 0 {
        &nn * (&three_g + &nn - int(2)) * (&three_g + &nn - &one) * a.get(m, n - 1)
    } else {
        Rational::zero()
    };
    let right = (&s - &r1) * (g * int(2) + &s) * (g - &r2 + &s) * a.get(m + 1, n);
    let diagonal = &nn * (&three_g + &nn - &one) * (&three_g + &nn - int(2))
        - int(3) * &mm * (&mm + &one) * &nn
        - &nn * (&r1 - &one) * (&r2 - &one)
        + int(2) * (&mm - &r2) * (g * (&one + &r1) + (&r1 - &mm) * &mm)
        + int(2) * (&three_g + &r1 + &r2) * &mm * &nn
        - g * (g - &one) * (&r1 + int(3) * &r2 - int(5) * &mm)
        - g * (g * int(2) - int(3) + &r1 + int(2) * &r2) * &nn;
    left - down + right + diagonal * a.get(m, n)
}

/// `a_{m+1,n} + a_{m,n+1} - a_{m,n}`, defined for `m + n < r1`.
pub fn two_term_residual(a: &CoeffTable, m: usize, n: usize) -> Rational {
    a.get(m + 1, n) + a.get(m, n + 1) - a.get(m, n)
}

/// The substitution between c and a, cleared of denominators:
/// `c · m! n! (3g-1)_n (3g)_n (1-2g-r1)_m (1-g-r2)_m - (2g)_{m+n} (-r1)_{m+n} (g-r2)_{m+n} a`.
pub fn substitution_residual(c: &CoeffTable, a: &CoeffTable, m: usize, n: usize) -> Rational {
    let (r1, r2) = (from_usize(c.problem.r1), from_usize(c.problem.r2));
    let g = c.problem.g.value();
    let one = int(1);
    let lhs = c.get(m, n)
        * factorial(m)
        * factorial(n)
        * pochhammer(&(g * int(3) - &one), n)
        * pochhammer(&(g * int(3)), n)
        * pochhammer(&(&one - g * int(2) - &r1), m)
        * pochhammer(&(&one - g - &r2), m);
    let rhs = pochhammer(&(g * int(2)), m + n)
        * pochhammer(&-&r1, m + n)
        * pochhammer(&(g - &r2), m + n)
        * a.get(m, n);
    lhs - rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{default_g_panel, rat};
    use crate::hypergeom::{pfq_terminating, HypergeomSpec};

    fn g(n: i64, d: i64) -> CouplingG {
        CouplingG::from_ratio(n, d).unwrap()
    }

    fn problem(r1: usize, r2: usize, gg: CouplingG) -> CoeffProblem {
        CoeffProblem::new(r1, r2, gg).unwrap()
    }

    #[test]
    fn anchor_values() {
        for gg in [g(1, 3), g(2, 5), g(7, 3)] {
            let p = problem(1, 0, gg);
            for f in [cmn_closed_form_1, cmn_closed_form_2] {
                assert_eq!(f(&p, 0, 0).unwrap(), rat(3, 2));
                assert_eq!(f(&p, 1, 0).unwrap(), rat(3, 4));
                assert_eq!(f(&p, 0, 1).unwrap(), rat(-1, 2));
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let l = Partition::new(vec![1, 0, 0]).unwrap();
        let t = cmn_by_expansion(&l, &g(1, 3)).unwrap();
        let expected = BTreeMap::from([((0, 0), rat(3, 2)), ((1, 0), rat(3, 4)), ((0, 1), rat(-1, 2))]);
        assert_eq!(t.entries, expected);
        let l = Partition::new(vec![2, 2, 2]).unwrap();
        let t = cmn_by_expansion(&l, &g(2, 5)).unwrap();
        assert_eq!(t.entries, BTreeMap::from([((0, 0), int(1))]));
    }

    #[test]
    fn branches_agree_with_expansion() {
        let gg = g(2, 5);
        for r1 in 0..=4 {
            for r2 in 0..=r1 {
                let p = problem(r1, r2, gg.clone());
                let truth = cmn_by_expansion(&p.partition(), &gg).unwrap();
                let t1 = closed_form_table(&p, Branch::First, Evaluation::Exact).unwrap();
                let t2 = closed_form_table(&p, Branch::Second, Evaluation::Exact).unwrap();
                assert_eq!(t1, truth, "r1={r1} r2={r2}");
                assert_eq!(t2, truth, "r1={r1} r2={r2}");
            }
        }
    }

    #[test]
    fn degenerate_branch_names_itself_and_engine_falls_back() {
        let p = problem(2, 1, g(1, 1));
        let err = cmn_closed_form_1(&p, 0, 0).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("f1"), "{text}");
        assert!(text.contains("f2"), "{text}");
        let engine = cmn_engine(&p);
        let truth = cmn_by_expansion(&p.partition(), &p.g).unwrap();
        match engine {
            Ok(e) => assert_eq!(e.table, truth),
            Err(e) => assert!(e.is_degenerate()),
        }
        let limit = closed_form_table(&p, Branch::First, Evaluation::Limit).unwrap();
        assert_eq!(limit, truth);
    }

    #[test]
    fn series_terms_match_hypergeometric_engine() {
        // The 4F3 of the first branch at a generic point, summed two ways.
        let p = problem(3, 2, g(2, 5));
        let gv = p.g.value().clone();
        let (m, n) = (1, 1);
        let s = from_usize(m + n);
        let spec = HypergeomSpec::new(
            vec![int(-2), gv.clone(), -&gv - int(3), int(1) - &gv * int(2) - &s],
            vec![int(1) - &gv - int(2), int(1) - &gv * int(2) - int(3), &gv - from_usize(m)],
            int(1),
        );
        let direct = pfq_terminating(&spec).unwrap();
        let series = pfq_terms(
            &[fixed(-2), Affine::of(1, 0), Affine::of(-1, -3), Affine::of(-2, 1 - 2)],
            &[Affine::of(-1, 1 - 2), Affine::of(-2, 1 - 3), Affine::of(1, -1)],
        )
        .unwrap();
        assert_eq!(sum_terms(series, &p.g, Evaluation::Exact, "t").unwrap(), direct);
    }

    #[test]
    fn recurrences_and_substitution() {
        for gg in default_g_panel() {
            for r1 in 0..=4 {
                for r2 in 0..=r1 {
                    let p = problem(r1, r2, gg.clone());
                    let c = cmn_by_expansion(&p.partition(), &gg).unwrap();
                    for (m, n) in p.support() {
                        assert!(first_recurrence_residual(&c, m, n).is_zero());
                    }
                    let Ok(a) = amn_table_with(&p, Evaluation::Limit) else {
                        continue;
                    };
                    for (m, n) in p.support() {
                        assert!(substitution_residual(&c, &a, m, n).is_zero(), "{r1} {r2} {gg} {m} {n}");
                        if m + n < r1 {
                            assert!(two_term_residual(&a, m, n).is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn a_table_anchor() {
        let p = problem(1, 0, g(2, 5));
        assert_eq!(amn_table(&p).unwrap().get(0, 0), rat(3, 2));
    }

    #[test]
    fn xi_via_cmn() {
        let l = Partition::new(vec![1, 0, 0]).unwrap();
        assert_eq!(
            xi_coeffs_from_cmn(&l, &g(1, 3)).unwrap(),
            vec![int(1), rat(1, 2)]
        );
    }
}
