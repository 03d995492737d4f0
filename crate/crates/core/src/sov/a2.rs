//! Jack polynomials in three variables as double sums over the `p_{mn}`
//! basis in `x1/x3, x2/x3`, and the one-row, two-row and rectangular
//! special cases in the elementary basis.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{factorial, from_usize, int, pochhammer, sign, CouplingG, Rational};
use crate::continuation::{pfq_terms, sum_terms, Affine, Evaluation, Term};
use crate::error::{Error, Result};
use crate::partition::{partitions_bounded, Partition};
use crate::poly::Poly;
use crate::separated::{b_lambda, c_lambda};
use crate::sympoly::{elementary_to_monomial, sympoly_to_pmn, ElementaryExpansion, PmnExpansion, SymPoly};

use super::coeffs::cmn_by_expansion;
use super::operators::s3hat_apply;

/// Which of the two double-sum representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    First,
    Second,
}

impl Representation {
    fn label(self) -> &'static str {
        match self {
            Representation::First => "repr1",
            Representation::Second => "repr2",
        }
    }

    fn sibling(self) -> Representation {
        match self {
            Representation::First => Representation::Second,
            Representation::Second => Representation::First,
        }
    }
}

fn three_parts(lambda: &Partition) -> Result<(i64, i64, i64)> {
    if lambda.len() != 3 {
        return Err(Error::VariableCount {
            expected: 3,
            found: lambda.len(),
        });
    }
    Ok((
        lambda.part(0) as i64,
        lambda.part(1) as i64,
        lambda.part(2) as i64,
    ))
}

fn fixed(k: i64) -> Affine {
    Affine::fixed(int(k))
}

/// Summands of the coefficient of `u^m v^n` in the chosen representation.
fn representation_terms(
    lambda: &Partition,
    which: Representation,
    m: usize,
    n: usize,
) -> Result<Vec<Term>> {
    let (l1, l2, l3) = three_parts(lambda)?;
    let (d12, d13, d23) = (l1 - l2, l1 - l3, l2 - l3);
    let (mi, s) = (m as i64, (m + n) as i64);
    let (u12, u13, u23) = (d12 as usize, d13 as usize, d23 as usize);
    let inv = Rational::one() / (factorial(m) * factorial(n));
    match which {
        Representation::First => {
            let outer = Term::constant(factorial(u12) / factorial(u13) * inv)
                .poch(Affine::of(1, 0), u23)
                .poch(Affine::of(2, 0), u13)
                .over_poch(Affine::of(1, 0), u12)
                .over_poch(Affine::of(-1, 1), u23)
                .poch(fixed(-d13), m + n)
                .poch(Affine::of(1, -d23), m + n)
                .poch(Affine::of(-1, 1), m)
                .over_poch(Affine::of(-2, 1 - d13), m)
                .over_poch(Affine::of(-1, 1 - d23), m)
                .over_poch(Affine::of(2, 0), n);
            let series = pfq_terms(
                &[fixed(-d23), Affine::of(1, 0), Affine::of(-1, -d13), Affine::of(-2, 1 - s)],
                &[Affine::of(-1, 1 - d23), Affine::of(-2, 1 - d13), Affine::of(1, -mi)],
            )?;
            Ok(series.iter().map(|t| outer.product(t)).collect())
        }
        Representation::Second => {
            let outer = Term::constant(factorial(u23) / factorial(u13) * inv)
                .poch(Affine::of(1, 0), u13 + 1)
                .over_poch(Affine::of(1, 0), u23 + 1)
                .poch(fixed(-d13), m + n)
                .poch(Affine::of(-2, 1 - d23), m)
                .poch(Affine::of(2, 0), m + n)
                .over_poch(Affine::of(-2, 1 - d13), m)
                .over_poch(Affine::of(-1, 1 - d23), m)
                .over_poch(Affine::of(2, 0), n);
            let series = pfq_terms(
                &[fixed(-d12), Affine::of(1, 0), Affine::of(2, d23), Affine::of(-1, 1 + d23 - s)],
                &[Affine::of(1, 1 + d23), Affine::of(-1, 1 - d12), Affine::of(2, d23 - mi)],
            )?;
            Ok(series.iter().map(|t| outer.product(t)).collect())
        }
    }
}

/// The coefficients of `u^m v^n`, `m + n ≤ λ1 - λ3`.
pub fn representation_coefficients(
    lambda: &Partition,
    g: &CouplingG,
    which: Representation,
    mode: Evaluation,
) -> Result<BTreeMap<(usize, usize), Rational>> {
    let (l1, _, l3) = three_parts(lambda)?;
    let top = (l1 - l3) as usize;
    let hint = format!("use {} or the g-continuation", which.sibling().label());
    let mut out = BTreeMap::new();
    for total in 0..=top {
        for m in 0..=total {
            let n = total - m;
            let site = format!("{} coefficient (m, n) = ({m}, {n})", which.label());
            let v = sum_terms(representation_terms(lambda, which, m, n)?, g, mode, &site)
                .map_err(|e| e.with_hint(&hint))?;
            if !v.is_zero() {
                out.insert((m, n), v);
            }
        }
    }
    Ok(out)
}

/// Homogenizes `(x1 x2)^{λ3} x3^{λ1+λ2-λ3} Σ c_{mn} u^m v^n` with
/// `u = x1 x2 / x3^2`, `v = (1 - x1/x3)(1 - x2/x3)`.
///
/// The sum is first multiplied by `x3^{2(λ1-λ3)}` so every term is a
/// polynomial; that factor must then divide out exactly.
pub fn assemble_three_variable(
    lambda: &Partition,
    coeffs: &BTreeMap<(usize, usize), Rational>,
) -> Result<SymPoly> {
    let (l1, l2, l3) = three_parts(lambda)?;
    let clear = 2 * (l1 - l3) as usize;
    let base = (l1 + l2 - l3) as usize + clear;
    let x3 = Poly::var(3, 2);
    let w = &(&x3 - &Poly::var(3, 0)) * &(&x3 - &Poly::var(3, 1));
    let mut w_pows = vec![Poly::one(3)];
    let mut acc = Poly::zero(3);
    for (&(m, n), c) in coeffs {
        if 2 * (m + n) > clear {
            return Err(Error::InvalidIndex(format!(
                "(m, n) = ({m}, {n}) lies outside m + n <= {}",
                clear / 2
            )));
        }
        while w_pows.len() <= n {
            let next = w_pows.last().expect("non-empty") * &w;
            w_pows.push(next);
        }
        let k = l3 as usize + m;
        let shift = [k, k, base - 2 * (m + n)];
        acc = &acc + &w_pows[n].shift(&shift).scale(c);
    }
    let reduced = acc.divide_by_var_power(2, clear)?;
    if !reduced.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    SymPoly::from_poly(&reduced)
}

/// First double-sum representation, by substitution.
pub fn jack_a2_repr1(lambda: &Partition, g: &CouplingG) -> Result<SymPoly> {
    jack_a2_with(lambda, g, Representation::First, Evaluation::Exact)
}

/// Second double-sum representation, by substitution.
pub fn jack_a2_repr2(lambda: &Partition, g: &CouplingG) -> Result<SymPoly> {
    jack_a2_with(lambda, g, Representation::Second, Evaluation::Exact)
}

pub fn jack_a2_with(
    lambda: &Partition,
    g: &CouplingG,
    which: Representation,
    mode: Evaluation,
) -> Result<SymPoly> {
    let coeffs = match representation_coefficients(lambda, g, which, mode) {
        Err(e) if e.is_degenerate() && mode == Evaluation::Exact => {
            let sibling = which.sibling();
            let hint = match representation_coefficients(lambda, g, sibling, mode) {
                Ok(_) => format!("use {}", sibling.label()),
                Err(_) => format!("{} is degenerate too; use the g-continuation", sibling.label()),
            };
            return Err(e.with_hint(&hint));
        }
        other => other?,
    };
    assemble_three_variable(lambda, &coeffs)
}

/// One-row polynomial with `x3 = 1` in the `p_{mn}` basis, homogenized.
pub fn jack_one_row_pmn(r: usize, g: &CouplingG) -> Result<SymPoly> {
    let gv = g.value();
    let two_g = gv * int(2);
    let lower = int(1) - &two_g - from_usize(r);
    let front = pochhammer(&two_g, r) / pochhammer(gv, r);
    let mut coeffs = BTreeMap::new();
    for total in 0..=r {
        for m in 0..=total {
            let n = total - m;
            if let Some(k) = crate::algebra::pochhammer_zero_index(&lower, m) {
                return Err(Error::DegenerateLowerParameter {
                    parameter: lower,
                    index: k,
                    site: "one-row p_mn form".into(),
                    hint: None,
                });
            }
            let c = &front * pochhammer(&-from_usize(r), total) * pochhammer(gv, total)
                / (pochhammer(&lower, m) * pochhammer(&two_g, n) * factorial(m) * factorial(n));
            if !c.is_zero() {
                coeffs.insert((m, n), c);
            }
        }
    }
    assemble_three_variable(&Partition::new(vec![r, 0, 0])?, &coeffs)
}

/// One-row polynomial with `x3 = 1` on `(x1 + x2)^i (x1 x2)^j`, homogenized.
pub fn jack_one_row_e1e2(r: usize, g: &CouplingG) -> Result<SymPoly> {
    let gv = g.value();
    let s = &Poly::var(3, 0) + &Poly::var(3, 1);
    let p = Poly::monomial(vec![1, 1, 0], Rational::one());
    let mut acc = Poly::zero(3);
    for j in 0..=r / 2 {
        for i in 0..=(r - 2 * j) {
            let c = sign(i + j) / (factorial(i) * factorial(j))
                * pochhammer(&-from_usize(r), i + 2 * j)
                * pochhammer(gv, i + j)
                * pochhammer(gv, r - i - 2 * j)
                / pochhammer(gv, r);
            let term = (&s.pow(i) * &p.pow(j)).shift(&[0, 0, r - i - 2 * j]);
            acc = &acc + &term.scale(&c);
        }
    }
    SymPoly::from_poly(&acc)
}

/// One-row polynomial in three variables on `e1^i e2^j e3^k`.
pub fn jack_one_row_a2_elementary(r: usize, g: &CouplingG) -> Result<ElementaryExpansion> {
    let gv = g.value();
    let front = factorial(r) / pochhammer(gv, r) * sign(r);
    let mut out = ElementaryExpansion::new();
    for k in 0..=r / 3 {
        for j in 0..=(r - 3 * k) / 2 {
            let i = r - 3 * k - 2 * j;
            let c = &front * sign(i + j + k) * pochhammer(gv, i + j + k)
                / (factorial(i) * factorial(j) * factorial(k));
            let mut parts = vec![3; k];
            parts.extend(std::iter::repeat_n(2, j));
            parts.extend(std::iter::repeat_n(1, i));
            out.insert(Partition::new(parts)?, c);
        }
    }
    Ok(out)
}

/// One-row Jack polynomial in any number of variables on `e_μ`, `|μ| = r`.
pub fn jack_one_row_expansion(r: usize, nvars: usize, g: &CouplingG) -> ElementaryExpansion {
    let gv = g.value();
    let front = factorial(r) / pochhammer(gv, r);
    partitions_bounded(r, r.max(1), nvars)
        .into_iter()
        .map(|mu| {
            let len = mu.length();
            let mut den = Rational::one();
            for k in 1..=nvars {
                den *= factorial(mu.multiplicity(k));
            }
            let c = &front * pochhammer(gv, len) * sign(r - len) / den;
            (mu, c)
        })
        .collect()
}

pub fn jack_one_row(r: usize, nvars: usize, g: &CouplingG) -> SymPoly {
    elementary_to_monomial(&jack_one_row_expansion(r, nvars, g), nvars)
}

/// `(λ^{n-1}, 0)` in `n` variables on `e_μ`, `|μ| = (n-1) λ`, parts `≤ n`.
pub fn jack_rectangular_expansion(r: usize, nvars: usize, g: &CouplingG) -> Result<ElementaryExpansion> {
    if nvars < 2 {
        return Err(Error::VariableCount {
            expected: 2,
            found: nvars,
        });
    }
    let gv = g.value();
    let weight = (nvars - 1) * r;
    let front = factorial(r) / pochhammer(gv, r);
    let mut out = ElementaryExpansion::new();
    for mu in partitions_bounded(weight, weight.max(1), nvars) {
        let len = mu.length();
        if len > r {
            continue;
        }
        let top = mu.multiplicity(nvars);
        let mut den = factorial(r - len);
        for k in 1..nvars {
            den *= factorial(mu.multiplicity(k));
        }
        let c = &front * pochhammer(gv, r - top) * sign(top) / den;
        if !c.is_zero() {
            out.insert(mu, c);
        }
    }
    Ok(out)
}

pub fn jack_rectangular(r: usize, nvars: usize, g: &CouplingG) -> Result<SymPoly> {
    Ok(elementary_to_monomial(
        &jack_rectangular_expansion(r, nvars, g)?,
        nvars,
    ))
}

/// `(λ, λ, 0)` in three variables.
pub fn jack_two_row(r: usize, g: &CouplingG) -> Result<SymPoly> {
    jack_rectangular(r, 3, g)
}

/// Sets `x3 = 1` in a three-variable symmetric polynomial.
pub fn restrict_to_plane(p: &SymPoly) -> Result<SymPoly> {
    if p.nvars() != 3 {
        return Err(Error::VariableCount {
            expected: 3,
            found: p.nvars(),
        });
    }
    let mut out = Poly::zero(2);
    for (e, c) in p.to_poly().terms() {
        out.add_term(vec![e[0], e[1]], c.clone());
    }
    SymPoly::from_poly(&out)
}

/// Both sides of `Ŝ3 p_λ = c_λ b_λ^{-2} f_λ(x1) f_λ(x2)` in the `p_{mn}`
/// basis over `(x1 x2)^{λ3}`; `jack` is `P_λ` in three variables.
pub fn s3hat_factorization_sides(
    lambda: &Partition,
    jack: &SymPoly,
    g: &CouplingG,
) -> Result<(PmnExpansion, PmnExpansion)> {
    let plane = restrict_to_plane(jack)?;
    let lhs = s3hat_apply(&sympoly_to_pmn(&plane)?.relative_to(lambda.smallest())?, g, false);
    let b = b_lambda(lambda, g);
    let scale = c_lambda(lambda, g) / (&b * &b);
    let c = cmn_by_expansion(lambda, g)?;
    let rhs = PmnExpansion::new(c.entries, lambda.smallest()).scale(&scale);
    Ok((lhs, rhs))
}
