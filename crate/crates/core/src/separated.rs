//! Separated polynomials `f_λ(y)`: the product form
//! `y^{λ_n} (1-y)^{1-ng} nF_{n-1}(a; b; y)` and the finite nested-sum form,
//! together with the normalizations `b_λ = f_λ(1)` and `c_λ = P_λ(1,…,1)`.

use num_traits::{One, Zero};

use crate::algebra::{factorial, from_usize, int, pochhammer, CouplingG, Rational};
use crate::continuation::{sum_terms, Affine, Evaluation, Term};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::unipoly::UniPoly;

/// Extra coefficients beyond degree `λ_1` checked for vanishing in the product form.
pub const TRUNCATION_MARGIN: usize = 5;

fn require_parts(lambda: &Partition) -> Result<usize> {
    match lambda.len() {
        0 => Err(Error::VariableCount {
            expected: 1,
            found: 0,
        }),
        n => Ok(n),
    }
}

/// Upper parameters `a_i = λ_n - λ_i + 1 - (n-i+1) g` as affine functions of `g`.
fn upper_parameters(lambda: &Partition) -> Vec<Affine> {
    let n = lambda.len();
    let last = lambda.part(n - 1) as i64;
    (1..=n)
        .map(|i| Affine::of(-((n - i + 1) as i64), last - lambda.part(i - 1) as i64 + 1))
        .collect()
}

/// Lower parameters `b_j = a_j + g`, `j < n`.
fn lower_parameters(upper: &[Affine]) -> Vec<Affine> {
    upper[..upper.len() - 1]
        .iter()
        .map(|a| Affine::new(a.constant.clone(), &a.slope + int(1)))
        .collect()
}

/// Product form, evaluated by plain substitution.
pub fn f_lambda_product_form(lambda: &Partition, g: &CouplingG) -> Result<UniPoly> {
    f_lambda_product_form_with(lambda, g, Evaluation::Exact)
}

/// Product form under an explicit evaluation mode.
///
/// The binomial series of `(1-y)^{1-ng}` and the hypergeometric series are
/// multiplied through degree `λ_1 - λ_n + M`; every coefficient past
/// `λ_1 - λ_n` must vanish.
pub fn f_lambda_product_form_with(
    lambda: &Partition,
    g: &CouplingG,
    mode: Evaluation,
) -> Result<UniPoly> {
    let n = require_parts(lambda)?;
    let spread = lambda.largest() - lambda.smallest();
    let top = spread + TRUNCATION_MARGIN;
    let upper = upper_parameters(lambda);
    let lower = lower_parameters(&upper);
    let site = format!("product form of f{lambda}");

    // (1-y)^{1-ng} = Σ_k (ng-1)_k / k! y^k
    let binomial_exponent = Affine::of(n as i64, -1);
    let binomial = |k: usize| {
        Term::constant(Rational::one() / factorial(k)).poch(binomial_exponent.clone(), k)
    };
    let series = |k: usize| {
        let mut t = Term::constant(Rational::one() / factorial(k));
        for a in &upper {
            t = t.poch(a.clone(), k);
        }
        for b in &lower {
            t = t.over_poch(b.clone(), k);
        }
        t
    };

    if mode == Evaluation::Exact {
        let gv = g.value();
        for b in &lower {
            let value = b.at(gv);
            if let Some(k) = crate::algebra::pochhammer_zero_index(&value, top) {
                return Err(Error::DegenerateLowerParameter {
                    parameter: value,
                    index: k,
                    site: site.clone(),
                    hint: Some("use the nested-sum form or the g-continuation".into()),
                });
            }
        }
    }

    let mut coeffs = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let terms = (0..=k).map(|j| binomial(j).product(&series(k - j)));
        coeffs.push(sum_terms(terms, g, mode, &site)?);
    }
    for (degree, value) in coeffs.iter().enumerate().skip(spread + 1) {
        if !value.is_zero() {
            return Err(Error::TruncationFailure {
                degree: degree + lambda.smallest(),
                value: value.clone(),
            });
        }
    }
    coeffs.truncate(spread + 1);
    Ok(UniPoly::new(coeffs).shift(lambda.smallest()))
}

/// Nested-sum form, always well defined for `g > 0`.
pub fn f_lambda_sum_form(lambda: &Partition, g: &CouplingG) -> Result<UniPoly> {
    let n = require_parts(lambda)?;
    let gv = g.value();
    let diffs: Vec<usize> = (0..n - 1).map(|i| lambda.diff(i, i + 1)).collect();
    let total: usize = diffs.iter().sum();

    // Coefficient of (1-y)^s accumulated over all tuples with Σ k_i = s.
    let mut by_power = vec![Rational::zero(); total + 1];
    let mut ks = vec![0usize; n - 1];
    loop {
        let mut term = Rational::one();
        let mut cumulative = 0;
        for (i, (&k, &d)) in ks.iter().zip(&diffs).enumerate() {
            cumulative += k;
            let level = from_usize(i + 1);
            term *= pochhammer(&-from_usize(d), k) / factorial(k);
            term *= pochhammer(&(&level * gv), cumulative);
            term /= pochhammer(&((&level + int(1)) * gv), cumulative);
        }
        by_power[cumulative] += term;
        if !advance(&mut ks, &diffs) {
            break;
        }
    }

    let one_minus_y = UniPoly::new(vec![int(1), int(-1)]);
    let mut power = UniPoly::constant(int(1));
    let mut acc = UniPoly::zero();
    for c in &by_power {
        acc = &acc + &power.scale(c);
        power = &power * &one_minus_y;
    }
    Ok(acc.scale(&b_lambda(lambda, g)).shift(lambda.smallest()))
}

/// Odometer step over `0 ≤ ks[i] ≤ bounds[i]`; false once exhausted.
fn advance(ks: &mut [usize], bounds: &[usize]) -> bool {
    for (k, &b) in ks.iter_mut().zip(bounds) {
        if *k < b {
            *k += 1;
            return true;
        }
        *k = 0;
    }
    false
}

/// `b_λ = ∏_{i<n} ((n-i+1)g)_{λ_i - λ_n} / ((n-i)g)_{λ_i - λ_n}`.
pub fn b_lambda(lambda: &Partition, g: &CouplingG) -> Rational {
    let n = lambda.len();
    let gv = g.value();
    (1..n).fold(Rational::one(), |acc, i| {
        let d = lambda.diff(i - 1, n - 1);
        acc * pochhammer(&(from_usize(n - i + 1) * gv), d)
            / pochhammer(&(from_usize(n - i) * gv), d)
    })
}

/// `c_λ = ∏_{i<j} (g(j-i+1))_{λ_i - λ_j} / (g(j-i))_{λ_i - λ_j}`, the value of
/// the monic Jack polynomial at the all-ones point.
pub fn c_lambda(lambda: &Partition, g: &CouplingG) -> Rational {
    let n = lambda.len();
    let gv = g.value();
    let mut acc = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            let d = lambda.diff(i, j);
            acc *= pochhammer(&(from_usize(j - i + 1) * gv), d);
            acc /= pochhammer(&(from_usize(j - i) * gv), d);
        }
    }
    acc
}

/// `ξ_k` for `k = λ_n, …, λ_1`, read off the nested-sum form.
pub fn xi_coeffs(lambda: &Partition, g: &CouplingG) -> Result<Vec<Rational>> {
    let f = f_lambda_sum_form(lambda, g)?;
    Ok((lambda.smallest()..=lambda.largest())
        .map(|k| f.coeff(k))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{default_g_panel, rat};
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g(n: i64, d: i64) -> CouplingG {
        CouplingG::from_ratio(n, d).unwrap()
    }

    #[test]
    fn product_form_examples() {
        let f = f_lambda_product_form(&p(&[1, 0]), &g(5, 2)).unwrap();
        assert_eq!(f, UniPoly::new(vec![int(1), int(1)]));
        let f = f_lambda_product_form(&p(&[1, 0, 0]), &g(1, 3)).unwrap();
        assert_eq!(f, UniPoly::new(vec![int(1), rat(1, 2)]));
        let f = f_lambda_product_form(&p(&[2, 2, 2]), &g(2, 5)).unwrap();
        assert_eq!(f, UniPoly::monomial(2, int(1)));
    }

    #[test]
    fn sum_form_examples() {
        assert_eq!(
            f_lambda_sum_form(&p(&[0, 0]), &g(7, 3)).unwrap(),
            UniPoly::constant(int(1))
        );
        assert_eq!(
            f_lambda_sum_form(&p(&[1, 0, 0]), &g(1, 3)).unwrap(),
            UniPoly::new(vec![int(1), rat(1, 2)])
        );
        let l = p(&[1, 1, 0]);
        let f = f_lambda_sum_form(&l, &g(2, 5)).unwrap();
        assert_eq!(f.evaluate(&int(1)), b_lambda(&l, &g(2, 5)));
        assert_eq!(
            f_lambda_sum_form(&p(&[3]), &g(1, 1)).unwrap(),
            UniPoly::monomial(3, int(1))
        );
    }

    #[test]
    fn degenerate_product_form_is_reported_and_continued() {
        let l = p(&[1, 0, 0]);
        let one = g(1, 1);
        assert!(f_lambda_product_form(&l, &one).unwrap_err().is_degenerate());
        let f = f_lambda_product_form_with(&l, &one, Evaluation::Limit).unwrap();
        assert_eq!(f, f_lambda_sum_form(&l, &one).unwrap());
    }

    #[test]
    fn normalizations() {
        let any = g(7, 3);
        assert_eq!(b_lambda(&p(&[0, 0, 0]), &any), int(1));
        assert_eq!(b_lambda(&p(&[1, 0, 0]), &any), rat(3, 2));
        assert_eq!(b_lambda(&p(&[1, 0]), &any), int(2));
        assert_eq!(c_lambda(&p(&[1, 1, 0]), &any), int(3));
        assert_eq!(c_lambda(&p(&[1, 0, 0]), &any), int(3));
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi_coeffs(&p(&[2, 2, 2]), &g(1, 3)).unwrap(), vec![int(1)]);
        assert_eq!(
            xi_coeffs(&p(&[1, 0, 0]), &g(1, 3)).unwrap(),
            vec![int(1), rat(1, 2)]
        );
    }

    #[test]
    fn forms_agree_degree_order_and_shift() {
        for gg in default_g_panel() {
            for n in 2..=3 {
                for w in 0..=6 {
                    for l in partitions_of(w, n) {
                        if l.largest() > 4 {
                            continue;
                        }
                        let sum = f_lambda_sum_form(&l, &gg).unwrap();
                        let prod = f_lambda_product_form(&l, &gg)
                            .or_else(|_| f_lambda_product_form_with(&l, &gg, Evaluation::Limit))
                            .unwrap();
                        assert_eq!(sum, prod, "{l} at g = {gg}");
                        assert_eq!(sum.evaluate(&int(1)), b_lambda(&l, &gg));
                        assert_eq!(sum.degree(), Some(l.largest()));
                        assert_eq!(sum.order(), Some(l.smallest()));
                        let shifted = f_lambda_sum_form(&l.shifted(2), &gg).unwrap();
                        assert_eq!(shifted, sum.shift(2));
                    }
                }
            }
        }
    }
}
