//! Jack polynomials computed directly as eigenfunctions of the Sutherland
//! operator
//! `H_g = Σ (x_i ∂_i)^2 + g Σ_{i<j} (x_i + x_j)/(x_i - x_j) (x_i ∂_i - x_j ∂_j)`,
//! with none of the separation-of-variables machinery. Used as the
//! reference the other constructions are checked against.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{from_usize, CouplingG, Rational};
use crate::error::{Error, Result};
use crate::partition::{dominance_leq, partitions_of, Partition};
use crate::poly::Poly;
use crate::sympoly::SymPoly;

/// `H_g` applied to a symmetric polynomial.
pub fn apply_hg(p: &SymPoly, g: &CouplingG) -> SymPoly {
    let n = p.nvars();
    let gv = g.value();
    let mut out = Poly::zero(n);
    for (a, c) in p.to_poly().terms() {
        let euler: usize = a.iter().map(|&k| k * k).sum();
        out.add_term(a.clone(), c * from_usize(euler));
        // For i < j each pair {x^a, x^a with a_i, a_j swapped} is handled
        // once, from the member with a_i > a_j.
        for i in 0..n {
            for j in i + 1..n {
                let (hi, lo) = (a[i], a[j]);
                if hi <= lo {
                    continue;
                }
                let d = hi - lo;
                let weight = c * gv * from_usize(d);
                let mut e = a.clone();
                for k in 0..d {
                    e[i] = lo + d - k;
                    e[j] = lo + k;
                    out.add_term(e.clone(), weight.clone());
                    e[i] = lo + d - 1 - k;
                    e[j] = lo + k + 1;
                    out.add_term(e.clone(), weight.clone());
                }
            }
        }
    }
    SymPoly::from_poly(&out).expect("H_g preserves symmetry")
}

/// `E_g(λ) = Σ λ_i [λ_i + g (n + 1 - 2i)]`.
pub fn eigenvalue(lambda: &Partition, g: &CouplingG, nvars: usize) -> Result<Rational> {
    if lambda.length() > nvars {
        return Err(Error::VariableCount {
            expected: nvars,
            found: lambda.length(),
        });
    }
    let gv = g.value();
    let mut total = Rational::zero();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let i = idx as i64 + 1;
        let l = from_usize(part);
        let shift = Rational::from_integer((nvars as i64 + 1 - 2 * i).into());
        total += &l * (&l + gv * shift);
    }
    Ok(total)
}

/// Matrix of `H_g` on `{m_μ : |μ| = degree, l(μ) ≤ nvars}`; column `λ`
/// holds the expansion of `H_g m_λ`.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    pub degree: usize,
    pub nvars: usize,
    pub g: CouplingG,
    /// Basis partitions in decreasing lexicographic order.
    pub basis: Vec<Partition>,
    columns: BTreeMap<Partition, SymPoly>,
}

impl OperatorMatrix {
    pub fn new(degree: usize, nvars: usize, g: &CouplingG) -> Self {
        let basis = partitions_of(degree, nvars);
        let columns = basis
            .iter()
            .map(|mu| {
                let m = SymPoly::monomial(mu, nvars).expect("fits");
                (mu.clone(), apply_hg(&m, g))
            })
            .collect();
        OperatorMatrix {
            degree,
            nvars,
            g: g.clone(),
            basis,
            columns,
        }
    }

    /// Entry at row `mu`, column `lambda`.
    pub fn entry(&self, mu: &Partition, lambda: &Partition) -> Rational {
        self.columns
            .get(lambda)
            .map_or_else(Rational::zero, |col| col.coeff(mu))
    }

    pub fn column(&self, lambda: &Partition) -> Option<&SymPoly> {
        self.columns.get(lambda)
    }

    /// Every nonzero entry `(μ, λ)` has `μ ⪯ λ`.
    pub fn is_triangular(&self) -> bool {
        self.columns.iter().all(|(lambda, col)| {
            col.terms()
                .keys()
                .all(|mu| dominance_leq(mu, lambda).unwrap_or(false))
        })
    }

    /// Diagonal entries equal the eigenvalues.
    pub fn diagonal_matches_eigenvalues(&self) -> bool {
        self.basis.iter().all(|l| {
            eigenvalue(l, &self.g, self.nvars).is_ok_and(|e| self.entry(l, l) == e)
        })
    }
}

pub fn operator_matrix(degree: usize, nvars: usize, g: &CouplingG) -> OperatorMatrix {
    OperatorMatrix::new(degree, nvars, g)
}

/// Monic Jack polynomial `m_λ + Σ_{μ ≺ λ} u_μ m_μ` by back-substitution.
pub fn jack_oracle(lambda: &Partition, g: &CouplingG, nvars: usize) -> Result<SymPoly> {
    let lambda = lambda.padded(nvars)?;
    let matrix = OperatorMatrix::new(lambda.weight(), nvars, g);
    jack_from_matrix(&lambda, &matrix)
}

/// As [`jack_oracle`], reusing a prebuilt operator matrix of matching degree.
pub fn jack_from_matrix(lambda: &Partition, matrix: &OperatorMatrix) -> Result<SymPoly> {
    let nvars = matrix.nvars;
    let lambda = lambda.padded(nvars)?;
    if lambda.weight() != matrix.degree {
        return Err(Error::WeightMismatch {
            left: lambda.parts().to_vec(),
            right: vec![matrix.degree],
        });
    }
    let g = &matrix.g;
    let target = eigenvalue(&lambda, g, nvars)?;
    let mut result = SymPoly::monomial(&lambda, nvars)?;
    let mut image = matrix.column(&lambda).cloned().unwrap_or_else(|| SymPoly::zero(nvars));
    // Decreasing lex order extends dominance, so when μ is reached every
    // column that can feed row μ has already been added to `image`.
    for mu in matrix.basis.iter().filter(|mu| **mu < lambda) {
        if !dominance_leq(mu, &lambda)? {
            continue;
        }
        let gap = &target - eigenvalue(mu, g, nvars)?;
        if gap.is_zero() {
            return Err(Error::EigenvalueCollision {
                lambda: lambda.parts().to_vec(),
                mu: mu.parts().to_vec(),
                g: g.value().clone(),
            });
        }
        let u = image.coeff(mu) / gap;
        if u.is_zero() {
            continue;
        }
        if let Some(col) = matrix.column(mu) {
            image = image.add(&col.scale(&u));
        }
        result.add_term(mu.clone(), u);
    }
    Ok(result)
}

type Laurent = BTreeMap<Vec<i64>, Rational>;

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert_with(Rational::zero);
            *slot += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `∏_{i≠j} (1 - x_i/x_j)^g` as a Laurent polynomial.
fn vandermonde_weight(nvars: usize, g: usize) -> Laurent {
    let mut acc = Laurent::from([(vec![0; nvars], Rational::from_integer(1.into()))]);
    for i in 0..nvars {
        for j in 0..nvars {
            if i == j {
                continue;
            }
            let mut ratio = vec![0; nvars];
            ratio[i] = 1;
            ratio[j] = -1;
            let factor = Laurent::from([
                (vec![0; nvars], Rational::from_integer(1.into())),
                (ratio, Rational::from_integer((-1).into())),
            ]);
            for _ in 0..g {
                acc = laurent_mul(&acc, &factor);
            }
        }
    }
    acc
}

/// Constant term of `p(1/x) q(x) ∏_{i≠j} (1 - x_i/x_j)^g`; `g` must be a
/// positive integer.
pub fn constant_term_inner(p: &SymPoly, q: &SymPoly, g: &CouplingG, nvars: usize) -> Result<Rational> {
    let k = g.as_integer().ok_or_else(|| Error::NonIntegerCoupling(g.value().clone()))?;
    for poly in [p, q] {
        if poly.nvars() != nvars {
            return Err(Error::VariableCount {
                expected: nvars,
                found: poly.nvars(),
            });
        }
    }
    let weight = vandermonde_weight(nvars, k);
    let (pp, qq) = (p.to_poly(), q.to_poly());
    let mut total = Rational::zero();
    for (a, ca) in pp.terms() {
        for (b, cb) in qq.terms() {
            // p(1/x) contributes x^{-a}, q contributes x^b; need x^{a-b} from the weight.
            let e: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| x as i64 - y as i64).collect();
            if let Some(w) = weight.get(&e) {
                total += ca * cb * w;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::separated::c_lambda;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g(n: i64, d: i64) -> CouplingG {
        CouplingG::from_ratio(n, d).unwrap()
    }

    fn m(parts: &[usize], n: usize) -> SymPoly {
        SymPoly::monomial(&p(parts), n).unwrap()
    }

    #[test]
    fn hg_examples() {
        let gg = g(2, 5);
        assert_eq!(apply_hg(&m(&[1, 1], 2), &gg), m(&[1, 1], 2).scale(&int(2)));
        let gv = gg.value().clone();
        let expected = m(&[2, 0], 2)
            .scale(&(int(4) + int(2) * &gv))
            .add(&m(&[1, 1], 2).scale(&(int(4) * &gv)));
        assert_eq!(apply_hg(&m(&[2, 0], 2), &gg), expected);
        assert!(apply_hg(&SymPoly::one(3), &gg).is_zero());
    }

    /// The interaction term on a pair, checked by exact division.
    #[test]
    fn pair_formula_by_division() {
        let gg = g(1, 1);
        for a in 0..6usize {
            for b in 0..a {
                let q = &Poly::monomial(vec![a, b], int(1)) + &Poly::monomial(vec![b, a], int(1));
                let sym = SymPoly::from_poly(&q).unwrap();
                let interaction = apply_hg(&sym, &gg).sub(&sym.scale(&from_usize(a * a + b * b)));
                // (x1 - x2) * image must equal (x1 + x2)(x1∂1 - x2∂2) q.
                let lhs = &(&Poly::var(2, 0) - &Poly::var(2, 1)) * &interaction.to_poly();
                let d = from_usize(a) - from_usize(b);
                let euler_diff = &Poly::monomial(vec![a, b], d.clone()) - &Poly::monomial(vec![b, a], d);
                let rhs = &(&Poly::var(2, 0) + &Poly::var(2, 1)) * &euler_diff;
                assert_eq!(lhs, rhs, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn eigenvalue_examples() {
        let gg = g(7, 3);
        let gv = gg.value().clone();
        assert_eq!(eigenvalue(&p(&[0, 0, 0]), &gg, 3).unwrap(), int(0));
        assert_eq!(eigenvalue(&p(&[1, 0, 0]), &gg, 3).unwrap(), int(1) + int(2) * &gv);
        assert_eq!(eigenvalue(&p(&[2, 0]), &gg, 2).unwrap(), int(2) * (int(2) + &gv));
    }

    #[test]
    fn oracle_examples() {
        let gg = g(2, 5);
        assert_eq!(jack_oracle(&p(&[1, 0, 0]), &gg, 3).unwrap(), m(&[1], 3));
        let gv = gg.value().clone();
        let expected = m(&[2], 2).add(&m(&[1, 1], 2).scale(&(int(2) * &gv / (&gv + int(1)))));
        assert_eq!(jack_oracle(&p(&[2, 0]), &gg, 2).unwrap(), expected);
        let schur = m(&[2, 1], 3).add(&m(&[1, 1, 1], 3).scale(&int(2)));
        assert_eq!(jack_oracle(&p(&[2, 1, 0]), &g(1, 1), 3).unwrap(), schur);
    }

    #[test]
    fn inner_product_examples() {
        let one = g(1, 1);
        assert_eq!(
            constant_term_inner(&SymPoly::one(2), &SymPoly::one(2), &one, 2).unwrap(),
            int(2)
        );
        let p10 = jack_oracle(&p(&[1, 0]), &one, 2).unwrap();
        let p20 = jack_oracle(&p(&[2, 0]), &one, 2).unwrap();
        let p11 = jack_oracle(&p(&[1, 1]), &one, 2).unwrap();
        assert_eq!(constant_term_inner(&p10, &p20, &one, 2).unwrap(), int(0));
        assert_eq!(constant_term_inner(&p20, &p11, &one, 2).unwrap(), int(0));
        assert!(constant_term_inner(&p20, &p11, &g(1, 2), 2).is_err());
    }

    #[test]
    fn physics_checks_small() {
        for gg in [g(1, 3), g(3, 2)] {
            for w in 0..=5 {
                let matrix = operator_matrix(w, 3, &gg);
                assert!(matrix.is_triangular());
                assert!(matrix.diagonal_matches_eigenvalues());
                for l in &matrix.basis {
                    let jack = jack_from_matrix(l, &matrix).unwrap();
                    let e = eigenvalue(l, &gg, 3).unwrap();
                    assert_eq!(apply_hg(&jack, &gg), jack.scale(&e));
                    assert_eq!(jack.degrees(), vec![w]);
                    let ones = vec![int(1); 3];
                    assert_eq!(jack.evaluate(&ones).unwrap(), c_lambda(l, &gg));
                }
            }
        }
    }

    #[test]
    fn orthogonality_at_integer_coupling() {
        for k in 1..=2 {
            let gg = g(k, 1);
            for n in 2..=3 {
                for w in 0..=3 {
                    let ps: Vec<SymPoly> = partitions_of(w, n)
                        .iter()
                        .map(|l| jack_oracle(l, &gg, n).unwrap())
                        .collect();
                    for (i, a) in ps.iter().enumerate() {
                        for b in &ps[i + 1..] {
                            assert_eq!(constant_term_inner(a, b, &gg, n).unwrap(), int(0));
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn shift_multiplies_by_full_monomial(
            a in 0usize..4, b in 0usize..3, s in 0usize..=2, num in 1i64..8, den in 1i64..6
        ) {
            let gg = CouplingG::new(rat(num, den)).unwrap();
            let l = Partition::from_unsorted(vec![a + b, b, 0]);
            let base = jack_oracle(&l, &gg, 3).unwrap();
            let shifted = jack_oracle(&l.shifted(s), &gg, 3).unwrap();
            prop_assert_eq!(shifted, base.times_full_monomial(s));
        }
    }
}
