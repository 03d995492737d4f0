//! Jack polynomials in two variables in four equivalent forms.

use num_traits::{One, Zero};

use crate::algebra::{binomial, factorial, from_usize, int, pochhammer, sign, CouplingG, Rational};
use crate::error::{Error, Result};
use crate::hypergeom::{appell_f4_terminating, gegenbauer, pfq_polynomial};
use crate::partition::Partition;
use crate::poly::Poly;
use crate::sympoly::{
    elementary_to_monomial, pmn_to_sympoly, sympoly_to_pmn, ElementaryExpansion, PmnExpansion, SymPoly,
};

use super::operators::s2_apply;
use crate::unipoly::UniPoly;

fn two_parts(lambda: &Partition) -> Result<(usize, usize)> {
    if lambda.len() != 2 {
        return Err(Error::VariableCount {
            expected: 2,
            found: lambda.len(),
        });
    }
    Ok((lambda.part(0), lambda.part(1)))
}

/// `f_λ(x) = x^{λ2} 2F1(-λ12, g; 1-λ12-g; x)`.
pub fn f_lambda_a1(lambda: &Partition, g: &CouplingG) -> Result<UniPoly> {
    let (l1, l2) = two_parts(lambda)?;
    let d = from_usize(l1 - l2);
    let gv = g.value();
    let series = pfq_polynomial(&[-&d, gv.clone()], &[int(1) - &d - gv])
        .map_err(|e| e.at_site("two-variable separated polynomial", None))?;
    Ok(series.shift(l2))
}

/// `x2^{|λ|} f_λ(x1/x2)`.
pub fn jack_a1_standard(lambda: &Partition, g: &CouplingG) -> Result<SymPoly> {
    let f = f_lambda_a1(lambda, g)?;
    let total = lambda.weight();
    let mut p = Poly::zero(2);
    for (k, c) in f.coeffs().iter().enumerate() {
        p.add_term(vec![k, total - k], c.clone());
    }
    SymPoly::from_poly(&p)
}

/// The `p_{mn}` coefficients `(-λ12)_{m+n} (g)_{m+n} / ((1-λ12-g)_m (g)_n m! n!)`
/// over the prefactor `(x1 x2)^{λ2}`.
pub fn jack_a1_pmn_expansion(lambda: &Partition, g: &CouplingG) -> Result<PmnExpansion> {
    let (l1, l2) = two_parts(lambda)?;
    let d = from_usize(l1 - l2);
    let gv = g.value();
    let table = appell_f4_terminating(&-&d, gv, &(int(1) - &d - gv), gv, l1 - l2)
        .map_err(|e| e.at_site("two-variable p_mn expansion", None))?;
    Ok(PmnExpansion::new(table, l2))
}

pub fn jack_a1_pmn(lambda: &Partition, g: &CouplingG) -> Result<SymPoly> {
    Ok(pmn_to_sympoly(&jack_a1_pmn_expansion(lambda, g)?))
}

/// Expansion on `e1^i e2^j` products.
pub fn jack_a1_elementary_expansion(
    lambda: &Partition,
    g: &CouplingG,
) -> Result<ElementaryExpansion> {
    let (l1, l2) = two_parts(lambda)?;
    let d = l1 - l2;
    let gv = g.value();
    let front = sign(d) * factorial(d) / pochhammer(gv, d);
    let mut out = ElementaryExpansion::new();
    for j in 0..=d / 2 {
        let i = d - 2 * j;
        let c = &front * pochhammer(gv, i + j) * sign(i + j) / (factorial(i) * factorial(j));
        let mut parts = vec![2; j + l2];
        parts.extend(std::iter::repeat_n(1, i));
        out.insert(Partition::new(parts)?, c);
    }
    Ok(out)
}

pub fn jack_a1_elementary(lambda: &Partition, g: &CouplingG) -> Result<SymPoly> {
    Ok(elementary_to_monomial(
        &jack_a1_elementary_expansion(lambda, g)?,
        2,
    ))
}

/// `(x1 x2)^{|λ|/2} λ12! / (g)_{λ12} · C_{λ12}^g(z)` with
/// `z = (t + 1/t) / 2`, `t = (x1/x2)^{1/2}`.
///
/// `C_N` has the parity of `N`, so after expanding `z^k` every exponent is
/// an integer.
pub fn jack_a1_gegenbauer(lambda: &Partition, g: &CouplingG) -> Result<SymPoly> {
    let (l1, l2) = two_parts(lambda)?;
    let d = l1 - l2;
    let c = gegenbauer(d, g);
    let front = factorial(d) / pochhammer(g.value(), d);
    let mut p = Poly::zero(2);
    for (k, ck) in c.coeffs().iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        // Odd/even parity: only k ≡ d (mod 2) survive.
        let base = l2 + (d - k) / 2;
        let mut two_pow = Rational::one();
        for _ in 0..k {
            two_pow *= int(2);
        }
        for j in 0..=k {
            let coef = &front * ck * binomial(k, j)? / &two_pow;
            p.add_term(vec![base + j, base + k - j], coef);
        }
    }
    SymPoly::from_poly(&p)
}

/// Both sides of Watson's product formula for `2F1(-n, b; c; x)` as
/// polynomials in two variables.
pub fn watson_sides(n: usize, b: &Rational, c: &Rational) -> Result<(SymPoly, SymPoly)> {
    let minus_n = -from_usize(n);
    let f = pfq_polynomial(&[minus_n.clone(), b.clone()], std::slice::from_ref(c))?;
    let mut p1 = Poly::zero(2);
    let mut p2 = Poly::zero(2);
    for (k, v) in f.coeffs().iter().enumerate() {
        p1.add_term(vec![k, 0], v.clone());
        p2.add_term(vec![0, k], v.clone());
    }
    let lhs = SymPoly::from_poly(&(&p1 * &p2))?;
    let d = int(1) - from_usize(n) + b - c;
    let table = appell_f4_terminating(&minus_n, b, c, &d, n)?;
    let front = pochhammer(&(c - b), n) / pochhammer(c, n);
    let rhs = pmn_to_sympoly(&PmnExpansion::new(table, 0).scale(&front));
    Ok((lhs, rhs))
}

/// Both sides of `S2 P_λ = (g)_{λ12} / (2g)_{λ12} f_λ(x1) f_λ(x2)` in the
/// `p_{mn}` basis over `(x1 x2)^{λ2}`.
pub fn s2_factorization_sides(
    lambda: &Partition,
    g: &CouplingG,
) -> Result<(PmnExpansion, PmnExpansion)> {
    let (l1, l2) = two_parts(lambda)?;
    let lhs = s2_apply(&jack_a1_pmn_expansion(lambda, g)?, g, false);
    let f = f_lambda_a1(lambda, g)?;
    let mut p1 = Poly::zero(2);
    let mut p2 = Poly::zero(2);
    for (k, v) in f.coeffs().iter().enumerate() {
        p1.add_term(vec![k, 0], v.clone());
        p2.add_term(vec![0, k], v.clone());
    }
    let product = SymPoly::from_poly(&(&p1 * &p2))?;
    let gv = g.value();
    let front = pochhammer(gv, l1 - l2) / pochhammer(&(gv * int(2)), l1 - l2);
    let rhs = sympoly_to_pmn(&product)?.relative_to(l2)?.scale(&front);
    Ok((lhs, rhs))
}
