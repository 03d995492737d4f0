//! Terminating generalized hypergeometric series and the classical
//! polynomials built from them.

use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::{
    as_nonpositive_integer, format_rational, from_usize, int, pochhammer, pochhammer_zero_index,
    CouplingG, Rational,
};
use crate::error::{Error, Result};
use crate::unipoly::UniPoly;

/// `pFq(upper; lower; argument)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeomSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub argument: Rational,
}

impl HypergeomSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Self {
        HypergeomSpec {
            upper,
            lower,
            argument,
        }
    }

    /// Smallest `N` such that some upper parameter equals `-N`.
    pub fn termination_bound(&self) -> Result<usize> {
        self.upper
            .iter()
            .filter_map(as_nonpositive_integer)
            .min()
            .ok_or(Error::NonTerminating)
    }

    fn check_lower(&self, bound: usize) -> Result<()> {
        for b in &self.lower {
            if let Some(k) = pochhammer_zero_index(b, bound) {
                return Err(Error::DegenerateLowerParameter {
                    parameter: b.clone(),
                    index: k,
                    site: String::new(),
                    hint: None,
                });
            }
        }
        Ok(())
    }
}

/// Sums a terminating series exactly.
pub fn pfq_terminating(spec: &HypergeomSpec) -> Result<Rational> {
    let bound = spec.termination_bound()?;
    spec.check_lower(bound)?;
    let mut term = Rational::one();
    let mut total = Rational::one();
    for k in 0..bound {
        let kk = from_usize(k);
        for a in &spec.upper {
            term *= a + &kk;
        }
        for b in &spec.lower {
            term /= b + &kk;
        }
        term *= &spec.argument;
        term /= from_usize(k + 1);
        total += &term;
    }
    Ok(total)
}

/// The terminating series as a polynomial in its argument.
pub fn pfq_polynomial(upper: &[Rational], lower: &[Rational]) -> Result<UniPoly> {
    let spec = HypergeomSpec::new(upper.to_vec(), lower.to_vec(), Rational::one());
    let bound = spec.termination_bound()?;
    spec.check_lower(bound)?;
    let mut coeffs = Vec::with_capacity(bound + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for k in 0..bound {
        let kk = from_usize(k);
        for a in upper {
            term *= a + &kk;
        }
        for b in lower {
            term /= b + &kk;
        }
        term /= from_usize(k + 1);
        coeffs.push(term.clone());
    }
    Ok(UniPoly::new(coeffs))
}

/// Closed form of the balanced series `3F2(a, b, -n; c, 1+a+b-c-n; 1)`.
pub fn saalschutz_3f2(a: &Rational, b: &Rational, n: usize, c: &Rational) -> Result<Rational> {
    let cab = c - a - b;
    for lower in [c, &cab] {
        if let Some(k) = pochhammer_zero_index(lower, n) {
            return Err(Error::DegenerateLowerParameter {
                parameter: lower.clone(),
                index: k,
                site: "Saalschutz denominator".into(),
                hint: None,
            });
        }
    }
    Ok(pochhammer(&(c - a), n) * pochhammer(&(c - b), n) / (pochhammer(c, n) * pochhammer(&cab, n)))
}

/// Coefficients `(a)_{m+n} (b)_{m+n} / ((c)_m (d)_n m! n!)` of Appell's `F4`
/// for `a = -N`, over `0 ≤ m+n ≤ N`.
pub fn appell_f4_terminating(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    order: usize,
) -> Result<BTreeMap<(usize, usize), Rational>> {
    if as_nonpositive_integer(a) != Some(order) {
        return Err(Error::NonTerminating);
    }
    for lower in [c, d] {
        if let Some(k) = pochhammer_zero_index(lower, order) {
            return Err(Error::DegenerateLowerParameter {
                parameter: lower.clone(),
                index: k,
                site: format!("Appell F4 lower parameter {}", format_rational(lower)),
                hint: None,
            });
        }
    }
    let mut out = BTreeMap::new();
    for total in 0..=order {
        let top = pochhammer(a, total) * pochhammer(b, total);
        for m in 0..=total {
            let n = total - m;
            let den = pochhammer(c, m)
                * pochhammer(d, n)
                * crate::algebra::factorial(m)
                * crate::algebra::factorial(n);
            out.insert((m, n), &top / den);
        }
    }
    Ok(out)
}

/// Gegenbauer polynomial `C_n^g(x)` from the three-term recurrence.
pub fn gegenbauer(n: usize, g: &CouplingG) -> UniPoly {
    let g = g.value();
    let mut prev = UniPoly::constant(Rational::one());
    if n == 0 {
        return prev;
    }
    let two_x = UniPoly::monomial(1, int(2));
    let mut cur = two_x.scale(g);
    for k in 2..=n {
        let kk = from_usize(k);
        let a = &kk + g - int(1);
        let b = &kk + g * int(2) - int(2);
        let next = (&(&two_x * &cur).scale(&a) - &prev.scale(&b)).scale(&(Rational::one() / &kk));
        prev = cur;
        cur = next;
    }
    cur
}
