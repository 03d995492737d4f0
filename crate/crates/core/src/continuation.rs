//! Continuation in `g` for coefficient formulas whose individual terms are
//! singular at special couplings.
//!
//! A summand is a product of Pochhammer symbols whose bases are affine in
//! `g`. At a special `g0` some factors vanish; writing `g = g0 + ε`, every
//! summand becomes a Laurent series in `ε`. The value of the whole sum at
//! `g0` is its `ε^0` coefficient, provided all negative orders cancel.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{from_usize, pochhammer, pochhammer_zero_index, CouplingG, Rational};
use crate::error::{Error, Result};

/// How a coefficient formula is evaluated at the requested coupling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Evaluation {
    /// Plain substitution; a vanishing lower Pochhammer is an error.
    #[default]
    Exact,
    /// Value of the formula's continuation in `g` at the requested coupling.
    Limit,
}

/// `constant + slope · g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub constant: Rational,
    pub slope: Rational,
}

impl Affine {
    pub fn new(constant: Rational, slope: Rational) -> Self {
        Affine { constant, slope }
    }

    /// A `g`-independent value.
    pub fn fixed(constant: Rational) -> Self {
        Affine::new(constant, Rational::zero())
    }

    /// `slope · g + constant` with integer data, the common case.
    pub fn of(slope: i64, constant: i64) -> Self {
        Affine::new(crate::algebra::int(constant), crate::algebra::int(slope))
    }

    pub fn at(&self, g: &Rational) -> Rational {
        &self.constant + &self.slope * g
    }

    pub fn plus(&self, k: i64) -> Affine {
        Affine::new(&self.constant + crate::algebra::int(k), self.slope.clone())
    }

    pub fn is_fixed(&self) -> bool {
        self.slope.is_zero()
    }
}

/// A coefficient times a ratio of Pochhammer symbols with affine bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    coeff: Rational,
    num: Vec<(Affine, usize)>,
    den: Vec<(Affine, usize)>,
}

impl Term {
    pub fn constant(coeff: Rational) -> Self {
        Term {
            coeff,
            num: Vec::new(),
            den: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Term::constant(Rational::one())
    }

    pub fn times(mut self, c: &Rational) -> Self {
        self.coeff *= c;
        self
    }

    /// Multiplies by `(a)_n`.
    pub fn poch(mut self, a: Affine, n: usize) -> Self {
        if n > 0 {
            self.num.push((a, n));
        }
        self
    }

    /// Divides by `(a)_n`.
    pub fn over_poch(mut self, a: Affine, n: usize) -> Self {
        if n > 0 {
            self.den.push((a, n));
        }
        self
    }

    pub fn product(&self, other: &Term) -> Term {
        let mut out = self.clone();
        out.coeff *= &other.coeff;
        out.num.extend(other.num.iter().cloned());
        out.den.extend(other.den.iter().cloned());
        out
    }

    /// Substitutes `g`; a vanishing denominator is reported as degenerate.
    pub fn eval(&self, g: &Rational) -> Result<Rational> {
        let mut den = Rational::one();
        for (a, n) in &self.den {
            let base = a.at(g);
            if let Some(k) = pochhammer_zero_index(&base, *n) {
                return Err(Error::DegenerateLowerParameter {
                    parameter: base,
                    index: k,
                    site: String::new(),
                    hint: None,
                });
            }
            den *= pochhammer(&base, *n);
        }
        let mut value = self.coeff.clone() / den;
        for (a, n) in &self.num {
            if value.is_zero() {
                break;
            }
            value *= pochhammer(&a.at(g), *n);
        }
        Ok(value)
    }

    /// Laurent expansion around `g0` through order `ε^0`.
    ///
    /// Returns `None` when the term is identically zero or vanishes at `g0`.
    pub fn expand(&self, g0: &Rational) -> Result<Option<Laurent>> {
        if self.coeff.is_zero() {
            return Ok(None);
        }
        // Split every Pochhammer into linear factors c + s·ε.
        let mut regular_num = Vec::new();
        let mut regular_den = Vec::new();
        let mut lead = self.coeff.clone();
        let mut valuation: i32 = 0;
        for (is_num, list) in [(true, &self.num), (false, &self.den)] {
            for (a, n) in list {
                let c0 = a.at(g0);
                for j in 0..*n {
                    let c = &c0 + from_usize(j);
                    if !c.is_zero() {
                        if is_num {
                            regular_num.push((c, a.slope.clone()));
                        } else {
                            regular_den.push((c, a.slope.clone()));
                        }
                    } else if a.slope.is_zero() {
                        if is_num {
                            return Ok(None);
                        }
                        return Err(Error::DegenerateLowerParameter {
                            parameter: c0,
                            index: j + 1,
                            site: "g-independent denominator".into(),
                            hint: None,
                        });
                    } else if is_num {
                        valuation += 1;
                        lead *= &a.slope;
                    } else {
                        valuation -= 1;
                        lead /= &a.slope;
                    }
                }
            }
        }
        if valuation > 0 {
            return Ok(None);
        }
        let len = (-valuation) as usize + 1;
        let mut series = vec![Rational::zero(); len];
        series[0] = lead;
        for (c, s) in &regular_num {
            for i in (0..len).rev() {
                let mut v = &series[i] * c;
                if i > 0 {
                    v += &series[i - 1] * s;
                }
                series[i] = v;
            }
        }
        for (c, s) in &regular_den {
            for i in 0..len {
                let mut v = series[i].clone();
                if i > 0 {
                    v -= s * &series[i - 1];
                }
                series[i] = v / c;
            }
        }
        let mut out = Laurent::default();
        for (i, v) in series.into_iter().enumerate() {
            out.add_at(valuation + i as i32, v);
        }
        Ok(Some(out))
    }
}

/// Truncated Laurent series in `ε`, orders `≤ 0` only.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent {
    coeffs: BTreeMap<i32, Rational>,
}

impl Laurent {
    fn add_at(&mut self, order: i32, v: Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(order).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.coeffs.remove(&order);
        }
    }

    pub fn add(&mut self, other: &Laurent) {
        for (k, v) in &other.coeffs {
            self.add_at(*k, v.clone());
        }
    }

    /// The `ε^0` coefficient, after checking that no pole survives.
    pub fn regular_value(&self, g0: &Rational, site: &str) -> Result<Rational> {
        if let Some((&order, _)) = self.coeffs.iter().find(|(&k, _)| k < 0) {
            return Err(Error::PoleSurvives {
                order: -order,
                g: g0.clone(),
                site: site.to_string(),
            });
        }
        Ok(self.coeffs.get(&0).cloned().unwrap_or_else(Rational::zero))
    }
}

/// Sums `terms` at `g` under the chosen evaluation mode.
pub fn sum_terms<I>(terms: I, g: &CouplingG, mode: Evaluation, site: &str) -> Result<Rational>
where
    I: IntoIterator<Item = Term>,
{
    let g = g.value();
    match mode {
        Evaluation::Exact => {
            let mut total = Rational::zero();
            for t in terms {
                total += t.eval(g).map_err(|e| e.at_site(site, None))?;
            }
            Ok(total)
        }
        Evaluation::Limit => {
            let mut acc = Laurent::default();
            for t in terms {
                if let Some(l) = t.expand(g).map_err(|e| e.at_site(site, None))? {
                    acc.add(&l);
                }
            }
            acc.regular_value(g, site)
        }
    }
}

/// Summands of a terminating `pFq(upper; lower; 1)` with affine parameters.
///
/// The truncation order is fixed by the `g`-independent non-positive
/// integer upper parameters, so it does not move with `g`.
pub fn pfq_terms(upper: &[Affine], lower: &[Affine]) -> Result<Vec<Term>> {
    let bound = upper
        .iter()
        .filter(|a| a.is_fixed())
        .filter_map(|a| crate::algebra::as_nonpositive_integer(&a.constant))
        .min()
        .ok_or(Error::NonTerminating)?;
    Ok((0..=bound)
        .map(|k| {
            let mut t = Term::constant(Rational::one() / crate::algebra::factorial(k));
            for a in upper {
                t = t.poch(a.clone(), k);
            }
            for b in lower {
                t = t.over_poch(b.clone(), k);
            }
            t
        })
        .collect())
}
