//! Symmetric polynomials in the monomial-symmetric basis, with conversions to
//! the elementary basis and (for two variables) to the `p_{mn}` basis
//! `(x1 x2)^m [(1-x1)(1-x2)]^n`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{binomial, format_rational, int, Rational};
use crate::error::{Error, Result};
use crate::partition::{distinct_permutations, Partition};
use crate::poly::Poly;

/// `Σ c_μ m_μ` in a fixed number of variables. Keys are partitions padded
/// to `nvars`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Partition, Rational>,
}

/// Coefficients on products `e_μ = e_{μ1} e_{μ2} ...`; keys are trimmed partitions.
pub type ElementaryExpansion = BTreeMap<Partition, Rational>;

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = SymPoly::zero(nvars);
        p.add_term(
            Partition::new(vec![0; nvars]).expect("zero partition"),
            c,
        );
        p
    }

    /// The monomial symmetric polynomial `m_μ`.
    pub fn monomial(mu: &Partition, nvars: usize) -> Result<Self> {
        let mut p = SymPoly::zero(nvars);
        p.add_term(mu.padded(nvars)?, Rational::one());
        Ok(p)
    }

    /// The elementary symmetric polynomial `e_k` (zero for `k > nvars`).
    pub fn elementary(k: usize, nvars: usize) -> Self {
        if k > nvars {
            return SymPoly::zero(nvars);
        }
        let mut parts = vec![1; k];
        parts.resize(nvars, 0);
        let mut p = SymPoly::zero(nvars);
        p.add_term(Partition::new(parts).expect("valid"), Rational::one());
        p
    }

    /// `e_μ = ∏ e_{μ_i}`.
    pub fn elementary_product(mu: &Partition, nvars: usize) -> Self {
        mu.parts()
            .iter()
            .filter(|&&k| k > 0)
            .fold(SymPoly::one(nvars), |acc, &k| {
                acc.mul(&SymPoly::elementary(k, nvars))
            })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m_μ`; `mu` is padded to `nvars` first.
    pub fn coeff(&self, mu: &Partition) -> Rational {
        mu.padded(self.nvars)
            .ok()
            .and_then(|k| self.terms.get(&k).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// Adds `c · m_μ`; `mu` must already be padded to `nvars`.
    pub fn add_term(&mut self, mu: Partition, c: Rational) {
        debug_assert_eq!(mu.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.nvars);
        }
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Product, computed on raw monomials and keeping only sorted exponents.
    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let left = self.to_poly();
        let right = other.to_poly();
        let mut out = SymPoly::zero(self.nvars);
        for (ea, ca) in left.terms() {
            for (eb, cb) in right.terms() {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if e.windows(2).all(|w| w[0] >= w[1]) {
                    out.add_term(Partition::new(e).expect("sorted"), ca * cb);
                }
            }
        }
        out
    }

    /// Multiplies by `(x_1 ⋯ x_n)^s`.
    pub fn times_full_monomial(&self, s: usize) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.shifted(s), v.clone()))
                .collect(),
        }
    }

    /// The leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&Partition, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::weight).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Expands every `m_μ` into its distinct monomials.
    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (mu, c) in &self.terms {
            for e in distinct_permutations(mu.parts()) {
                p.add_term(e, c.clone());
            }
        }
        p
    }

    /// Folds a raw polynomial back into `m_μ` form, checking symmetry.
    pub fn from_poly(p: &Poly) -> Result<SymPoly> {
        if !p.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut out = SymPoly::zero(p.nvars());
        for (e, c) in p.terms() {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::new(e.clone()).expect("sorted"), c.clone());
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::VariableCount {
                expected: self.nvars,
                found: point.len(),
            });
        }
        self.to_poly().evaluate(point)
    }

    pub fn to_elementary(&self) -> ElementaryExpansion {
        monomial_to_elementary(self)
    }

    /// Text rendering in the monomial basis, leading term first.
    pub fn display_monomial(&self) -> String {
        render(
            self.terms
                .iter()
                .rev()
                .map(|(mu, c)| (c.clone(), monomial_label(mu))),
        )
    }

    /// Text rendering in the elementary basis, leading term first.
    pub fn display_elementary(&self) -> String {
        render(
            self.to_elementary()
                .iter()
                .rev()
                .map(|(mu, c)| (c.clone(), elementary_label(mu))),
        )
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_monomial())
    }
}

fn monomial_label(mu: &Partition) -> String {
    if mu.length() == 0 {
        String::new()
    } else {
        format!("m_{}", mu.trimmed())
    }
}

fn elementary_label(mu: &Partition) -> String {
    let mut factors = Vec::new();
    for k in 1..=mu.largest() {
        match mu.multiplicity(k) {
            0 => {}
            1 => factors.push(format!("e{k}")),
            m => factors.push(format!("e{k}^{m}")),
        }
    }
    factors.join("*")
}

fn render(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if label.is_empty() {
            out.push_str(&format_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&label);
        } else {
            out.push_str(&format!("{}*{label}", format_rational(&mag)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Rewrites `p` as a polynomial in `e_1, …, e_n` by peeling off leading terms.
pub fn monomial_to_elementary(p: &SymPoly) -> ElementaryExpansion {
    let mut rest = p.clone();
    let mut out = ElementaryExpansion::new();
    while let Some((lead, c)) = rest.leading() {
        let lead = lead.clone();
        let c = c.clone();
        let mu = lead.trimmed().conjugate();
        let e_mu = SymPoly::elementary_product(&mu, p.nvars());
        debug_assert_eq!(e_mu.leading().map(|(k, _)| k), Some(&lead));
        rest = rest.sub(&e_mu.scale(&c));
        *out.entry(mu).or_insert_with(Rational::zero) += c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `Σ c_μ e_μ` expanded into the monomial basis.
pub fn elementary_to_monomial(expansion: &ElementaryExpansion, nvars: usize) -> SymPoly {
    expansion
        .iter()
        .fold(SymPoly::zero(nvars), |acc, (mu, c)| {
            acc.add(&SymPoly::elementary_product(mu, nvars).scale(c))
        })
}

/// `(x1 x2)^prefactor_power · Σ terms[(m,n)] u^m v^n` with `u = x1 x2` and
/// `v = (1-x1)(1-x2)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PmnExpansion {
    pub terms: BTreeMap<(usize, usize), Rational>,
    pub prefactor_power: usize,
}

impl PmnExpansion {
    pub fn new(terms: BTreeMap<(usize, usize), Rational>, prefactor_power: usize) -> Self {
        let mut e = PmnExpansion {
            terms,
            prefactor_power,
        };
        e.terms.retain(|_, v| !v.is_zero());
        e
    }

    pub fn get(&self, m: usize, n: usize) -> Rational {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> PmnExpansion {
        PmnExpansion::new(
            self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
            self.prefactor_power,
        )
    }

    /// Re-expresses the expansion over the prefactor `(x1 x2)^power`, which
    /// may not exceed the current prefactor.
    pub fn relative_to(&self, power: usize) -> Result<PmnExpansion> {
        let Some(shift) = self.prefactor_power.checked_sub(power) else {
            return Err(Error::NotPolynomial(format!(
                "expansion with prefactor (x1 x2)^{} cannot be written over (x1 x2)^{power}",
                self.prefactor_power
            )));
        };
        Ok(PmnExpansion {
            terms: self
                .terms
                .iter()
                .map(|(&(m, n), v)| ((m + shift, n), v.clone()))
                .collect(),
            prefactor_power: power,
        })
    }

    /// Moves every common power of `u` into the prefactor, giving the
    /// canonical form produced by [`sympoly_to_pmn`].
    pub fn normalized(&self) -> PmnExpansion {
        let Some(shift) = self.terms.keys().map(|&(m, _)| m).min() else {
            return PmnExpansion::default();
        };
        PmnExpansion {
            terms: self
                .terms
                .iter()
                .map(|(&(m, n), v)| ((m - shift, n), v.clone()))
                .collect(),
            prefactor_power: self.prefactor_power + shift,
        }
    }
}

/// Expresses a symmetric polynomial in two variables in the `p_{mn}` basis,
/// pulling out the largest power of `x1 x2` that divides it.
pub fn sympoly_to_pmn(p: &SymPoly) -> Result<PmnExpansion> {
    if p.nvars() != 2 {
        return Err(Error::VariableCount {
            expected: 2,
            found: p.nvars(),
        });
    }
    if p.is_zero() {
        return Ok(PmnExpansion::default());
    }
    let power = p.terms.keys().map(|mu| mu.part(1)).min().unwrap_or(0);
    let mut stripped = SymPoly::zero(2);
    for (mu, c) in &p.terms {
        stripped.add_term(
            Partition::new(vec![mu.part(0) - power, mu.part(1) - power]).expect("sorted"),
            c.clone(),
        );
    }
    // e1 = 1 + u - v, e2 = u
    let mut terms: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for (mu, c) in monomial_to_elementary(&stripped) {
        let i = mu.multiplicity(1);
        let j = mu.multiplicity(2);
        // (1 + u - v)^i = Σ_{a+b+c=i} i!/(a!b!c!) u^b (-v)^c
        for b in 0..=i {
            let cb = binomial(i, b)?;
            for cc in 0..=(i - b) {
                let mut coef = &c * &cb * binomial(i - b, cc)?;
                if cc % 2 == 1 {
                    coef = -coef;
                }
                *terms.entry((b + j, cc)).or_insert_with(Rational::zero) += coef;
            }
        }
    }
    Ok(PmnExpansion::new(terms, power))
}

/// Expands a `p_{mn}` expansion back into the monomial basis.
pub fn pmn_to_sympoly(e: &PmnExpansion) -> SymPoly {
    let u = Poly::monomial(vec![1, 1], Rational::one());
    let one = Poly::one(2);
    let v = &(&one - &Poly::var(2, 0)) * &(&one - &Poly::var(2, 1));
    let mut u_pows = vec![one.clone()];
    let mut v_pows = vec![one];
    let mut acc = Poly::zero(2);
    for (&(m, n), c) in &e.terms {
        while u_pows.len() <= m {
            let next = u_pows.last().expect("non-empty") * &u;
            u_pows.push(next);
        }
        while v_pows.len() <= n {
            let next = v_pows.last().expect("non-empty") * &v;
            v_pows.push(next);
        }
        acc = &acc + &(&u_pows[m] * &v_pows[n]).scale(c);
    }
    let acc = acc.shift(&[e.prefactor_power, e.prefactor_power]);
    SymPoly::from_poly(&acc).expect("u and v are symmetric")
}
