//! Exact rational scalars and the combinatorial primitives the coefficient
//! formulas are built from.
//!
//! Every value is a reduced `BigRational`; nothing in the computation path
//! touches floating point.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. The result is reduced and carries the sign on the numerator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p/q"` rendering (`"p"` when the denominator is 1).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the value as a non-negative machine integer, if it is one.
pub fn as_nonneg_integer(r: &Rational) -> Option<usize> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().try_into().ok()
    } else {
        None
    }
}

/// `Some(k)` when `r = -k` for a non-negative integer `k`.
pub fn as_nonpositive_integer(r: &Rational) -> Option<usize> {
    as_nonneg_integer(&-r)
}

/// The coupling constant `g` of the Sutherland operator; the Jack parameter is `1/g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CouplingG(Rational);

impl CouplingG {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_positive() {
            Ok(CouplingG(value))
        } else {
            Err(Error::NonPositiveCoupling(value))
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        Self::new(rat(n, d))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// The integer value of `g`, when `g` is a positive integer.
    pub fn as_integer(&self) -> Option<usize> {
        as_nonneg_integer(&self.0)
    }
}

impl fmt::Display for CouplingG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl FromStr for CouplingG {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CouplingG::new(parse_rational(s)?)
    }
}

/// The default panel of generic couplings used by identity checks.
pub fn default_g_panel() -> Vec<CouplingG> {
    [(1, 3), (2, 5), (1, 1), (3, 2), (7, 3)]
        .iter()
        .map(|&(n, d)| CouplingG::from_ratio(n, d).expect("panel values are positive"))
        .collect()
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..n {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Index of the first vanishing factor of `(a)_n`, 1-based, if any.
pub fn pochhammer_zero_index(a: &Rational, n: usize) -> Option<usize> {
    as_nonpositive_integer(a)
        .map(|k| k + 1)
        .filter(|&k| k <= n)
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * from_usize(k))
}

pub fn binomial(n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Err(Error::InvalidIndex(format!("binomial({n}, {k}) with k > n")));
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(Rational::from_integer(acc))
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}
