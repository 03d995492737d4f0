//! Wire formats. Rationals travel as `"p/q"` strings (or `"p"` when the
//! denominator is 1), never as decimals.

use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, parse_rational, CouplingG, Rational};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::sov::{CoeffProblem, CoeffTable, TableKind};
use crate::sympoly::{elementary_to_monomial, ElementaryExpansion, SymPoly};
use crate::unipoly::UniPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Elementary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub mu: Vec<usize>,
    pub coeff: String,
}

/// Terms are listed leading partition first (descending lexicographic).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymPolyJson {
    pub nvars: usize,
    pub basis: Basis,
    pub terms: Vec<TermJson>,
}

impl SymPolyJson {
    pub fn from_sympoly(p: &SymPoly, basis: Basis) -> Self {
        let terms = match basis {
            Basis::Monomial => p
                .terms()
                .iter()
                .rev()
                .map(|(mu, c)| term(mu, c))
                .collect(),
            Basis::Elementary => p.to_elementary().iter().rev().map(|(mu, c)| term(mu, c)).collect(),
        };
        SymPolyJson {
            nvars: p.nvars(),
            basis,
            terms,
        }
    }

    pub fn to_sympoly(&self) -> Result<SymPoly> {
        let mut parsed = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            parsed.push((Partition::new(t.mu.clone())?.trimmed(), parse_rational(&t.coeff)?));
        }
        match self.basis {
            Basis::Monomial => {
                let mut p = SymPoly::zero(self.nvars);
                for (mu, c) in parsed {
                    p.add_term(mu.padded(self.nvars)?, c);
                }
                Ok(p)
            }
            Basis::Elementary => {
                let mut e = ElementaryExpansion::new();
                for (mu, c) in parsed {
                    *e.entry(mu).or_default() += c;
                }
                Ok(elementary_to_monomial(&e, self.nvars))
            }
        }
    }
}

fn term(mu: &Partition, c: &Rational) -> TermJson {
    TermJson {
        mu: mu.trimmed().parts().to_vec(),
        coeff: format_rational(c),
    }
}

/// Ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniPolyJson {
    pub coeffs: Vec<String>,
}

impl UniPolyJson {
    pub fn from_unipoly(p: &UniPoly) -> Self {
        UniPolyJson {
            coeffs: p.coeffs().iter().map(format_rational).collect(),
        }
    }

    pub fn to_unipoly(&self) -> Result<UniPoly> {
        let coeffs: Result<Vec<Rational>> = self.coeffs.iter().map(|c| parse_rational(c)).collect();
        Ok(UniPoly::new(coeffs?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub m: usize,
    pub n: usize,
    pub value: String,
}

/// Entries ordered by `(m + n, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffTableJson {
    pub r1: usize,
    pub r2: usize,
    pub g: String,
    pub kind: String,
    pub entries: Vec<EntryJson>,
}

impl CoeffTableJson {
    pub fn from_table(t: &CoeffTable) -> Self {
        let entries = t
            .problem
            .support()
            .into_iter()
            .filter_map(|(m, n)| {
                t.entries.get(&(m, n)).map(|v| EntryJson {
                    m,
                    n,
                    value: format_rational(v),
                })
            })
            .collect();
        CoeffTableJson {
            r1: t.problem.r1,
            r2: t.problem.r2,
            g: t.problem.g.to_string(),
            kind: t.kind.to_string(),
            entries,
        }
    }

    pub fn to_table(&self) -> Result<CoeffTable> {
        let g: CouplingG = self.g.parse()?;
        let problem = CoeffProblem::new(self.r1, self.r2, g)?;
        let kind = match self.kind.as_str() {
            "c" => TableKind::C,
            "a" => TableKind::A,
            other => return Err(Error::Parse(format!("unknown table kind {other:?}"))),
        };
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            if e.m + e.n > self.r1 {
                return Err(Error::InvalidIndex(format!("({}, {}) outside the table", e.m, e.n)));
            }
            entries.push(((e.m, e.n), parse_rational(&e.value)?));
        }
        Ok(CoeffTable::new(problem, kind, entries))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub case_id: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Skip {
    pub case_id: String,
    pub reason: String,
}

/// Outcome of a verification suite. `failures` and `skipped` are sorted by
/// case id, so the report does not depend on execution order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub failures: Vec<Failure>,
    #[serde(default)]
    pub skipped: Vec<Skip>,
    pub wall_time_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compact JSON text.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("wire types always serialize")
}

pub fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
