use crate::algebra::Rational;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("partitions {left:?} and {right:?} have different weights")]
    WeightMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("expected {expected} variables, found {found}")]
    VariableCount { expected: usize, found: usize },

    #[error("coupling g must be positive, got {0}")]
    NonPositiveCoupling(Rational),

    #[error("constant-term product needs a positive integer coupling, got {0}")]
    NonIntegerCoupling(Rational),

    #[error("hypergeometric series has no non-positive integer upper parameter")]
    NonTerminating,

    /// A lower parameter `b` makes `(b)_k` vanish inside the summation range.
    #[error(
        "degenerate lower parameter {parameter}: Pochhammer symbol vanishes at index {index} ({site}){}",
        hint.as_ref().map(|h| format!("; {h}")).unwrap_or_default()
    )]
    DegenerateLowerParameter {
        parameter: Rational,
        index: usize,
        site: String,
        hint: Option<String>,
    },

    #[error("series coefficient of degree {degree} is {value}, expected 0")]
    TruncationFailure { degree: usize, value: Rational },

    #[error("eigenvalue collision between {lambda:?} and {mu:?} at g = {g}")]
    EigenvalueCollision {
        lambda: Vec<usize>,
        mu: Vec<usize>,
        g: Rational,
    },

    /// A limit evaluation left a negative power of the perturbation behind.
    #[error("pole of order {order} does not cancel in the limit g -> {g} ({site})")]
    PoleSurvives { order: i32, g: Rational, site: String },

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("not a polynomial: {0}")]
    NotPolynomial(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Attaches a site label (and optional remedy hint) to a degenerate-parameter error.
    pub fn at_site(self, label: &str, remedy: Option<&str>) -> Error {
        match self {
            Error::DegenerateLowerParameter {
                parameter,
                index,
                site,
                hint,
            } => Error::DegenerateLowerParameter {
                parameter,
                index,
                site: if site.is_empty() {
                    label.to_string()
                } else {
                    format!("{label}: {site}")
                },
                hint: remedy.map(str::to_string).or(hint),
            },
            other => other,
        }
    }

    /// Sets the remedy hint of a degenerate-parameter error.
    pub fn with_hint(self, remedy: &str) -> Error {
        match self {
            Error::DegenerateLowerParameter {
                parameter,
                index,
                site,
                ..
            } => Error::DegenerateLowerParameter {
                parameter,
                index,
                site,
                hint: Some(remedy.to_string()),
            },
            other => other,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::DegenerateLowerParameter { .. } | Error::PoleSurvives { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
