//! Exact pass/fail verdicts shared by every verification routine.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{render, Rational};
use crate::poly::Poly;

/// Where and how an exact comparison failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub check: String,
    pub n: Option<usize>,
    /// Coefficient index (monomial degree or basis index) of the first difference.
    pub k: Option<usize>,
    pub expected: String,
    pub actual: String,
}

pub type Verdict = Result<(), Mismatch>;

impl Mismatch {
    pub fn new(check: impl Into<String>, n: impl Into<Option<usize>>) -> Self {
        Mismatch { check: check.into(), n: n.into(), k: None, expected: String::new(), actual: String::new() }
    }

    pub fn at(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn values(mut self, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        self.expected = expected.to_string();
        self.actual = actual.to_string();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("mismatch serializes")
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.check)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        write!(f, ": expected {}, got {}", self.expected, self.actual)
    }
}

impl std::error::Error for Mismatch {}

/// Index of the first position where two coefficient lists differ, reading
/// missing entries as zero.
pub fn first_difference(a: &[Rational], b: &[Rational]) -> Option<(usize, Rational, Rational)> {
    let zero = Rational::default();
    (0..a.len().max(b.len())).find_map(|i| {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        (x != y).then(|| (i, x.clone(), y.clone()))
    })
}

pub fn compare_coeffs(check: &str, n: impl Into<Option<usize>>, expected: &[Rational], actual: &[Rational]) -> Verdict {
    match first_difference(expected, actual) {
        None => Ok(()),
        Some((k, e, a)) => Err(Mismatch::new(check, n).at(k).values(render(&e), render(&a))),
    }
}

pub fn compare_poly(check: &str, n: impl Into<Option<usize>>, expected: &Poly, actual: &Poly) -> Verdict {
    compare_coeffs(check, n, expected.coeffs(), actual.coeffs())
}

/// Combines verdicts, keeping the first failure.
pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    verdicts.into_iter().collect()
}
