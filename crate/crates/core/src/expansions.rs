//! Chebyshev-basis expansions of `x^n`, `B_n(x)`, `E_n(x)` and `H_n(x)`.
//!
//! Each expansion can be produced three ways:
//!
//! * [`Source::ClosedForm`]: the explicit double-sum coefficient formulas,
//!   transcribed term by term;
//! * [`Source::Projection`]: `C_k = δ_k ⟨p, T_k⟩/π` or `C_k = 2⟨p, U_k⟩/π`
//!   with exact weighted inner products;
//! * [`Source::TriangularSolve`]: back-substitution using the leading
//!   coefficients `2^(k-1)` of `T_k` and `2^k` of `U_k`.
//!
//! [`cross_validate`] demands that all three agree exactly and that the
//! result rebuilds the source polynomial.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chebyshev::ChebKind;
use crate::check::{compare_poly, first_difference, Mismatch, Verdict};
use crate::error::Error;
use crate::exact::{binomial, from_biguint, int, pow2, render, Rational};
use crate::families::Classical;
use crate::moments::{moment_vector, WeightSign};
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Monomial,
    Bernoulli,
    Euler,
    Hermite,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Monomial, Family::Bernoulli, Family::Euler, Family::Hermite];

    pub fn name(self) -> &'static str {
        match self {
            Family::Monomial => "monomial",
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
            Family::Hermite => "hermite",
        }
    }

    pub fn classical(self) -> Option<Classical> {
        match self {
            Family::Monomial => None,
            Family::Bernoulli => Some(Classical::Bernoulli),
            Family::Euler => Some(Classical::Euler),
            Family::Hermite => Some(Classical::Hermite),
        }
    }

    /// The degree-`n` polynomial being expanded.
    pub fn source_poly(self, n: usize) -> Poly {
        match self.classical() {
            None => Poly::monomial(Rational::one(), n),
            Some(c) => c.poly(n),
        }
    }

    /// Left-hand side as it appears in an identity, e.g. `B_3(x)` or `x^3`.
    pub fn lhs(self, n: usize) -> String {
        match self.classical() {
            None => format!("x^{n}"),
            Some(c) => format!("{}_{}(x)", c.symbol(), n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown { what: "family", value: s.to_owned() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "monomial")]
    Monomial,
    #[serde(rename = "T")]
    ChebyshevT,
    #[serde(rename = "U")]
    ChebyshevU,
}

impl From<ChebKind> for Basis {
    fn from(kind: ChebKind) -> Self {
        match kind {
            ChebKind::FirstKind => Basis::ChebyshevT,
            ChebKind::SecondKind => Basis::ChebyshevU,
        }
    }
}

impl Basis {
    pub fn table(self, max_n: usize) -> Vec<Poly> {
        match self {
            Basis::Monomial => (0..=max_n).map(|k| Poly::monomial(Rational::one(), k)).collect(),
            Basis::ChebyshevT => ChebKind::FirstKind.table(max_n),
            Basis::ChebyshevU => ChebKind::SecondKind.table(max_n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    ClosedForm,
    Projection,
    TriangularSolve,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::ClosedForm => "closed_form",
            Source::Projection => "projection",
            Source::TriangularSolve => "triangular_solve",
        })
    }
}

/// `coefficients[k]` multiplies basis element `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub basis: Basis,
    pub coefficients: Vec<Rational>,
    pub source: Source,
}

impl Expansion {
    /// `sum_k coefficients[k] · basis_k` in the monomial basis.
    pub fn reconstruct(&self) -> Poly {
        let Some(max) = self.coefficients.len().checked_sub(1) else {
            return Poly::default();
        };
        self.basis
            .table(max)
            .iter()
            .zip(&self.coefficients)
            .fold(Poly::default(), |acc, (p, c)| &acc + &p.scale(c))
    }
}

/// `0!, 1!, ..., max!`
fn factorials(max: usize) -> Vec<Rational> {
    let mut out = vec![Rational::one()];
    for m in 1..=max {
        let next = &out[m - 1] * int(m as i64);
        out.push(next);
    }
    out
}

fn two_pow(n: usize) -> Rational {
    from_biguint(pow2(n))
}

/// Exact halving of a factorial argument; every caller passes an even value
/// by construction of the parity filters, so an odd one is a transcription bug.
fn half(v: usize) -> usize {
    assert!(v.is_multiple_of(2), "factorial argument {v}/2 is not an integer");
    v / 2
}

/// `δ_0 = 1`, `δ_k = 2` for `k > 0`
fn delta(k: usize) -> Rational {
    if k == 0 {
        int(1)
    } else {
        int(2)
    }
}

fn closed(kind: ChebKind, coefficients: Vec<Rational>) -> Expansion {
    Expansion { basis: kind.into(), coefficients, source: Source::ClosedForm }
}

/// `x^n = sum_k C_k T_k` with `C_k = n! δ_k / (2^n ((n+k)/2)! ((n-k)/2)!)` for `n ≡ k (mod 2)`.
pub fn expand_monomial_t(n: usize) -> Expansion {
    let f = factorials(2 * n + 2);
    let fact = |m: usize| &f[m];
    let coefficients = (0..=n)
        .map(|k| {
            if (n - k) % 2 == 1 {
                return Rational::zero();
            }
            fact(n) * delta(k) / (two_pow(n) * fact(half(n + k)) * fact(half(n - k)))
        })
        .collect();
    closed(ChebKind::FirstKind, coefficients)
}

/// `x^n = (n!/2^n) sum_{k ≡ n} (k+1) / (((n+k+2)/2)! ((n-k)/2)!) U_k`
pub fn expand_monomial_u(n: usize) -> Expansion {
    let f = factorials(2 * n + 2);
    let fact = |m: usize| &f[m];
    let coefficients = (0..=n)
        .map(|k| {
            if (n - k) % 2 == 1 {
                return Rational::zero();
            }
            fact(n) / two_pow(n) * int(k as i64 + 1) / (fact(half(n + k + 2)) * fact(half(n - k)))
        })
        .collect();
    closed(ChebKind::SecondKind, coefficients)
}

/// First-kind coefficients for an Appell family with numbers `a`:
/// `C_k = n! δ_k/(2^k (n-k)!) sum_{l even} C(n-k, l) a_{n-k-l} l! / (2^l ((2k+l)/2)! (l/2)!)`.
fn appell_t(a: &[Rational], n: usize) -> Vec<Rational> {
    let f = factorials(2 * n + 2);
    let fact = |m: usize| &f[m];
    (0..=n)
        .map(|k| {
            let inner: Rational = (0..=n - k)
                .step_by(2)
                .map(|l| {
                    from_biguint(binomial(n - k, l)) * &a[n - k - l] * fact(l)
                        / (two_pow(l) * fact(half(2 * k + l)) * fact(half(l)))
                })
                .sum();
            fact(n) * delta(k) / (two_pow(k) * fact(n - k)) * inner
        })
        .collect()
}

/// Second-kind coefficients for an Appell family with numbers `a`:
/// `C_k = (k+1) n!/2^k sum_{l even} a_{n-k-l} / (2^l (n-k-l)! ((2k+l+2)/2)! (l/2)!)`.
fn appell_u(a: &[Rational], n: usize) -> Vec<Rational> {
    let f = factorials(2 * n + 2);
    let fact = |m: usize| &f[m];
    (0..=n)
        .map(|k| {
            let inner: Rational = (0..=n - k)
                .step_by(2)
                .map(|l| &a[n - k - l] / (two_pow(l) * fact(n - k - l) * fact(half(2 * k + l + 2)) * fact(half(l))))
                .sum();
            int(k as i64 + 1) * fact(n) / two_pow(k) * inner
        })
        .collect()
}

/// Bernoulli polynomials in the `T` basis.
pub fn expand_bernoulli_t(n: usize) -> Expansion {
    closed(ChebKind::FirstKind, appell_t(&Classical::Bernoulli.numbers(n), n))
}

/// Euler polynomials in the `T` basis (same shape as the Bernoulli case, with `E_m = E_m(0)`).
pub fn expand_euler_t(n: usize) -> Expansion {
    closed(ChebKind::FirstKind, appell_t(&Classical::Euler.numbers(n), n))
}

/// `C_k = n! δ_k sum_{l even} H_{n-k-l} / ((n-k-l)! ((2k+l)/2)! (l/2)!)`
pub fn expand_hermite_t(n: usize) -> Expansion {
    let f = factorials(2 * n + 2);
    let fact = |m: usize| &f[m];
    let h = Classical::Hermite.numbers(n);
    let coefficients = (0..=n)
        .map(|k| {
            let inner: Rational = (0..=n - k)
                .step_by(2)
                .map(|l| &h[n - k - l] / (fact(n - k - l) * fact(half(2 * k + l)) * fact(half(l))))
                .sum();
            fact(n) * delta(k) * inner
        })
        .collect();
    closed(ChebKind::FirstKind, coefficients)
}

pub fn expand_bernoulli_u(n: usize) -> Expansion {
    closed(ChebKind::SecondKind, appell_u(&Classical::Bernoulli.numbers(n), n))
}

pub fn expand_euler_u(n: usize) -> Expansion {
    closed(ChebKind::SecondKind, appell_u(&Classical::Euler.numbers(n), n))
}

/// `C_k = n! (k+1) sum_{l even} H_{n-k-l} / ((n-k-l)! ((2k+l+2)/2)! (l/2)!)`
pub fn expand_hermite_u(n: usize) -> Expansion {
    let f = factorials(2 * n + 2);
    let fact = |m: usize| &f[m];
    let h = Classical::Hermite.numbers(n);
    let coefficients = (0..=n)
        .map(|k| {
            let inner: Rational = (0..=n - k)
                .step_by(2)
                .map(|l| &h[n - k - l] / (fact(n - k - l) * fact(half(2 * k + l + 2)) * fact(half(l))))
                .sum();
            fact(n) * int(k as i64 + 1) * inner
        })
        .collect();
    closed(ChebKind::SecondKind, coefficients)
}

pub fn expand_closed_form(family: Family, kind: ChebKind, n: usize) -> Expansion {
    match (family, kind) {
        (Family::Monomial, ChebKind::FirstKind) => expand_monomial_t(n),
        (Family::Monomial, ChebKind::SecondKind) => expand_monomial_u(n),
        (Family::Bernoulli, ChebKind::FirstKind) => expand_bernoulli_t(n),
        (Family::Bernoulli, ChebKind::SecondKind) => expand_bernoulli_u(n),
        (Family::Euler, ChebKind::FirstKind) => expand_euler_t(n),
        (Family::Euler, ChebKind::SecondKind) => expand_euler_u(n),
        (Family::Hermite, ChebKind::FirstKind) => expand_hermite_t(n),
        (Family::Hermite, ChebKind::SecondKind) => expand_hermite_u(n),
    }
}

/// Orthogonal projection with exact inner products; π cancels symbolically.
pub fn expand_projection(p: &Poly, kind: ChebKind) -> Expansion {
    let Some(deg) = p.degree() else {
        return Expansion { basis: kind.into(), coefficients: Vec::new(), source: Source::Projection };
    };
    let sign = match kind {
        ChebKind::FirstKind => WeightSign::MinusHalf,
        ChebKind::SecondKind => WeightSign::PlusHalf,
    };
    let v = moment_vector(p, sign, deg);
    let coefficients = kind
        .table(deg)
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let inner: Rational =
                b.coeffs().iter().zip(&v).filter(|(c, _)| !c.is_zero()).map(|(c, w)| c * w).sum();
            match kind {
                ChebKind::FirstKind => inner * delta(k),
                ChebKind::SecondKind => inner * int(2),
            }
        })
        .collect();
    Expansion { basis: kind.into(), coefficients, source: Source::Projection }
}

/// Back-substitution from the top degree down.
pub fn expand_triangular(p: &Poly, kind: ChebKind) -> Expansion {
    let Some(deg) = p.degree() else {
        return Expansion { basis: kind.into(), coefficients: Vec::new(), source: Source::TriangularSolve };
    };
    let table = kind.table(deg);
    let mut rest = p.clone();
    let mut coefficients = vec![Rational::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let top = rest.coeff(k);
        if top.is_zero() {
            continue;
        }
        let c = top / kind.leading(k);
        rest = &rest - &table[k].scale(&c);
        coefficients[k] = c;
    }
    debug_assert!(rest.is_zero());
    Expansion { basis: kind.into(), coefficients, source: Source::TriangularSolve }
}

/// Stable identifier of each closed-form identity, e.g. `bernoulli-T`.
pub fn expansion_id(family: Family, kind: ChebKind) -> String {
    format!("{}-{}", family.name(), kind.letter())
}

/// Outcome of the three-way comparison for one `(family, basis, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossReport {
    pub family: Family,
    pub kind: ChebKind,
    pub n: usize,
    pub closed_form: Expansion,
    pub projection: Expansion,
    pub triangular: Expansion,
    pub verdict: Verdict,
}

impl CrossReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_ok()
    }
}

fn compare_expansions(id: &str, n: usize, a: &Expansion, b: &Expansion) -> Verdict {
    match first_difference(&a.coefficients, &b.coefficients) {
        None if a.coefficients.len() == b.coefficients.len() => Ok(()),
        None => Err(Mismatch::new(format!("{id}/{}-vs-{}/length", a.source, b.source), n)
            .values(a.coefficients.len(), b.coefficients.len())),
        Some((k, x, y)) => {
            Err(Mismatch::new(format!("{id}/{}-vs-{}", a.source, b.source), n).at(k).values(render(&x), render(&y)))
        }
    }
}

pub fn cross_validate(family: Family, kind: ChebKind, n: usize) -> CrossReport {
    let source = family.source_poly(n);
    let closed_form = expand_closed_form(family, kind, n);
    let projection = expand_projection(&source, kind);
    let triangular = expand_triangular(&source, kind);
    let id = expansion_id(family, kind);
    let verdict = compare_expansions(&id, n, &closed_form, &projection)
        .and_then(|_| compare_expansions(&id, n, &closed_form, &triangular))
        .and_then(|_| compare_poly(&format!("{id}/reconstruction"), n, &source, &closed_form.reconstruct()));
    CrossReport { family, kind, n, closed_form, projection, triangular, verdict }
}
