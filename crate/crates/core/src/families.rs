//! Bernoulli, Euler and Hermite numbers and polynomials.
//!
//! Conventions: `B_1 = -1/2` (generating function `t/(e^t - 1)`), the Euler
//! numbers are `E_n = E_n(0)` (so `E_1 = -1/2`), and the Hermite numbers are
//! `H_n = H_n(0)` for the physicists' polynomials `e^(2xt - t²)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::check::{self, compare_coeffs, compare_poly, Mismatch, Verdict};
use crate::error::Error;
use crate::exact::{binomial, factorial, from_biguint, int, Rational};
use crate::poly::Poly;
use crate::series::{truncated_product, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classical {
    Bernoulli,
    Euler,
    Hermite,
}

impl Classical {
    pub const ALL: [Classical; 3] = [Classical::Bernoulli, Classical::Euler, Classical::Hermite];

    pub fn name(self) -> &'static str {
        match self {
            Classical::Bernoulli => "bernoulli",
            Classical::Euler => "euler",
            Classical::Hermite => "hermite",
        }
    }

    /// `B`, `E` or `H`.
    pub fn symbol(self) -> &'static str {
        match self {
            Classical::Bernoulli => "B",
            Classical::Euler => "E",
            Classical::Hermite => "H",
        }
    }

    pub fn numbers(self, max_n: usize) -> Vec<Rational> {
        match self {
            Classical::Bernoulli => bernoulli_numbers(max_n),
            Classical::Euler => euler_numbers(max_n),
            Classical::Hermite => hermite_numbers(max_n),
        }
    }

    pub fn polys(self, max_n: usize) -> Vec<Poly> {
        match self {
            Classical::Bernoulli => appell_polys(&bernoulli_numbers(max_n)),
            Classical::Euler => appell_polys(&euler_numbers(max_n)),
            Classical::Hermite => hermite_polys(max_n),
        }
    }

    pub fn poly(self, n: usize) -> Poly {
        self.polys(n).pop().expect("table has n+1 entries")
    }
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Classical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Classical::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unknown { what: "family", value: s.to_owned() })
    }
}

/// `B_0..=B_max_n` from `B_0 = 1` and `sum_{k=0}^{n} C(n+1, k) B_k = 0` for `n >= 1`.
pub fn bernoulli_numbers(max_n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(max_n + 1);
    b.push(Rational::one());
    for n in 1..=max_n {
        let s: Rational = (0..n).map(|k| from_biguint(binomial(n + 1, k)) * &b[k]).sum();
        b.push(-s / int(n as i64 + 1));
    }
    b
}

/// `E_n(0)` for `n <= max_n`, from `2 E_n + sum_{k<n} C(n, k) E_k = 2 δ_{n,0}`.
pub fn euler_numbers(max_n: usize) -> Vec<Rational> {
    let mut e: Vec<Rational> = Vec::with_capacity(max_n + 1);
    e.push(Rational::one());
    for n in 1..=max_n {
        let s: Rational = (0..n).map(|k| from_biguint(binomial(n, k)) * &e[k]).sum();
        e.push(-s / int(2));
    }
    e
}

/// `H_n(0)`: `H_{2m} = (-1)^m (2m)!/m!`, odd values vanish.
pub fn hermite_numbers(max_n: usize) -> Vec<Rational> {
    let mut h: Vec<Rational> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        h.push(match n {
            0 => Rational::one(),
            1 => Rational::zero(),
            _ => &h[n - 2] * int(-2 * (n as i64 - 1)),
        });
    }
    h
}

/// `P_n(x) = sum_k C(n, k) a_{n-k} x^k` for each `n`, the Appell sequence
/// generated by the numbers `a`.
fn appell_polys(numbers: &[Rational]) -> Vec<Poly> {
    (0..numbers.len())
        .map(|n| {
            Poly::new(
                (0..=n)
                    .map(|k| from_biguint(binomial(n, k)) * &numbers[n - k])
                    .collect(),
            )
        })
        .collect()
}

fn hermite_polys(max_n: usize) -> Vec<Poly> {
    let two_x = Poly::from_integers(&[0, 2]);
    let mut h = vec![Poly::one()];
    for n in 1..=max_n {
        let next = if n == 1 {
            two_x.clone()
        } else {
            &(&two_x * &h[n - 1]) - &h[n - 2].scale(&int(2 * (n as i64 - 1)))
        };
        h.push(next);
    }
    h
}

pub fn bernoulli_poly(n: usize) -> Poly {
    Classical::Bernoulli.poly(n)
}

pub fn euler_poly(n: usize) -> Poly {
    Classical::Euler.poly(n)
}

pub fn hermite_poly(n: usize) -> Poly {
    Classical::Hermite.poly(n)
}

/// Numbers and polynomials of one family up to a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTable {
    family: Classical,
    numbers: Vec<Rational>,
    polys: Vec<Poly>,
}

impl FamilyTable {
    pub fn build(family: Classical, max_degree: usize) -> Self {
        FamilyTable { family, numbers: family.numbers(max_degree), polys: family.polys(max_degree) }
    }

    pub fn family(&self) -> Classical {
        self.family
    }

    pub fn max_degree(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn numbers(&self) -> &[Rational] {
        &self.numbers
    }

    pub fn number(&self, n: usize) -> &Rational {
        &self.numbers[n]
    }

    pub fn poly(&self, n: usize) -> &Poly {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }
}

/// Which variant of an identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IdentityForm {
    /// The classically valid statement.
    #[default]
    Corrected,
    /// A commonly quoted variant that is not an identity, kept to show where it fails.
    Literal,
}

/// `B_n(x) = sum_{k=0, k≠1}^{n} C(n, k) B_k E_{n-k}(x)`.
///
/// The literal form drops the `B_k` factor and fails from `n = 2` on.
pub fn verify_bernoulli_euler_identity(n: usize, form: IdentityForm) -> Verdict {
    let b = bernoulli_numbers(n);
    let euler = Classical::Euler.polys(n);
    let rhs = (0..=n).filter(|&k| k != 1).fold(Poly::default(), |acc, k| {
        let mut c = from_biguint(binomial(n, k));
        if form == IdentityForm::Corrected {
            c *= &b[k];
        }
        &acc + &euler[n - k].scale(&c)
    });
    let label = match form {
        IdentityForm::Corrected => "bernoulli-via-euler",
        IdentityForm::Literal => "bernoulli-via-euler-literal",
    };
    compare_poly(label, n, &appell_polys(&b)[n], &rhs)
}

/// `E_n(x) = -2 sum_{l=0}^{n} C(n, l) E_{l+1}/(l+1) · P_{n-l}(x)`.
///
/// The corrected form has `P = B` (Bernoulli polynomials); the literal form
/// has `P = E`, which only holds for `n <= 1`.
pub fn verify_euler_self_identity(n: usize, form: IdentityForm) -> Verdict {
    let e = euler_numbers(n + 1);
    let inner = match form {
        IdentityForm::Corrected => Classical::Bernoulli.polys(n),
        IdentityForm::Literal => appell_polys(&e[..=n]),
    };
    let rhs = (0..=n).fold(Poly::default(), |acc, l| {
        let c = from_biguint(binomial(n, l)) * &e[l + 1] / int(l as i64 + 1) * int(-2);
        &acc + &inner[n - l].scale(&c)
    });
    let label = match form {
        IdentityForm::Corrected => "euler-via-bernoulli",
        IdentityForm::Literal => "euler-via-bernoulli-literal",
    };
    compare_poly(label, n, &appell_polys(&e[..=n])[n], &rhs)
}

/// `x^n = (B_{n+1}(x+1) - B_{n+1}(x))/(n+1) = (1/(n+1)) sum_{l=0}^{n} C(n+1, l) B_l(x)`.
pub fn verify_monomial_bernoulli_identity(n: usize) -> Verdict {
    let b = Classical::Bernoulli.polys(n + 1);
    let xn = Poly::monomial(Rational::one(), n);
    let inv = Rational::new(1.into(), (n as i64 + 1).into());
    let difference = (&b[n + 1].compose_linear(&int(1), &int(1)) - &b[n + 1]).scale(&inv);
    let sum = (0..=n)
        .fold(Poly::default(), |acc, l| &acc + &b[l].scale(&from_biguint(binomial(n + 1, l))))
        .scale(&inv);
    check::all([compare_poly("monomial-via-bernoulli-difference", n, &xn, &difference), compare_poly("monomial-via-bernoulli-sum", n, &xn, &sum)])
}

/// `d/dx B_n(x) = n B_{n-1}(x)` and `∫ B_n = B_{n+1}/(n+1)` up to a constant.
pub fn verify_bernoulli_calculus(n: usize) -> Verdict {
    let b = Classical::Bernoulli.polys(n + 1);
    let derivative = if n == 0 {
        compare_poly("bernoulli-derivative", n, &Poly::default(), &b[0].derivative())
    } else {
        compare_poly("bernoulli-derivative", n, &b[n - 1].scale(&int(n as i64)), &b[n].derivative())
    };
    let expected = b[n + 1].scale(&Rational::new(1.into(), (n as i64 + 1).into()));
    let anti = b[n].antiderivative();
    let integral = compare_coeffs("bernoulli-antiderivative", n, &expected.coeffs()[1..], anti.coeffs().get(1..).unwrap_or(&[]));
    check::all([derivative, integral])
}

/// `H_n' = 2n H_{n-1}` and `H_n(-x) = (-1)^n H_n(x)`.
pub fn verify_hermite_calculus(n: usize) -> Verdict {
    let h = hermite_polys(n);
    let derivative = if n == 0 {
        compare_poly("hermite-derivative", n, &Poly::default(), &h[0].derivative())
    } else {
        compare_poly("hermite-derivative", n, &h[n - 1].scale(&int(2 * n as i64)), &h[n].derivative())
    };
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let parity = compare_poly("hermite-parity", n, &h[n].scale(&sign), &h[n].reflect());
    check::all([derivative, parity])
}

fn factorial_scaled(values: &[Rational]) -> Vec<Rational> {
    values.iter().enumerate().map(|(n, v)| v / from_biguint(factorial(n))).collect()
}

/// `t/(e^t - 1)` by exact series division, against `B_n/n!`.
pub fn bernoulli_series_check(max_n: usize) -> Verdict {
    let e = Series::exp_linear(&int(1), max_n + 1);
    // (e^t - 1)/t = sum t^j/(j+1)!
    let shifted = Series::new(e.coeffs()[1..].to_vec(), max_n);
    let gf = Series::new(vec![int(1)], max_n).div(&shifted).expect("constant term 1");
    compare_coeffs("bernoulli-number-series", max_n, &factorial_scaled(&bernoulli_numbers(max_n)), gf.coeffs())
}

/// `2/(e^t + 1)` against `E_n(0)/n!`.
pub fn euler_series_check(max_n: usize) -> Verdict {
    let mut denom = Series::exp_linear(&int(1), max_n).coeffs().to_vec();
    denom[0] += int(1);
    let gf = Series::new(vec![int(2)], max_n).div(&Series::new(denom, max_n)).expect("constant term 2");
    compare_coeffs("euler-number-series", max_n, &factorial_scaled(&euler_numbers(max_n)), gf.coeffs())
}

fn exp_x_series(scale: i64, max_n: usize) -> Vec<Poly> {
    // e^(scale·x·t) with coefficients in Q[x]
    (0..=max_n)
        .map(|n| {
            let c = Rational::from_integer(num_bigint::BigInt::from(scale).pow(n as u32)) / from_biguint(factorial(n));
            Poly::monomial(c, n)
        })
        .collect()
}

fn compare_poly_series(label: &str, expected: &[Poly], actual: &[Poly]) -> Verdict {
    for (n, (e, a)) in expected.iter().zip(actual).enumerate() {
        compare_poly(label, n, e, a)?;
    }
    Ok(())
}

fn scaled_polys(polys: Vec<Poly>) -> Vec<Poly> {
    polys
        .into_iter()
        .enumerate()
        .map(|(n, p)| p.scale(&from_biguint(factorial(n)).recip()))
        .collect()
}

/// Polynomial-level generating functions with symbolic `x`:
/// `t e^(xt)/(e^t - 1)`, `2 e^(xt)/(e^t + 1)` and `e^(2xt - t²)`.
pub fn polynomial_series_check(family: Classical, max_n: usize) -> Verdict {
    let lift = |s: &[Rational]| s.iter().map(|c| Poly::constant(c.clone())).collect::<Vec<_>>();
    let (label, product) = match family {
        Classical::Bernoulli | Classical::Euler => {
            let numbers = factorial_scaled(&family.numbers(max_n));
            let label = if family == Classical::Bernoulli { "bernoulli-poly-series" } else { "euler-poly-series" };
            (label, truncated_product(&lift(&numbers), &exp_x_series(1, max_n), max_n))
        }
        Classical::Hermite => {
            let gauss = Series::exp_linear(&int(-1), max_n / 2);
            let mut g = vec![Rational::zero(); max_n + 1];
            for (j, c) in gauss.coeffs().iter().enumerate() {
                g[2 * j] = c.clone();
            }
            ("hermite-poly-series", truncated_product(&lift(&g), &exp_x_series(2, max_n), max_n))
        }
    };
    compare_poly_series(label, &scaled_polys(family.polys(max_n)), &product)
}

/// Table invariants: exact degree, `numbers[n] = P_n(0)`, leading coefficient.
pub fn verify_table(table: &FamilyTable) -> Verdict {
    for (n, p) in table.polys().iter().enumerate() {
        if p.degree() != Some(n) {
            return Err(Mismatch::new(format!("{}-degree", table.family()), n)
                .values(n, p.degree().map_or("-inf".to_string(), |d| d.to_string())));
        }
        let lead = match table.family() {
            Classical::Hermite => from_biguint(crate::exact::pow2(n)),
            _ => Rational::one(),
        };
        compare_coeffs(&format!("{}-leading", table.family()), n, &[lead], &[p.leading_coeff().unwrap().clone()])?;
        compare_coeffs(&format!("{}-at-zero", table.family()), n, &[table.number(n).clone()], &[p.eval(&Rational::zero())])?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn bernoulli_numbers_small() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[0], int(1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[12], rat(-691, 2730));
        for n in (3..=12).step_by(2) {
            assert!(b[n].is_zero(), "B_{n}");
        }
    }

    #[test]
    fn bernoulli_32_has_a_large_numerator() {
        // B_32 = -7709321041217/510
        assert_eq!(bernoulli_numbers(32)[32], rat(-7_709_321_041_217, 510));
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(bernoulli_poly(0), Poly::one());
        assert_eq!(bernoulli_poly(1), Poly::new(vec![rat(-1, 2), int(1)]));
        assert_eq!(bernoulli_poly(2), Poly::new(vec![rat(1, 6), int(-1), int(1)]));
        assert_eq!(euler_poly(0), Poly::one());
        assert_eq!(euler_poly(1), Poly::new(vec![rat(-1, 2), int(1)]));
        assert_eq!(euler_poly(2), Poly::from_integers(&[0, -1, 1]));
        assert_eq!(hermite_poly(1), Poly::from_integers(&[0, 2]));
        assert_eq!(hermite_poly(2), Poly::from_integers(&[-2, 0, 4]));
        assert_eq!(hermite_poly(3), Poly::from_integers(&[0, -12, 0, 8]));
    }

    #[test]
    fn derivative_of_b4() {
        assert_eq!(bernoulli_poly(4).derivative(), bernoulli_poly(3).scale(&int(4)));
    }

    #[test]
    fn hermite_numbers_closed_form() {
        let h = hermite_numbers(20);
        for m in 0..=10usize {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            let expected = int(sign) * from_biguint(factorial(2 * m)) / from_biguint(factorial(m));
            assert_eq!(h[2 * m], expected);
        }
        assert!(h.iter().skip(1).step_by(2).all(Zero::is_zero));
    }

    #[test]
    fn shift_identity_for_b2() {
        let b2 = bernoulli_poly(2);
        assert_eq!(&b2.compose_linear(&int(1), &int(1)) - &b2, Poly::from_integers(&[0, 2]));
    }

    #[test]
    fn bernoulli_via_euler_corrected_and_literal() {
        for n in 0..=24 {
            assert_eq!(verify_bernoulli_euler_identity(n, IdentityForm::Corrected), Ok(()), "n = {n}");
        }
        assert!(verify_bernoulli_euler_identity(0, IdentityForm::Literal).is_ok());
        assert!(verify_bernoulli_euler_identity(1, IdentityForm::Literal).is_ok());
        let m = verify_bernoulli_euler_identity(2, IdentityForm::Literal).unwrap_err();
        // literal right side is x² - x + 1
        assert_eq!((m.k, m.expected.as_str(), m.actual.as_str()), (Some(0), "1/6", "1"));
    }

    #[test]
    fn euler_via_bernoulli_corrected_and_literal() {
        for n in 0..=24 {
            assert_eq!(verify_euler_self_identity(n, IdentityForm::Corrected), Ok(()), "n = {n}");
        }
        assert!(verify_euler_self_identity(0, IdentityForm::Literal).is_ok());
        assert!(verify_euler_self_identity(1, IdentityForm::Literal).is_ok());
        // literal right side at n = 2 is x² - x - 1/6
        let m = verify_euler_self_identity(2, IdentityForm::Literal).unwrap_err();
        assert_eq!((m.k, m.expected.as_str(), m.actual.as_str()), (Some(0), "0", "-1/6"));
    }

    #[test]
    fn monomial_via_bernoulli_holds() {
        for n in 0..=24 {
            assert_eq!(verify_monomial_bernoulli_identity(n), Ok(()), "n = {n}");
        }
    }

    #[test]
    fn calculus_properties() {
        for n in 0..=48 {
            assert_eq!(verify_bernoulli_calculus(n), Ok(()));
            assert_eq!(verify_hermite_calculus(n), Ok(()));
        }
    }

    #[test]
    fn tables_are_consistent() {
        for family in Classical::ALL {
            let t = FamilyTable::build(family, 48);
            assert_eq!(t.max_degree(), 48);
            assert_eq!(verify_table(&t), Ok(()));
        }
    }

    #[test]
    fn generating_functions() {
        assert_eq!(bernoulli_series_check(30), Ok(()));
        assert_eq!(euler_series_check(30), Ok(()));
        for family in Classical::ALL {
            assert_eq!(polynomial_series_check(family, 20), Ok(()), "{family}");
        }
    }

    #[test]
    fn family_names_roundtrip() {
        for f in Classical::ALL {
            assert_eq!(f.name().parse::<Classical>(), Ok(f));
        }
        assert!("legendre".parse::<Classical>().is_err());
    }
}
