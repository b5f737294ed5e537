//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Rational};

/// `coeffs[i]` is the coefficient of `x^i`. The last stored coefficient is
/// never zero; the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// `c·x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `1 - x^2`
    pub fn one_minus_x2() -> Self {
        Poly::from_integers(&[1, 0, -1])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::default();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly {
        if self.is_zero() {
            return Poly::default();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, c)| c / int(i as i64 + 1)));
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    /// `p(a·x + b)`
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Poly {
        let inner = Poly::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::default(), |acc, c| &(&acc * &inner) + &Poly::constant(c.clone()))
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::default(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + d] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        rem.truncate(d);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient when `divisor` divides `self`, otherwise `None`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::new(coeffs)
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::default();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Terms in decreasing degree, e.g. `8*x^4 - 8*x^2 + 1` or `x^2 - x + 1/6`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn schoolbook(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn ring_examples() {
        let xp1 = Poly::from_integers(&[1, 1]);
        let xm1 = Poly::from_integers(&[-1, 1]);
        assert_eq!(&xp1 * &xm1, Poly::from_integers(&[-1, 0, 1]));
        assert_eq!(&xp1 + &Poly::zero(), xp1);
        let t2 = Poly::from_integers(&[-1, 0, 2]);
        let oracle = schoolbook(&[-1, 0, 2], &[-1, 0, 2]);
        assert_eq!(oracle, vec![1, 0, -4, 0, 4]);
        assert_eq!(&t2 * &t2, Poly::from_integers(&oracle));
    }

    #[test]
    fn cancellation_trims_trailing_zeros() {
        let p = Poly::from_integers(&[1, 2, 3]);
        let q = Poly::from_integers(&[0, 0, 3]);
        assert_eq!((&p - &q).degree(), Some(1));
        assert_eq!((&p - &p).degree(), None);
        assert!(Poly::from_integers(&[0, 0, 0]).is_zero());
    }

    #[test]
    fn calculus_examples() {
        assert_eq!(Poly::monomial(int(1), 3).derivative(), Poly::monomial(int(3), 2));
        assert!(Poly::constant(int(7)).derivative().is_zero());
        assert_eq!(Poly::monomial(int(3), 2).antiderivative(), Poly::monomial(int(1), 3));
        assert!(Poly::zero().antiderivative().is_zero());
    }

    #[test]
    fn compose_and_eval() {
        let x2 = Poly::monomial(int(1), 2);
        assert_eq!(x2.compose_linear(&int(1), &int(1)), Poly::from_integers(&[1, 2, 1]));
        let p = Poly::new(vec![rat(1, 6), int(-1), int(1)]);
        assert_eq!(p.compose_linear(&int(1), &int(0)), p);
        assert_eq!(p.eval(&int(0)), rat(1, 6));
        assert_eq!(Poly::zero().eval(&rat(3, 7)), int(0));
        assert_eq!(Poly::from_integers(&[1, 0, -8, 0, 8]).eval(&int(1)), int(1));
        assert_eq!(Poly::from_integers(&[0, 1, 0, 1]).reflect(), Poly::from_integers(&[0, -1, 0, -1]));
    }

    #[test]
    fn division() {
        let p = Poly::from_integers(&[-3, 0, 6, 0, -3]); // -3(1-x^2)^2
        let (q, r) = p.div_rem(&Poly::one_minus_x2()).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_integers(&[-3, 0, 3]));
        assert!(Poly::from_integers(&[0, 1]).exact_div(&Poly::one_minus_x2()).is_none());
        assert_eq!(Poly::x().div_rem(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn rendering() {
        assert_eq!(Poly::from_integers(&[1, 0, -8, 0, 8]).to_string(), "8*x^4 - 8*x^2 + 1");
        assert_eq!(Poly::from_integers(&[0, -4, 0, 8]).to_string(), "8*x^3 - 4*x");
        assert_eq!(Poly::new(vec![rat(1, 6), int(-1), int(1)]).to_string(), "x^2 - x + 1/6");
        assert_eq!(Poly::new(vec![int(0), rat(-3, 4)]).to_string(), "-3/4*x");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::one().to_string(), "1");
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-50i64..50, 1i64..20), 0..65)
            .prop_map(|v| Poly::new(v.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn derivative_inverts_antiderivative(p in small_poly()) {
            prop_assert_eq!(p.antiderivative().derivative(), p);
        }

        #[test]
        fn div_rem_reconstructs(p in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            let (q, r) = p.div_rem(&d).unwrap();
            prop_assert_eq!(&(&q * &d) + &r, p);
            prop_assert!(r.degree() < d.degree());
        }

        #[test]
        fn eval_is_a_ring_map(p in small_poly(), q in small_poly(), x in (-20i64..20, 1i64..9)) {
            let x0 = rat(x.0, x.1);
            prop_assert_eq!((&p * &q).eval(&x0), p.eval(&x0) * q.eval(&x0));
            prop_assert_eq!((&p + &q).eval(&x0), p.eval(&x0) + q.eval(&x0));
        }
    }
}
