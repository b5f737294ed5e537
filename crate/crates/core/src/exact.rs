//! Exact scalars: arbitrary-precision rationals and rational multiples of π.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator, so equality is structural.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Builds the reduced fraction `numer/denom` from machine integers.
///
/// Panics if `denom` is zero; use [`checked_div`] for fallible division.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn from_biguint(value: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // running product stays integral: after step i it equals C(n-k+i, i)
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - k + i) / BigUint::from(i))
}

pub fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn render(r: &Rational) -> String {
    r.to_string()
}

/// A value `c·π` with exact rational `c`.
///
/// Deliberately not interconvertible with [`Rational`]: the only way out is
/// [`PiScaled::div_pi`], which drops the π factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PiScaled(Rational);

impl PiScaled {
    pub fn new(coefficient: Rational) -> Self {
        PiScaled(coefficient)
    }

    pub fn pi() -> Self {
        PiScaled(Rational::one())
    }

    pub fn coefficient(&self) -> &Rational {
        &self.0
    }

    /// The value divided by π.
    pub fn div_pi(&self) -> Rational {
        self.0.clone()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        PiScaled(&self.0 * factor)
    }

    /// Lossy decimal approximation, for display only.
    pub fn approx_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }
}

impl Zero for PiScaled {
    fn zero() -> Self {
        PiScaled(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Add for PiScaled {
    type Output = PiScaled;

    fn add(self, rhs: PiScaled) -> PiScaled {
        PiScaled(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a PiScaled> for &'a PiScaled {
    type Output = PiScaled;

    fn add(self, rhs: &PiScaled) -> PiScaled {
        PiScaled(&self.0 + &rhs.0)
    }
}

impl AddAssign for PiScaled {
    fn add_assign(&mut self, rhs: PiScaled) {
        self.0 += rhs.0;
    }
}

impl Sub for PiScaled {
    type Output = PiScaled;

    fn sub(self, rhs: PiScaled) -> PiScaled {
        PiScaled(self.0 - rhs.0)
    }
}

impl Neg for PiScaled {
    type Output = PiScaled;

    fn neg(self) -> PiScaled {
        PiScaled(-self.0)
    }
}

impl Mul<Rational> for PiScaled {
    type Output = PiScaled;

    fn mul(self, rhs: Rational) -> PiScaled {
        PiScaled(self.0 * rhs)
    }
}

impl Sum for PiScaled {
    fn sum<I: Iterator<Item = PiScaled>>(iter: I) -> Self {
        iter.fold(PiScaled::zero(), Add::add)
    }
}

/// `(p/q)*pi`, with the denominator always written out; zero is `0`.
impl fmt::Display for PiScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "({}/{})*pi", self.0.numer(), self.0.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_examples() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(int(0) * rat(7, 3), int(0));
        assert_eq!(render(&(int(0) * rat(7, 3))), "0");
        let half = Rational::new(BigInt::from(2), BigInt::from(4));
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
        let neg = Rational::new(BigInt::from(3), BigInt::from(-6));
        assert_eq!(render(&neg), "-1/2");
        assert_eq!(render(&int(-4)), "-4");
    }

    #[test]
    fn zero_is_unique() {
        let z = Rational::new(BigInt::from(0), BigInt::from(-17));
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(z, int(0));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(checked_div(&int(1), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&rat(1, 2), &rat(1, 4)), Ok(int(2)));
    }

    fn pascal_row(n: usize) -> Vec<u128> {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(9, 0), BigUint::one());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(3, 5), BigUint::zero());
        let oracle = pascal_row(30)[15];
        assert_eq!(oracle, 155_117_520);
        assert_eq!(binomial(30, 15), BigUint::from(oracle));
    }

    #[test]
    fn binomial_matches_pascal_up_to_64() {
        for n in 1..=64usize {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
        let row = pascal_row(64);
        for (k, v) in row.iter().enumerate() {
            assert_eq!(binomial(64, k), BigUint::from(*v));
        }
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        let oracle: u64 = (1..=20u64).product();
        assert_eq!(oracle, 2_432_902_008_176_640_000);
        assert_eq!(factorial(20), BigUint::from(oracle));
    }

    #[test]
    fn pi_scaled_rendering() {
        assert_eq!(PiScaled::pi().to_string(), "(1/1)*pi");
        assert_eq!(PiScaled::new(rat(3, 8)).to_string(), "(3/8)*pi");
        assert_eq!(PiScaled::new(rat(-1, 2)).to_string(), "(-1/2)*pi");
        assert_eq!(PiScaled::zero().to_string(), "0");
        assert!((PiScaled::new(rat(1, 2)).approx_f64() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a - &a, int(0));
            if !a.is_zero() {
                prop_assert_eq!(checked_div(&a, &a).unwrap(), int(1));
                prop_assert_eq!(&a * a.recip(), int(1));
            }
        }

        #[test]
        fn pi_scaled_is_a_module(a in small_rational(), b in small_rational(), c in small_rational(), s in small_rational()) {
            let (pa, pb, pc) = (PiScaled::new(a), PiScaled::new(b), PiScaled::new(c));
            prop_assert_eq!(&pa + &pb, &pb + &pa);
            prop_assert_eq!((&pa + &pb) + pc.clone(), pa.clone() + (&pb + &pc));
            prop_assert_eq!((&pa + &pb).scale(&s), pa.scale(&s) + pb.scale(&s));
        }
    }
}
