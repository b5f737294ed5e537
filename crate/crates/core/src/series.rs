//! Truncated power series in `t`, used as an independent oracle for the
//! generating functions of the classical families and of `T_n`, `U_n`.

use std::ops::{Add, Mul};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{factorial, from_biguint, int, Rational};

/// Coefficients of `t^0..=t^order`; everything past `order` is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `e^(a·t)` truncated at `order`.
    pub fn exp_linear(a: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = int(1);
        for n in 0..=order {
            coeffs.push(&power / from_biguint(factorial(n)));
            power *= a;
        }
        Series { coeffs }
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        Series { coeffs: truncated_product(&self.coeffs, &rhs.coeffs, self.order().min(rhs.order())) }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let s: Rational = (1..=n).map(|i| &self.coeffs[i] * &out[n - i]).sum();
            out.push(-s * &inv0);
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, rhs: &Series) -> Result<Series> {
        Ok(self.mul(&rhs.inverse()?))
    }
}

/// Cauchy product of two coefficient sequences, keeping `t^0..=t^order`.
/// Generic so it also serves series whose coefficients are polynomials in `x`.
pub fn truncated_product<T>(a: &[T], b: &[T], order: usize) -> Vec<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    (0..=order)
        .map(|n| {
            let mut acc = T::zero();
            for i in 0..=n {
                if let (Some(x), Some(y)) = (a.get(i), b.get(n - i)) {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
        .collect()
}
