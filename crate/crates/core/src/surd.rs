//! The ring `Q[x][√(x²-1)]`, enough to expand `(x ± √(x²-1))^n` exactly.

use std::ops::{Add, Mul, Sub};

use crate::poly::Poly;

/// `rational + surd·√(x²-1)`
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SurdPoly {
    pub rational: Poly,
    pub surd: Poly,
}

fn x2_minus_1() -> Poly {
    Poly::from_integers(&[-1, 0, 1])
}

impl SurdPoly {
    pub fn new(rational: Poly, surd: Poly) -> Self {
        SurdPoly { rational, surd }
    }

    pub fn one() -> Self {
        SurdPoly::new(Poly::one(), Poly::default())
    }

    /// `x + √(x²-1)`
    pub fn chebyshev_root() -> Self {
        SurdPoly::new(Poly::x(), Poly::one())
    }

    /// Flips the sign of the surd part.
    pub fn conjugate(&self) -> Self {
        SurdPoly::new(self.rational.clone(), -&self.surd)
    }

    /// Square-and-multiply power.
    pub fn pow(&self, mut n: usize) -> Self {
        let mut acc = SurdPoly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl<'a> Mul<&'a SurdPoly> for &'a SurdPoly {
    type Output = SurdPoly;

    fn mul(self, rhs: &SurdPoly) -> SurdPoly {
        let rational = &(&self.rational * &rhs.rational) + &(&x2_minus_1() * &(&self.surd * &rhs.surd));
        let surd = &(&self.rational * &rhs.surd) + &(&rhs.rational * &self.surd);
        SurdPoly { rational, surd }
    }
}

impl<'a> Add<&'a SurdPoly> for &'a SurdPoly {
    type Output = SurdPoly;

    fn add(self, rhs: &SurdPoly) -> SurdPoly {
        SurdPoly::new(&self.rational + &rhs.rational, &self.surd + &rhs.surd)
    }
}

impl<'a> Sub<&'a SurdPoly> for &'a SurdPoly {
    type Output = SurdPoly;

    fn sub(self, rhs: &SurdPoly) -> SurdPoly {
        SurdPoly::new(&self.rational - &rhs.rational, &self.surd - &rhs.surd)
    }
}
