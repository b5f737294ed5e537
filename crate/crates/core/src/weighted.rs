//! Functions of the form `p(x)·(1-x²)^(m/2)` and their exact derivatives.
//!
//! The family is closed under differentiation:
//! `d/dx [p·(1-x²)^(m/2)] = [p'·(1-x²) - m·x·p]·(1-x²)^((m-2)/2)`,
//! which is what the Rodrigues constructions of `T_n` and `U_n` need.

use std::ops::Add;

use crate::exact::{int, Rational};
use crate::poly::Poly;

/// `poly·(1-x²)^(half_power/2)`, kept canonical: `poly` is never divisible
/// by `1-x²` (such factors are moved into `half_power`), and the zero
/// function has `half_power == 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedFn {
    poly: Poly,
    half_power: i64,
}

impl WeightedFn {
    pub fn new(poly: Poly, half_power: i64) -> Self {
        let mut w = WeightedFn { poly, half_power };
        w.canonicalize();
        w
    }

    /// `(1-x²)^(half_power/2)`
    pub fn weight(half_power: i64) -> Self {
        WeightedFn::new(Poly::one(), half_power)
    }

    fn canonicalize(&mut self) {
        if self.poly.is_zero() {
            self.half_power = 0;
            return;
        }
        let factor = Poly::one_minus_x2();
        while let Some(q) = self.poly.exact_div(&factor) {
            self.poly = q;
            self.half_power += 2;
        }
    }

    pub fn zero() -> Self {
        WeightedFn { poly: Poly::default(), half_power: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn half_power(&self) -> i64 {
        self.half_power
    }

    pub fn scale(&self, c: &Rational) -> Self {
        WeightedFn::new(self.poly.scale(c), self.half_power)
    }

    /// Multiply by `(1-x²)^(delta/2)`.
    pub fn mul_weight(&self, delta: i64) -> Self {
        WeightedFn::new(self.poly.clone(), self.half_power + delta)
    }

    pub fn derivative(&self) -> Self {
        if self.poly.is_zero() {
            return self.clone();
        }
        let m = int(self.half_power);
        let lhs = &self.poly.derivative() * &Poly::one_minus_x2();
        let rhs = (&Poly::x() * &self.poly).scale(&m);
        WeightedFn::new(&lhs - &rhs, self.half_power - 2)
    }

    /// The `k`-fold derivative.
    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |w, _| w.derivative())
    }

    /// The plain polynomial, when no weight factor remains.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.half_power == 0).then_some(&self.poly)
    }

    /// Rewrites `self` over the weight `(1-x²)^(target/2)` when `target` is at
    /// most the current power and has the same parity.
    fn lowered_to(&self, target: i64) -> Option<Poly> {
        let gap = self.half_power - target;
        if gap < 0 || gap % 2 != 0 {
            return None;
        }
        let factor = (0..gap / 2).fold(Poly::one(), |acc, _| &acc * &Poly::one_minus_x2());
        Some(&self.poly * &factor)
    }
}

/// Sum of two weighted functions whose half-powers share a parity; `None`
/// otherwise (the sum would leave the family).
impl<'a> Add<&'a WeightedFn> for &'a WeightedFn {
    type Output = Option<WeightedFn>;

    fn add(self, rhs: &WeightedFn) -> Option<WeightedFn> {
        if self.poly.is_zero() {
            return Some(rhs.clone());
        }
        if rhs.poly.is_zero() {
            return Some(self.clone());
        }
        let target = self.half_power.min(rhs.half_power);
        let a = self.lowered_to(target)?;
        let b = rhs.lowered_to(target)?;
        Some(WeightedFn::new(&a + &b, target))
    }
}
