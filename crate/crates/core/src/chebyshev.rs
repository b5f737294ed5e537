//! Chebyshev polynomials of the first and second kind.
//!
//! The three-term recurrence is the canonical construction. The Rodrigues
//! formulas, the surd closed forms and the generating functions are
//! independent routes used to check it.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::check::{self, compare_coeffs, compare_poly, Verdict};
use crate::error::{Error, Result};
use crate::exact::{factorial, from_biguint, int, pow2, Rational};
use crate::poly::Poly;
use crate::series::Series;
use crate::surd::SurdPoly;
use crate::weighted::WeightedFn;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChebKind {
    /// `T_n`
    #[serde(rename = "T")]
    FirstKind,
    /// `U_n`
    #[serde(rename = "U")]
    SecondKind,
}

impl ChebKind {
    pub const ALL: [ChebKind; 2] = [ChebKind::FirstKind, ChebKind::SecondKind];

    pub fn letter(self) -> &'static str {
        match self {
            ChebKind::FirstKind => "T",
            ChebKind::SecondKind => "U",
        }
    }

    pub fn poly(self, n: usize) -> Poly {
        match self {
            ChebKind::FirstKind => cheb_t(n),
            ChebKind::SecondKind => cheb_u(n),
        }
    }

    /// `[P_0, ..., P_max_n]`
    pub fn table(self, max_n: usize) -> Vec<Poly> {
        let first = match self {
            ChebKind::FirstKind => Poly::x(),
            ChebKind::SecondKind => Poly::from_integers(&[0, 2]),
        };
        recurrence(first, max_n)
    }

    /// Leading coefficient of the degree-`n` member.
    pub fn leading(self, n: usize) -> Rational {
        match (self, n) {
            (ChebKind::FirstKind, 0) => Rational::one(),
            (ChebKind::FirstKind, n) => from_biguint(pow2(n - 1)),
            (ChebKind::SecondKind, n) => from_biguint(pow2(n)),
        }
    }
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for ChebKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" => Ok(ChebKind::FirstKind),
            "U" | "u" => Ok(ChebKind::SecondKind),
            _ => Err(Error::Unknown { what: "Chebyshev basis", value: s.to_owned() }),
        }
    }
}

/// `P_{n+1} = 2x P_n - P_{n-1}` with `P_0 = 1` and the given `P_1`.
fn recurrence(first: Poly, max_n: usize) -> Vec<Poly> {
    let two_x = Poly::from_integers(&[0, 2]);
    let mut out = vec![Poly::one()];
    if max_n >= 1 {
        out.push(first);
    }
    for n in 2..=max_n {
        let next = &(&two_x * &out[n - 1]) - &out[n - 2];
        out.push(next);
    }
    out
}

pub fn cheb_t(n: usize) -> Poly {
    ChebKind::FirstKind.table(n).pop().unwrap()
}

pub fn cheb_u(n: usize) -> Poly {
    ChebKind::SecondKind.table(n).pop().unwrap()
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn finish_rodrigues(n: usize, w: WeightedFn) -> Result<Poly> {
    match w.as_poly() {
        Some(p) => Ok(p.clone()),
        None => Err(Error::ResidualWeight { n, half_power: w.half_power() }),
    }
}

/// `T_n = (-1)^n 2^n n!/(2n)! · (1-x²)^(1/2) · d^n/dx^n (1-x²)^(n-1/2)`
pub fn cheb_t_rodrigues(n: usize) -> Result<Poly> {
    let prefactor = sign(n) * from_biguint(pow2(n) * factorial(n)) / from_biguint(factorial(2 * n));
    let w = WeightedFn::weight(2 * n as i64 - 1).nth_derivative(n).mul_weight(1).scale(&prefactor);
    finish_rodrigues(n, w)
}

/// `U_n = (-1)^n 2^n (n+1)!/(2n+1)! · (1-x²)^(-1/2) · d^n/dx^n (1-x²)^(n+1/2)`
pub fn cheb_u_rodrigues(n: usize) -> Result<Poly> {
    let prefactor = sign(n) * from_biguint(pow2(n) * factorial(n + 1)) / from_biguint(factorial(2 * n + 1));
    let w = WeightedFn::weight(2 * n as i64 + 1).nth_derivative(n).mul_weight(-1).scale(&prefactor);
    finish_rodrigues(n, w)
}

/// `T_n = ((x + √(x²-1))^n + (x - √(x²-1))^n)/2`
pub fn cheb_t_surd(n: usize) -> Result<Poly> {
    let root = SurdPoly::chebyshev_root();
    let sum = &root.pow(n) + &root.conjugate().pow(n);
    if !sum.surd.is_zero() {
        return Err(Error::SurdResidue { n, part: "surd" });
    }
    Ok(sum.rational.scale(&Rational::new(1.into(), 2.into())))
}

/// `U_n = ((x + √(x²-1))^(n+1) - (x - √(x²-1))^(n+1)) / (2√(x²-1))`
pub fn cheb_u_surd(n: usize) -> Result<Poly> {
    let root = SurdPoly::chebyshev_root();
    let diff = &root.pow(n + 1) - &root.conjugate().pow(n + 1);
    if !diff.rational.is_zero() {
        return Err(Error::SurdResidue { n, part: "rational" });
    }
    Ok(diff.surd.scale(&Rational::new(1.into(), 2.into())))
}

/// Expands `(1 - x0·t)/(1 - 2·x0·t + t²)` (first kind) or
/// `1/(1 - 2·x0·t + t²)` (second kind) to `t^order` and compares with the
/// values `P_0(x0), ..., P_order(x0)`.
pub fn gen_func_check(kind: ChebKind, x0: &Rational, order: usize) -> Verdict {
    let denom = Series::new(vec![int(1), -(x0 * int(2)), int(1)], order);
    let numer = match kind {
        ChebKind::FirstKind => Series::new(vec![int(1), -x0.clone()], order),
        ChebKind::SecondKind => Series::new(vec![int(1)], order),
    };
    let series = numer.div(&denom).expect("constant term is 1");
    let values: Vec<Rational> = kind.table(order).iter().map(|p| p.eval(x0)).collect();
    let label = match kind {
        ChebKind::FirstKind => "genfunc-T",
        ChebKind::SecondKind => "genfunc-U",
    };
    compare_coeffs(&format!("{label}@{x0}"), order, &values, series.coeffs())
}

/// Results of the derivative/integral relations at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalculusReport {
    /// `T_n' = n U_{n-1}`
    pub t_derivative: Verdict,
    /// `(x²-1) U_n' = (n+1) T_{n+1} - x U_n`
    pub u_derivative: Verdict,
    /// `∫ U_n = T_{n+1}/(n+1)` up to a constant
    pub u_integral: Verdict,
    /// `d/dx [n T_{n+1}/(n²-1) - x T_n/(n-1)] = T_n`; `None` for `n < 2`.
    pub t_integral: Option<Verdict>,
}

impl CalculusReport {
    pub fn verdict(&self) -> Verdict {
        check::all([
            self.t_derivative.clone(),
            self.u_derivative.clone(),
            self.u_integral.clone(),
            self.t_integral.clone().unwrap_or(Ok(())),
        ])
    }
}

pub fn verify_cheb_calculus(n: usize) -> CalculusReport {
    let t = ChebKind::FirstKind.table(n + 1);
    let u = ChebKind::SecondKind.table(n);
    let nn = int(n as i64);

    let t_derivative = if n == 0 {
        compare_poly("T-derivative", n, &Poly::default(), &t[0].derivative())
    } else {
        compare_poly("T-derivative", n, &u[n - 1].scale(&nn), &t[n].derivative())
    };

    let x2_minus_1 = Poly::from_integers(&[-1, 0, 1]);
    let lhs = &x2_minus_1 * &u[n].derivative();
    let rhs = &t[n + 1].scale(&int(n as i64 + 1)) - &(&Poly::x() * &u[n]);
    let u_derivative = compare_poly("U-derivative", n, &rhs, &lhs);

    let anti = u[n].antiderivative();
    let expected = t[n + 1].scale(&Rational::new(1.into(), (n as i64 + 1).into()));
    let u_integral = compare_coeffs("U-antiderivative", n, &expected.coeffs()[1..], anti.coeffs().get(1..).unwrap_or(&[]));

    let t_integral = (n >= 2).then(|| {
        let a = t[n + 1].scale(&(nn.clone() / int(n as i64 * n as i64 - 1)));
        let b = (&Poly::x() * &t[n]).scale(&int(n as i64 - 1).recip());
        compare_poly("T-antiderivative", n, &t[n], &(&a - &b).derivative())
    });

    CalculusReport { t_derivative, u_derivative, u_integral, t_integral }
}

/// `(1-x²) y'' - x y' + n² y = 0` for `T_n`, `(1-x²) y'' - 3x y' + n(n+2) y = 0` for `U_n`.
pub fn verify_ode(kind: ChebKind, n: usize) -> Verdict {
    let y = kind.poly(n);
    let d1 = y.derivative();
    let d2 = d1.derivative();
    let (a, b) = match kind {
        ChebKind::FirstKind => (int(1), int(n as i64 * n as i64)),
        ChebKind::SecondKind => (int(3), int(n as i64 * (n as i64 + 2))),
    };
    let residual = &(&(&Poly::one_minus_x2() * &d2) - &(&Poly::x() * &d1).scale(&a)) + &y.scale(&b);
    compare_poly(&format!("ode-{kind}"), n, &Poly::default(), &residual)
}

/// Endpoint values forced by `x = cos θ` at `θ = 0, π`, integrality and the
/// leading coefficient.
pub fn verify_structure(kind: ChebKind, n: usize) -> Verdict {
    let p = kind.poly(n);
    let label = format!("structure-{kind}");
    let (at_one, at_minus_one) = match kind {
        ChebKind::FirstKind => (int(1), sign(n)),
        ChebKind::SecondKind => (int(n as i64 + 1), sign(n) * int(n as i64 + 1)),
    };
    check::all([
        compare_coeffs(&label, n, &[kind.leading(n)], &[p.leading_coeff().cloned().unwrap_or_default()]),
        compare_coeffs(&label, n, &[at_one], &[p.eval(&int(1))]),
        compare_coeffs(&label, n, &[at_minus_one], &[p.eval(&int(-1))]),
        if p.is_integral() {
            Ok(())
        } else {
            Err(check::Mismatch::new(label.clone(), n).values("integer coefficients", &p))
        },
    ])
}
