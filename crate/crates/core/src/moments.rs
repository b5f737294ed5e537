//! Exact weighted integrals over `[-1, 1]`.
//!
//! Every integral `∫ (1-x²)^(k∓1/2) x^m dx` is a rational multiple of π, so
//! values are [`PiScaled`]. [`moment`] uses the factorial closed forms;
//! [`moment_oracle`] goes through the Beta function and half-integer Gamma
//! values and shares no code with it.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::{factorial, from_biguint, pow2, PiScaled, Rational};
use crate::poly::Poly;

/// Selects the weight `(1-x²)^(k-1/2)` or `(1-x²)^(k+1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightSign {
    #[serde(rename = "minus")]
    MinusHalf,
    #[serde(rename = "plus")]
    PlusHalf,
}

impl WeightSign {
    pub const ALL: [WeightSign; 2] = [WeightSign::MinusHalf, WeightSign::PlusHalf];
}

impl fmt::Display for WeightSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightSign::MinusHalf => "minus",
            WeightSign::PlusHalf => "plus",
        })
    }
}

impl FromStr for WeightSign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "minus" => Ok(WeightSign::MinusHalf),
            "plus" => Ok(WeightSign::PlusHalf),
            _ => Err(Error::Unknown { what: "weight sign", value: s.to_owned() }),
        }
    }
}

/// `∫_{-1}^{1} (1-x²)^(k ± 1/2) x^m dx`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MomentKey {
    pub k: usize,
    pub sign: WeightSign,
    pub m: usize,
}

impl MomentKey {
    pub fn new(k: usize, sign: WeightSign, m: usize) -> Self {
        MomentKey { k, sign, m }
    }
}

/// Closed-form value of the moment integral.
pub fn moment(key: MomentKey) -> PiScaled {
    let MomentKey { k, sign, m } = key;
    if m % 2 == 1 {
        return PiScaled::zero();
    }
    let half_m = m / 2;
    let f = |n: usize| from_biguint(factorial(n));
    let value = match sign {
        // m! (2k)! / (2^(m+2k) ((m+2k)/2)! (m/2)! k!)
        WeightSign::MinusHalf => {
            f(m) * f(2 * k) / (from_biguint(pow2(m + 2 * k)) * f(half_m + k) * f(half_m) * f(k))
        }
        // (2k+2)! m! / (2^(2k+2+m) ((2k+2+m)/2)! (k+1)! (m/2)!)
        WeightSign::PlusHalf => {
            f(2 * k + 2) * f(m) / (from_biguint(pow2(2 * k + 2 + m)) * f(k + 1 + half_m) * f(k + 1) * f(half_m))
        }
    };
    PiScaled::new(value)
}

/// `c · π^(sqrt_pi_power/2)`
#[derive(Debug, Clone, PartialEq)]
struct GammaValue {
    coeff: Rational,
    sqrt_pi_power: i32,
}

impl GammaValue {
    /// `Γ(twice/2)` for a positive integer `twice`, built up from `Γ(1) = 1`
    /// or `Γ(1/2) = √π` with `Γ(s+1) = s Γ(s)`.
    fn at_half(twice: usize) -> Self {
        assert!(twice > 0, "Gamma has a pole at 0");
        let (mut s2, sqrt_pi_power) = if twice.is_multiple_of(2) { (2, 0) } else { (1, 1) };
        let mut coeff = Rational::one();
        while s2 < twice {
            coeff *= Rational::new(s2.into(), 2.into());
            s2 += 2;
        }
        GammaValue { coeff, sqrt_pi_power }
    }

    fn mul(&self, other: &GammaValue) -> GammaValue {
        GammaValue { coeff: &self.coeff * &other.coeff, sqrt_pi_power: self.sqrt_pi_power + other.sqrt_pi_power }
    }

    fn div(&self, other: &GammaValue) -> GammaValue {
        GammaValue { coeff: &self.coeff / &other.coeff, sqrt_pi_power: self.sqrt_pi_power - other.sqrt_pi_power }
    }
}

/// The same integral through `∫_{-1}^{1} (1-x²)^a x^m dx = B((m+1)/2, a+1)` for even `m`,
/// `B(p, q) = Γ(p)Γ(q)/Γ(p+q)`.
pub fn moment_oracle(key: MomentKey) -> PiScaled {
    let MomentKey { k, sign, m } = key;
    if m % 2 == 1 {
        return PiScaled::zero();
    }
    // doubled arguments: 2p = m+1, 2q = 2a+2
    let two_p = m + 1;
    let two_q = match sign {
        WeightSign::MinusHalf => 2 * k + 1,
        WeightSign::PlusHalf => 2 * k + 3,
    };
    let beta = GammaValue::at_half(two_p)
        .mul(&GammaValue::at_half(two_q))
        .div(&GammaValue::at_half(two_p + two_q));
    assert_eq!(beta.sqrt_pi_power, 2, "half-integer Gamma factors must pair into π");
    PiScaled::new(beta.coeff)
}

fn weighted_integral(p: &Poly, sign: WeightSign) -> PiScaled {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(m, c)| m % 2 == 0 && !c.is_zero())
        .map(|(m, c)| moment(MomentKey::new(0, sign, m)).scale(c))
        .sum()
}

/// `∫ w(x) p(x) x^j dx / π` for `j = 0..=max_j`, with `w = (1-x²)^(∓1/2)`.
///
/// Any inner product `⟨p, q⟩` is then `Σ_j q_j · v_j`, which avoids forming `p·q`.
pub fn moment_vector(p: &Poly, sign: WeightSign, max_j: usize) -> Vec<Rational> {
    let deg = p.degree().unwrap_or(0);
    let mu: Vec<Rational> =
        (0..=deg + max_j).map(|m| moment(MomentKey::new(0, sign, m)).coefficient().clone()).collect();
    (0..=max_j)
        .map(|j| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(i, c)| (i + j) % 2 == 0 && !c.is_zero())
                .map(|(i, c)| c * &mu[i + j])
                .sum()
        })
        .collect()
}

/// `⟨p, q⟩ = ∫_{-1}^{1} p(x) q(x) / √(1-x²) dx`
pub fn inner_t(p: &Poly, q: &Poly) -> PiScaled {
    weighted_integral(&(p * q), WeightSign::MinusHalf)
}

/// `⟨p, q⟩ = ∫_{-1}^{1} √(1-x²) p(x) q(x) dx`
pub fn inner_u(p: &Poly, q: &Poly) -> PiScaled {
    weighted_integral(&(p * q), WeightSign::PlusHalf)
}
