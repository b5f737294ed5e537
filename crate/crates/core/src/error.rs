use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// A Rodrigues construction left a nonzero power of (1-x^2) behind.
    #[error("residual weight (1-x^2)^({half_power}/2) after Rodrigues construction of degree {n}")]
    ResidualWeight { n: usize, half_power: i64 },

    /// The surd part of a closed-form Chebyshev construction failed to cancel.
    #[error("surd closed form for degree {n} left a nonzero {part} part")]
    SurdResidue { n: usize, part: &'static str },

    #[error("power series has a zero constant term and cannot be inverted")]
    NonInvertibleSeries,

    #[error("unknown {what}: {value:?}")]
    Unknown { what: &'static str, value: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
