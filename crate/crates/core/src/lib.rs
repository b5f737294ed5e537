//! Exact Chebyshev expansions of Bernoulli, Euler and Hermite polynomials.
//!
//! Everything is computed over arbitrary-precision rationals. Each
//! expansion `p(x) = sum_k C_k T_k(x)` (or in the `U_k` basis) is produced
//! from explicit closed-form coefficients and checked against two
//! independent routes: exact weighted-inner-product projection and a
//! triangular solve. See [`expansions::cross_validate`].
//!
//! ```
//! use chebyshev_expansions::chebyshev::ChebKind;
//! use chebyshev_expansions::expansions::{cross_validate, Family};
//!
//! let report = cross_validate(Family::Bernoulli, ChebKind::FirstKind, 3);
//! assert!(report.passed());
//! let coeffs: Vec<String> = report.closed_form.coefficients.iter().map(|c| c.to_string()).collect();
//! assert_eq!(coeffs, ["-3/4", "5/4", "-3/4", "1/4"]);
//! ```

pub mod check;
pub mod chebyshev;
pub mod error;
pub mod exact;
pub mod expansions;
pub mod families;
pub mod moments;
pub mod output;
pub mod poly;
pub mod series;
pub mod surd;
pub mod verify;
pub mod weighted;

pub use chebyshev::ChebKind;
pub use error::{Error, Result};
pub use exact::{PiScaled, Rational};
pub use expansions::{Expansion, Family, Source};
pub use poly::Poly;
