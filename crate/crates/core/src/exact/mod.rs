//! Exact coefficients: big rationals and the field Q(θ).

mod dense;
mod guard;
mod parse;
mod theta;

pub use dense::DensePoly;
pub use guard::{specialize_theta, ThetaGuard};
pub use parse::parse_rational;
pub use theta::ThetaFunction;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;
