//! Jack and super-Jack polynomials, deformed Calogero–Moser–Sutherland
//! operators and the associated bilinear form, in exact arithmetic over
//! Q(θ) or at a specialized θ.
//!
//! Everything is generic over a [`Scalar`]; the aliases below fix the
//! common choices.

pub mod deformed;
pub mod error;
pub mod exact;
pub mod forms;
pub mod operators;
pub mod partition;
pub mod scalar;
pub mod symfunc;
pub mod verify;

pub use deformed::{bound_check, BoundReport, BoundSample, DeformedSystem, MPoly, SuperElement};
pub use error::{Error, Result};
pub use exact::{parse_rational, specialize_theta, DensePoly, Rational, ThetaFunction, ThetaGuard};
pub use forms::{GramReport, KernelComponent};
pub use operators::{dunkl_apply, symmetric_integral_apply, Flavor, HarmonicMode, Operator, Sign};
pub use partition::{BoxStats, Dominance, HookProfile, Partition};
pub use scalar::Scalar;
pub use symfunc::{spec_formula, Basis, JackAlgebra, SymFunc};

pub type SymbolicAlgebra = JackAlgebra<ThetaFunction>;
pub type SymbolicSystem = DeformedSystem<ThetaFunction>;
pub type SymbolicPoly = MPoly<ThetaFunction>;
pub type SymbolicSym = SymFunc<ThetaFunction>;

/// θ fixed to an exact rational.
pub type RationalSystem = DeformedSystem<Rational>;
pub type NumericSystem = DeformedSystem<f64>;
pub type ComplexSystem = DeformedSystem<num_complex::Complex64>;
