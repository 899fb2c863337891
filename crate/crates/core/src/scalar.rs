//! The coefficient abstraction shared by every construction in the crate.
//!
//! All algebra (symmetric functions, sparse polynomials, operators, the
//! bilinear form) is written against [`Scalar`], a commutative field with a
//! distinguished embedding of the rationals. The coupling constant θ is
//! always passed in as a value of the scalar type, so the same code runs with
//!
//! - [`ThetaFunction`](crate::ThetaFunction): θ kept symbolic, every identity
//!   checked as an identity of rational functions;
//! - [`Rational`](crate::Rational): θ fixed to an exact rational value;
//! - `f64` / `Complex64`: floating-point evaluation.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::exact::Rational;

/// A commutative field usable as a coefficient type.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_int(k: i64) -> Self {
        Self::from_rational(&Rational::from_integer(k.into()))
    }

    /// Division that reports a zero divisor instead of panicking.
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.clone() / rhs.clone())
        }
    }

    /// Zero test used when deciding whether an identity holds. Exact types
    /// compare against zero; floating types allow rounding noise.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

const FLOAT_ZERO_TOL: f64 = 1e-9;

impl Scalar for f64 {
    fn from_rational(q: &Rational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn from_int(k: i64) -> Self {
        k as f64
    }

    fn is_negligible(&self) -> bool {
        self.abs() < FLOAT_ZERO_TOL
    }
}

impl Scalar for Complex64 {
    fn from_rational(q: &Rational) -> Self {
        Complex64::new(q.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn from_int(k: i64) -> Self {
        Complex64::new(k as f64, 0.0)
    }

    fn is_negligible(&self) -> bool {
        self.norm() < FLOAT_ZERO_TOL
    }
}

/// Rising factorial (c)_k = c (c+1) ... (c+k-1).
pub fn rising_factorial<C: Scalar>(c: &C, k: usize) -> C {
    (0..k).fold(C::one(), |acc, i| acc * (c.clone() + C::from_int(i as i64)))
}

pub fn factorial<C: Scalar>(k: usize) -> C {
    (1..=k).fold(C::one(), |acc, i| acc * C::from_int(i as i64))
}
