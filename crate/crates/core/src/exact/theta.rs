use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::dense::DensePoly;
use super::Rational;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An element of the rational function field Q(θ).
///
/// Stored as numerator / denominator over Q with the denominator monic and
/// coprime to the numerator. Zero is `0/1`. Because the form is canonical,
/// derived equality and hashing agree with field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThetaFunction {
    num: DensePoly<Rational>,
    den: DensePoly<Rational>,
}

impl ThetaFunction {
    /// Builds `num / den` and reduces it. Fails if `den` is zero.
    pub fn new(num: DensePoly<Rational>, den: DensePoly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn theta() -> Self {
        Self::from_poly(DensePoly::x())
    }

    pub fn from_poly(num: DensePoly<Rational>) -> Self {
        ThetaFunction {
            num,
            den: DensePoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(DensePoly::constant(c))
    }

    pub fn numerator(&self) -> &DensePoly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &DensePoly<Rational> {
        &self.den
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The value as a rational constant, when θ does not occur.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    fn reduce(num: DensePoly<Rational>, den: DensePoly<Rational>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading().cloned().expect("nonzero denominator");
        if lc.is_one() {
            ThetaFunction { num, den }
        } else {
            let inv = Rational::one() / lc;
            ThetaFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul_ref(&rhs.recip_unchecked()))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip_unchecked())
    }

    fn recip_unchecked(&self) -> Self {
        Self::reduce(self.den.clone(), self.num.clone())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::reduce(num, &self.den * &rhs.den)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            return ThetaFunction {
                num: &self.num * &rhs.num,
                den: DensePoly::one(),
            };
        }
        // Cross-cancel before multiplying so the product is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_rem(&g1).0 * &rhs.num.div_rem(&g2).0;
        let den = &self.den.div_rem(&g2).0 * &rhs.den.div_rem(&g1).0;
        Self::reduce(num, den)
    }

    /// Substitutes a rational value for θ. Fails if the denominator vanishes
    /// there. Parameter exclusions are handled by
    /// [`specialize_theta`](super::specialize_theta).
    pub fn eval(&self, value: &Rational) -> Result<Rational> {
        let d = self.den.eval(value);
        if d.is_zero() {
            return Err(Error::Pole {
                value: value.clone(),
            });
        }
        Ok(self.num.eval(value) / d)
    }
}

impl Zero for ThetaFunction {
    fn zero() -> Self {
        ThetaFunction {
            num: DensePoly::zero(),
            den: DensePoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ThetaFunction {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for ThetaFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for ThetaFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&-rhs)
    }
}

impl Mul for ThetaFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Div for ThetaFunction {
    type Output = Self;
    /// Panics on division by zero; use [`ThetaFunction::checked_div`] to get
    /// an error instead.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero in Q(theta)")
    }
}

impl Neg for ThetaFunction {
    type Output = Self;
    fn neg(self) -> Self {
        ThetaFunction {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Scalar for ThetaFunction {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        ThetaFunction::checked_div(self, rhs).ok()
    }
}

impl From<Rational> for ThetaFunction {
    fn from(q: Rational) -> Self {
        Self::constant(q)
    }
}

impl From<i64> for ThetaFunction {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &DensePoly<Rational>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        first = false;
        let a = c.abs();
        match k {
            0 => write!(f, "{a}")?,
            _ => {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "theta")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
    }
    Ok(())
}

/// Renders as an expanded fraction in the literal symbol `theta`, e.g.
/// `(2*theta)/(theta+1)`; polynomials are printed without a denominator.
impl fmt::Display for ThetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write_poly(f, &self.num);
        }
        write!(f, "(")?;
        write_poly(f, &self.num)?;
        write!(f, ")/(")?;
        write_poly(f, &self.den)?;
        write!(f, ")")
    }
}

impl fmt::Debug for ThetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ThetaFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_theta_function(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th() -> ThetaFunction {
        ThetaFunction::theta()
    }

    fn k(v: i64) -> ThetaFunction {
        ThetaFunction::from(v)
    }

    #[test]
    fn cancels_common_factor() {
        let a = (th() * th() - k(1)) / (th() + k(1));
        assert_eq!(a, th() - k(1));
        assert!(a.is_polynomial());
    }

    #[test]
    fn common_denominator() {
        let a = th() + k(1) / th();
        assert_eq!(a.to_string(), "(theta^2+1)/(theta)");
    }

    #[test]
    fn field_inverse() {
        let a = k(1) / (th() - k(1));
        assert_eq!(a * (th() - k(1)), k(1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(th().checked_div(&k(0)), Err(Error::DivisionByZero));
        assert_eq!(k(0).recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn denominator_is_monic() {
        let a = k(1) / (k(2) * th() + k(2));
        assert_eq!(a.denominator().leading(), Some(&Rational::one()));
        assert_eq!(a.to_string(), "(1/2)/(theta+1)");
    }

    #[test]
    fn display_forms() {
        assert_eq!((k(2) * th() / (th() + k(1))).to_string(), "(2*theta)/(theta+1)");
        assert_eq!(k(0).to_string(), "0");
        assert_eq!((-th() * th() + k(3)).to_string(), "-theta^2+3");
        let half = ThetaFunction::constant(Rational::new(1.into(), 2.into()));
        assert_eq!((half * th()).to_string(), "1/2*theta");
    }

    #[test]
    fn eval_reports_poles() {
        let a = (th() - k(1)) / th();
        assert_eq!(a.eval(&Rational::from_int(2)).unwrap(), Rational::new(1.into(), 2.into()));
        assert!(matches!(a.eval(&Rational::zero()), Err(Error::Pole { .. })));
    }
}
