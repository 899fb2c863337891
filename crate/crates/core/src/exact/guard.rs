use std::fmt;

use num_traits::Signed;

use super::{Rational, ThetaFunction};
use crate::error::{Error, Result};

/// Which parameter values a specialization must avoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaGuard {
    None,
    /// θ = i/j with i ∈ -Z≥0, j ∈ N, i.e. zero and the negative rationals.
    /// Jack coefficients and the power-sum pairing are singular there.
    NonPositiveRational,
    /// The previous set together with θ = i/j, 1 ≤ i ≤ m, 1 ≤ j ≤ n, where
    /// some SC_λ(1^{n+m}) with λ in the fat hook H(n,m) vanishes.
    FatHook { n: usize, m: usize },
}

impl fmt::Display for ThetaGuard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaGuard::None => write!(f, "none"),
            ThetaGuard::NonPositiveRational => write!(f, "non-positive-rational"),
            ThetaGuard::FatHook { n, m } => write!(f, "fat-hook({n},{m})"),
        }
    }
}

impl ThetaGuard {
    /// Returns the violated rule, if any.
    pub fn violation(&self, value: &Rational) -> Option<String> {
        if matches!(self, ThetaGuard::None) {
            return None;
        }
        if !value.is_positive() {
            return Some("theta = i/j with i in -Z>=0, j in N (zero or negative rational)".into());
        }
        if let ThetaGuard::FatHook { n, m } = *self {
            // value = p/q in lowest terms equals i/j with i ≤ m, j ≤ n exactly
            // when p ≤ m and q ≤ n.
            let p = value.numer();
            let q = value.denom();
            if *p <= m.into() && *q <= n.into() {
                return Some(format!(
                    "theta = i/j with 1 <= i <= {m}, 1 <= j <= {n} (SC(1^(n+m)) may vanish)"
                ));
            }
        }
        None
    }

    pub fn check(&self, value: &Rational) -> Result<()> {
        match self.violation(value) {
            Some(rule) => Err(Error::ExcludedParameter {
                value: value.clone(),
                rule,
            }),
            None => Ok(()),
        }
    }
}

/// Evaluates `a` at θ = `value` after checking `guard`.
pub fn specialize_theta(a: &ThetaFunction, value: &Rational, guard: ThetaGuard) -> Result<Rational> {
    guard.check(value)?;
    a.eval(value)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn plain_substitution() {
        let a: ThetaFunction = "(theta-1)/theta".parse().unwrap();
        assert_eq!(specialize_theta(&a, &r(2, 1), ThetaGuard::None).unwrap(), r(1, 2));
    }

    #[test]
    fn negative_rational_excluded() {
        let err = specialize_theta(&ThetaFunction::theta(), &r(-1, 2), ThetaGuard::NonPositiveRational);
        assert!(matches!(err, Err(Error::ExcludedParameter { .. })));
        assert!(ThetaGuard::NonPositiveRational.check(&Rational::from_int(0)).is_err());
        assert!(ThetaGuard::NonPositiveRational.check(&r(1, 3)).is_ok());
    }

    #[test]
    fn fat_hook_values_excluded() {
        let guard = ThetaGuard::FatHook { n: 1, m: 1 };
        assert!(specialize_theta(&ThetaFunction::theta(), &r(1, 1), guard).is_err());
        assert!(guard.check(&r(2, 1)).is_ok());
        assert!(guard.check(&r(1, 2)).is_ok());
        let wide = ThetaGuard::FatHook { n: 2, m: 3 };
        assert!(wide.check(&r(3, 2)).is_err());
        assert!(wide.check(&r(1, 2)).is_err());
        assert!(wide.check(&r(4, 1)).is_ok());
        assert!(wide.check(&r(1, 3)).is_ok());
    }

    #[test]
    fn pole_is_reported() {
        let a: ThetaFunction = "1/(theta-2)".parse().unwrap();
        assert!(matches!(
            specialize_theta(&a, &r(2, 1), ThetaGuard::NonPositiveRational),
            Err(Error::Pole { .. })
        ));
    }
}
