//! Polynomials in x_1..x_n, y_1..y_m, the map φ_{n,m} and super-Jack
//! polynomials.

mod bound;
mod mpoly;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::{specialize_theta, Rational, ThetaFunction, ThetaGuard};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::symfunc::{Basis, JackAlgebra, SymFunc};

pub use bound::{bound_check, sample_points, BoundReport, BoundSample};
pub use mpoly::{output_order, Exps, MPoly};

/// An element of Λ_{n,m}, optionally with a preimage under φ_{n,m}.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperElement<C> {
    pub poly: MPoly<C>,
    /// Power-sum representative f with φ_{n,m}(f) = poly.
    pub representative: Option<SymFunc<C>>,
    /// Set by [`DeformedSystem::super_jack`] when λ ∉ H_{n,m}; the
    /// polynomial is then expected to be zero.
    pub outside_fat_hook: bool,
}

impl<C: Scalar> SuperElement<C> {
    pub fn bare(poly: MPoly<C>) -> Self {
        SuperElement {
            poly,
            representative: None,
            outside_fat_hook: false,
        }
    }
}

/// The deformed setting for fixed (n, m) and θ.
///
/// Holds the Jack algebra it draws on, and memoizes φ-images of power-sum
/// monomials and super-Jack polynomials. Both memos are safe for concurrent
/// readers with serialized insertion.
pub struct DeformedSystem<C> {
    n: usize,
    m: usize,
    algebra: Arc<JackAlgebra<C>>,
    power_images: RwLock<HashMap<Partition, Arc<MPoly<C>>>>,
    super_jacks: RwLock<HashMap<Partition, Arc<SuperElement<C>>>>,
}

impl DeformedSystem<ThetaFunction> {
    pub fn symbolic(n: usize, m: usize) -> Self {
        Self::new(n, m, Arc::new(JackAlgebra::symbolic()))
    }
}

impl<C: Scalar> DeformedSystem<C> {
    pub fn new(n: usize, m: usize, algebra: Arc<JackAlgebra<C>>) -> Self {
        DeformedSystem {
            n,
            m,
            algebra,
            power_images: RwLock::new(HashMap::new()),
            super_jacks: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_theta(n: usize, m: usize, theta: C) -> Self {
        Self::new(n, m, Arc::new(JackAlgebra::new(theta)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nvars(&self) -> usize {
        self.n + self.m
    }

    pub fn theta(&self) -> &C {
        self.algebra.theta()
    }

    pub fn algebra(&self) -> &Arc<JackAlgebra<C>> {
        &self.algebra
    }

    /// p(k): 0 on the x-block, 1 on the y-block (0-based index).
    pub fn parity(&self, k: usize) -> u32 {
        u32::from(k >= self.n)
    }

    /// (−θ)^e for integer e.
    pub fn neg_theta_pow(&self, e: i32) -> C {
        let base = -self.theta().clone();
        if e >= 0 {
            base.pow(e as u32)
        } else {
            (C::one() / base).pow(e.unsigned_abs())
        }
    }

    pub fn zero(&self) -> MPoly<C> {
        MPoly::zero(self.n, self.m)
    }

    pub fn one(&self) -> MPoly<C> {
        MPoly::one(self.n, self.m)
    }

    pub fn var(&self, k: usize) -> MPoly<C> {
        MPoly::var(self.n, self.m, k)
    }

    pub fn x(&self, i: usize) -> MPoly<C> {
        assert!(i < self.n);
        self.var(i)
    }

    pub fn y(&self, j: usize) -> MPoly<C> {
        assert!(j < self.m);
        self.var(self.n + j)
    }

    /// p_{r,θ} = Σ x_i^r − (1/θ) Σ y_j^r = Σ_k (−θ)^{−p(k)} x_k^r.
    pub fn deformed_power_sum(&self, r: u32) -> MPoly<C> {
        let mut out = self.zero();
        let y_coeff = self.neg_theta_pow(-1);
        for k in 0..self.nvars() {
            let mut e = vec![0; self.nvars()];
            e[k] = r;
            let c = if self.parity(k) == 0 { C::one() } else { y_coeff.clone() };
            out.add_term(e, c);
        }
        out
    }

    /// φ_{n,m}(p_λ), memoized.
    pub fn power_image(&self, lam: &Partition) -> Arc<MPoly<C>> {
        if let Some(p) = self.power_images.read().expect("phi cache poisoned").get(lam) {
            return p.clone();
        }
        let image = match lam.parts().split_last() {
            None => self.one(),
            Some((&last, rest)) => {
                let head = self.power_image(&Partition::from(rest));
                head.mul(&self.deformed_power_sum(last as u32))
            }
        };
        let image = Arc::new(image);
        self.power_images
            .write()
            .expect("phi cache poisoned")
            .entry(lam.clone())
            .or_insert(image)
            .clone()
    }

    /// φ_{n,m}(f) as a bare polynomial.
    pub fn phi_poly(&self, f: &SymFunc<C>) -> MPoly<C> {
        let mut out = self.zero();
        for (lam, c) in f.to_power_sum().terms() {
            out = out.add(&self.power_image(lam).scale(c));
        }
        out
    }

    /// φ_{n,m}(f) with f kept as representative.
    pub fn phi(&self, f: &SymFunc<C>) -> SuperElement<C> {
        let rep = f.to_power_sum();
        SuperElement {
            poly: self.phi_poly(&rep),
            representative: Some(rep),
            outside_fat_hook: false,
        }
    }

    /// SP_λ = φ_{n,m}(P_λ). For λ ∉ H_{n,m} the image is still computed and
    /// the result is flagged.
    pub fn super_jack(&self, lam: &Partition) -> Arc<SuperElement<C>> {
        if let Some(e) = self.super_jacks.read().expect("super-jack cache poisoned").get(lam) {
            return e.clone();
        }
        let mut el = self.phi(&self.algebra.jack_p(lam));
        el.outside_fat_hook = !lam.in_fat_hook(self.n, self.m);
        let el = Arc::new(el);
        self.super_jacks
            .write()
            .expect("super-jack cache poisoned")
            .entry(lam.clone())
            .or_insert(el)
            .clone()
    }

    /// SC_λ = |λ|!/∏(a+1+θl) · SP_λ.
    pub fn super_c(&self, lam: &Partition) -> Result<SuperElement<C>> {
        if !lam.in_fat_hook(self.n, self.m) {
            return Err(Error::NotInFatHook {
                partition: lam.clone(),
                n: self.n,
                m: self.m,
            });
        }
        let factor = lam.kaneko_factor(self.theta());
        let sp = self.super_jack(lam);
        Ok(SuperElement {
            poly: sp.poly.scale(&factor),
            representative: sp.representative.as_ref().map(|r| r.scale(&factor)),
            outside_fat_hook: false,
        })
    }

    /// (∂/∂x_i + θ ∂/∂y_j) p vanishes on x_i = y_j. `i` and `j` are 0-based
    /// within their blocks.
    pub fn quasi_invariance_check(&self, p: &MPoly<C>, i: usize, j: usize) -> bool {
        let (xi, yj) = (i, self.n + j);
        let d = p.derivative(xi).add(&p.derivative(yj).scale(self.theta()));
        d.substitute_var(yj, xi).is_negligible()
    }

    /// Block symmetry plus quasi-invariance for every pair: membership in
    /// Λ_{n,m}.
    pub fn is_member(&self, p: &MPoly<C>) -> bool {
        p.is_block_symmetric()
            && (0..self.n).all(|i| (0..self.m).all(|j| self.quasi_invariance_check(p, i, j)))
    }

    /// p(1, …, 1).
    pub fn evaluate_ones(&self, p: &MPoly<C>) -> C {
        p.evaluate(&vec![C::one(); self.nvars()])
    }

    /// SP_λ(1^{n+m}) against the specialization formula at X = n − m/θ.
    pub fn eval_ones_check(&self, lam: &Partition) -> Result<bool> {
        if !lam.in_fat_hook(self.n, self.m) {
            return Err(Error::NotInFatHook {
                partition: lam.clone(),
                n: self.n,
                m: self.m,
            });
        }
        let lhs = self.evaluate_ones(&self.super_jack(lam).poly);
        let x = C::from_int(self.n as i64) - C::from_int(self.m as i64) / self.theta().clone();
        let rhs = crate::symfunc::spec_formula(lam, self.theta()).eval(&x);
        Ok((lhs - rhs).is_negligible())
    }

    /// The restriction φ_{n,0}: Jack polynomial in n variables, built by
    /// expanding monomial symmetric functions directly.
    pub fn jack_in_variables(&self, f: &SymFunc<C>) -> MPoly<C> {
        let nv = self.nvars();
        let mut out = self.zero();
        for (lam, c) in f.to_monomial().terms() {
            if lam.len() > nv {
                continue;
            }
            let mut exps: Vec<u32> = lam.parts().iter().map(|&p| p as u32).collect();
            exps.resize(nv, 0);
            exps.sort_unstable();
            // Each distinct permutation of the exponent vector, once.
            loop {
                out.add_term(exps.clone(), c.clone());
                if !next_permutation(&mut exps) {
                    break;
                }
            }
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Specializes θ in a symbolic polynomial under `guard`.
pub fn specialize_poly(
    p: &MPoly<ThetaFunction>,
    theta: &Rational,
    guard: ThetaGuard,
) -> Result<MPoly<Rational>> {
    guard.check(theta)?;
    p.try_map_coeffs(|c| specialize_theta(c, theta, ThetaGuard::None))
}

/// Numeric evaluation at a complex point with θ fixed to a rational value
/// admitted by the fat-hook rule for (n, m).
pub fn evaluate_numeric(p: &MPoly<ThetaFunction>, point: &[Complex64], theta: &Rational) -> Result<Complex64> {
    let guard = ThetaGuard::FatHook { n: p.n(), m: p.m() };
    let q = specialize_poly(p, theta, guard)?;
    Ok(q.evaluate_with(point, Complex64::from_rational))
}

impl<C: Scalar> DeformedSystem<C> {
    /// All partitions of `degree` in H_{n,m}.
    pub fn labels(&self, degree: usize) -> Vec<Partition> {
        Partition::enumerate(degree, Some((self.n, self.m)))
    }

    /// φ of the basis element p_λ or m_λ, as a convenience for tests.
    pub fn phi_basis(&self, basis: Basis, lam: Partition) -> SuperElement<C> {
        self.phi(&SymFunc::basis_element(basis, lam))
    }
}
