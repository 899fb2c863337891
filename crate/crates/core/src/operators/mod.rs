//! Actions of Dunkl operators and of the deformed rational, trigonometric
//! and harmonic quantum integrals on polynomials.
//!
//! Operators are never built symbolically; only their action on an [`MPoly`]
//! is implemented. Every division by x_i − x_j is exact and checked.

mod dunkl;

use std::collections::HashMap;

use crate::deformed::{DeformedSystem, MPoly};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::symfunc::SymFunc;

pub use dunkl::{dunkl_apply, symmetric_integral_apply};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// How 𝓢^{(r)} is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicMode {
    /// e^{−L/2} 𝓛^{(r)} e^{+L/2}.
    Conjugation,
    /// The finite nested-commutator series.
    Commutator,
}

/// Rational or trigonometric version of the recursion for ∂_i^{(r)}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Rational,
    Trigonometric,
}

/// A single operator, for callers that pick the operator at run time.
#[derive(Debug, Clone)]
pub enum Operator<C> {
    /// D_i on the m = 0 layout (0-based i).
    Dunkl(usize),
    /// Res f(D_1, …, D_N) on the m = 0 layout.
    SymmetricIntegral(SymFunc<C>),
    DeformedRational(u32),
    DeformedTrig(u32),
    DeformedHarmonic(u32, HarmonicMode),
    ExpHalfL(Sign),
    /// L_{φ(f)}, a product of deformed rational integrals.
    QuantumIntegral(SymFunc<C>),
}

impl<C: Scalar> Operator<C> {
    pub fn apply(&self, sys: &DeformedSystem<C>, p: &MPoly<C>) -> Result<MPoly<C>> {
        match self {
            Operator::Dunkl(i) => dunkl_apply(*i, p, sys.theta()),
            Operator::SymmetricIntegral(f) => symmetric_integral_apply(f, p, sys.theta()),
            Operator::DeformedRational(r) => sys.rational_integral(*r, p),
            Operator::DeformedTrig(r) => sys.trig_integral(*r, p),
            Operator::DeformedHarmonic(r, mode) => sys.harmonic_integral(*r, p, *mode),
            Operator::ExpHalfL(sign) => sys.exp_half_l(p, *sign),
            Operator::QuantumIntegral(f) => sys.quantum_integral(f, p),
        }
    }
}

impl<C: Scalar> DeformedSystem<C> {
    fn check_layout(&self, p: &MPoly<C>) -> Result<()> {
        if p.n() != self.n() || p.m() != self.m() {
            return Err(Error::LayoutMismatch {
                expected_n: self.n(),
                expected_m: self.m(),
                n: p.n(),
                m: p.m(),
            });
        }
        Ok(())
    }

    fn first_order(&self, k: usize, q: &MPoly<C>, flavor: Flavor) -> MPoly<C> {
        let d = match flavor {
            Flavor::Rational => q.derivative(k),
            Flavor::Trigonometric => q.euler_partial(k),
        };
        if self.parity(k) == 0 {
            d
        } else {
            d.scale(&-self.theta().clone())
        }
    }

    /// ∂_i^{(r)} p for every i (0-based), r ≥ 1.
    pub fn partials(&self, r: u32, p: &MPoly<C>, flavor: Flavor) -> Result<Vec<MPoly<C>>> {
        assert!(r >= 1, "order must be positive");
        self.check_layout(p)?;
        let nv = self.nvars();
        let mut level: Vec<MPoly<C>> = (0..nv).map(|k| self.first_order(k, p, flavor)).collect();
        let half = C::one() / C::from_int(2);
        for _ in 1..r {
            // (∂_i − ∂_j)/(x_i − x_j) is symmetric in (i, j): one division
            // per unordered pair.
            let mut quotients: HashMap<(usize, usize), MPoly<C>> = HashMap::new();
            for i in 0..nv {
                for j in i + 1..nv {
                    let mut q = level[i].sub(&level[j]).divided_difference(i, j)?;
                    if flavor == Flavor::Trigonometric {
                        q = q.mul(&self.var(i).add(&self.var(j))).scale(&half);
                    }
                    quotients.insert((i, j), q);
                }
            }
            let next = (0..nv)
                .map(|i| {
                    let mut acc = self.first_order(i, &level[i], flavor);
                    for j in (0..nv).filter(|&j| j != i) {
                        let q = &quotients[&(i.min(j), i.max(j))];
                        let w = self.neg_theta_pow(1 - self.parity(j) as i32);
                        acc = acc.sub(&q.scale(&w));
                    }
                    acc
                })
                .collect();
            level = next;
        }
        Ok(level)
    }

    fn integral(&self, r: u32, p: &MPoly<C>, flavor: Flavor) -> Result<MPoly<C>> {
        let parts = self.partials(r, p, flavor)?;
        let mut out = self.zero();
        let y_weight = self.neg_theta_pow(-1);
        for (k, d) in parts.iter().enumerate() {
            out = if self.parity(k) == 0 {
                out.add(d)
            } else {
                out.add(&d.scale(&y_weight))
            };
        }
        Ok(out)
    }

    /// L^{(r)}_{n,m} p by the recursive construction.
    pub fn rational_integral(&self, r: u32, p: &MPoly<C>) -> Result<MPoly<C>> {
        self.integral(r, p, Flavor::Rational)
    }

    /// 𝓛^{(r)}_{n,m} p, the trigonometric integrals.
    pub fn trig_integral(&self, r: u32, p: &MPoly<C>) -> Result<MPoly<C>> {
        self.integral(r, p, Flavor::Trigonometric)
    }

    /// The deformed rational CMS operator L_{n,m} applied in closed form,
    /// without the recursion.
    pub fn laplacian(&self, p: &MPoly<C>) -> Result<MPoly<C>> {
        self.check_layout(p)?;
        let nv = self.nvars();
        let mut out = self.zero();
        let grads: Vec<MPoly<C>> = (0..nv).map(|k| self.first_order(k, p, Flavor::Rational)).collect();
        for (k, g) in grads.iter().enumerate() {
            let d2 = g.derivative(k);
            out = out.add(&d2);
        }
        let two = C::from_int(2);
        for i in 0..nv {
            for j in i + 1..nv {
                let e = 1 - self.parity(i) as i32 - self.parity(j) as i32;
                let q = grads[i].sub(&grads[j]).divided_difference(i, j)?;
                out = out.sub(&q.scale(&(two.clone() * self.neg_theta_pow(e))));
            }
        }
        Ok(out)
    }

    /// L_{φ(f)} p: for each term c·p_μ of f, the product ∏_k L^{(μ_k)}.
    pub fn quantum_integral(&self, f: &SymFunc<C>, p: &MPoly<C>) -> Result<MPoly<C>> {
        let mut memo = HashMap::new();
        let mut out = self.zero();
        for (mu, c) in f.to_power_sum().terms() {
            let v = self.power_integral(mu, p, &mut memo)?;
            out = out.add(&v.scale(c));
        }
        Ok(out)
    }

    /// ∏_k L^{(μ_k)} p with results for prefixes of μ shared through `memo`.
    pub fn power_integral(
        &self,
        mu: &Partition,
        p: &MPoly<C>,
        memo: &mut HashMap<Partition, MPoly<C>>,
    ) -> Result<MPoly<C>> {
        if let Some(v) = memo.get(mu) {
            return Ok(v.clone());
        }
        let v = match mu.parts().split_last() {
            None => p.clone(),
            Some((&last, rest)) => {
                let inner = self.power_integral(&Partition::from(rest), p, memo)?;
                if inner.is_zero() {
                    inner
                } else {
                    self.rational_integral(last as u32, &inner)?
                }
            }
        };
        memo.insert(mu.clone(), v.clone());
        Ok(v)
    }

    /// e^{∓L/2} p = Σ_k (∓1)^k/(2^k k!) L^k p; the sum is finite since L
    /// lowers degree by two.
    pub fn exp_half_l(&self, p: &MPoly<C>, sign: Sign) -> Result<MPoly<C>> {
        let mut out = p.clone();
        let mut term = p.clone();
        let mut k = 0i64;
        loop {
            term = self.laplacian(&term)?;
            if term.is_zero() {
                return Ok(out);
            }
            k += 1;
            let mut c = C::one() / C::from_int(2 * k);
            if sign == Sign::Minus {
                c = -c;
            }
            term = term.scale(&c);
            out = out.add(&term);
        }
    }

    /// SH_λ = e^{−L/2} SP_λ.
    pub fn super_hermite(&self, lam: &Partition) -> Result<MPoly<C>> {
        if !lam.in_fat_hook(self.n(), self.m()) {
            return Err(Error::NotInFatHook {
                partition: lam.clone(),
                n: self.n(),
                m: self.m(),
            });
        }
        self.exp_half_l(&self.super_jack(lam).poly, Sign::Minus)
    }

    /// 𝓢^{(r)}_{n,m} p, the harmonic integrals.
    pub fn harmonic_integral(&self, r: u32, p: &MPoly<C>, mode: HarmonicMode) -> Result<MPoly<C>> {
        match mode {
            HarmonicMode::Conjugation => {
                let lifted = self.exp_half_l(p, Sign::Plus)?;
                let acted = self.trig_integral(r, &lifted)?;
                self.exp_half_l(&acted, Sign::Minus)
            }
            HarmonicMode::Commutator => {
                let mut out = self.zero();
                let mut weight = C::one();
                for k in 0..=r {
                    if k > 0 {
                        weight = weight / C::from_int(2 * i64::from(k));
                    }
                    let term = self.nested_commutator(r, k, p)?;
                    out = out.add(&term.scale(&weight));
                }
                Ok(out)
            }
        }
    }

    /// [[𝓛^{(r)}, L], …, L] (k-fold) applied to p.
    fn nested_commutator(&self, r: u32, k: u32, p: &MPoly<C>) -> Result<MPoly<C>> {
        if k == 0 {
            return self.trig_integral(r, p);
        }
        let a = self.nested_commutator(r, k - 1, &self.laplacian(p)?)?;
        let b = self.laplacian(&self.nested_commutator(r, k - 1, p)?)?;
        Ok(a.sub(&b))
    }

    /// The eigenvalue c with 𝓛^{(r)} SP_λ = c SP_λ, read off the leading
    /// term and checked on every term.
    pub fn trig_eigenvalue(&self, lam: &Partition, r: u32) -> Result<C> {
        let sp = self.super_jack(lam);
        if sp.poly.is_zero() {
            return Err(Error::NotInFatHook {
                partition: lam.clone(),
                n: self.n(),
                m: self.m(),
            });
        }
        let image = self.trig_integral(r, &sp.poly)?;
        let (lead, c0) = sp.poly.sorted_terms()[0];
        let c = image.coeff(lead) / c0.clone();
        if !image.sub(&sp.poly.scale(&c)).is_negligible() {
            return Err(Error::NotEigenfunction(format!(
                "trigonometric integral of order {r} on SP_{lam:?}"
            )));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests;
