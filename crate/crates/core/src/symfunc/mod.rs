//! The ring of symmetric functions in the monomial and power-sum bases.

mod jack;
mod transition;

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::DensePoly;
use crate::partition::Partition;
use crate::scalar::Scalar;

pub use jack::JackAlgebra;
pub use transition::{transition, Transition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    PowerSum,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::PowerSum => "powersum",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finitely supported symmetric function. Zero coefficients are never
/// stored, and iteration follows the partition order.
#[derive(Clone, PartialEq)]
pub struct SymFunc<C> {
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

impl<C: Scalar> SymFunc<C> {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::basis_element(Basis::PowerSum, Partition::empty())
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut out = Self::zero(basis);
        for (lam, c) in terms {
            out.add_term(lam, c);
        }
        out
    }

    pub fn basis_element(basis: Basis, lam: Partition) -> Self {
        Self::from_terms(basis, [(lam, C::one())])
    }

    /// m_λ.
    pub fn monomial(lam: Partition) -> Self {
        Self::basis_element(Basis::Monomial, lam)
    }

    /// p_λ.
    pub fn power_sum(lam: Partition) -> Self {
        Self::basis_element(Basis::PowerSum, lam)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> C {
        self.terms.get(lam).cloned().unwrap_or_else(C::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest weight present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut w = self.terms.keys().map(Partition::weight);
        match w.next() {
            None => true,
            Some(first) => w.all(|x| x == first),
        }
    }

    /// Component of weight `k`.
    pub fn homogeneous_part(&self, k: usize) -> Self {
        Self::from_terms(
            self.basis,
            self.terms
                .iter()
                .filter(|(lam, _)| lam.weight() == k)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    pub fn add_term(&mut self, lam: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lam) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(l, a)| (l.clone(), a.clone() * c.clone())),
        )
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SymFunc<D> {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, a)| (l.clone(), f(a))))
    }

    /// Fallible coefficient map, used for specializing θ.
    pub fn try_map_coeffs<D: Scalar, E>(
        &self,
        f: impl Fn(&C) -> Result<D, E>,
    ) -> Result<SymFunc<D>, E> {
        let terms = self
            .terms
            .iter()
            .map(|(l, a)| Ok((l.clone(), f(a)?)))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(SymFunc::from_terms(self.basis, terms))
    }

    /// The same element expressed in `target`.
    pub fn convert(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(target);
        for (lam, c) in &self.terms {
            let t = transition(lam.weight());
            let row = t.index_of(lam);
            let matrix = match self.basis {
                Basis::PowerSum => &t.p_to_m,
                Basis::Monomial => &t.m_to_p,
            };
            for (j, q) in matrix[row].iter().enumerate() {
                if !num_traits::Zero::is_zero(q) {
                    out.add_term(t.labels[j].clone(), c.clone() * C::from_rational(q));
                }
            }
        }
        out
    }

    pub fn to_power_sum(&self) -> Self {
        self.convert(Basis::PowerSum)
    }

    pub fn to_monomial(&self) -> Self {
        self.convert(Basis::Monomial)
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (lam, c) in &other.convert(self.basis).terms {
            out.add_term(lam.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    /// Product, in the power-sum basis.
    pub fn multiply(&self, other: &Self) -> Self {
        let a = self.to_power_sum();
        let b = other.to_power_sum();
        let mut out = Self::zero(Basis::PowerSum);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                out.add_term(la.union(lb), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// ⟨f, g⟩ with ⟨p_λ, p_μ⟩ = θ^{−ℓ(λ)} z_λ δ_{λμ}.
    pub fn scalar_product(&self, other: &Self, theta: &C) -> C {
        let a = self.to_power_sum();
        let b = other.to_power_sum();
        let theta_inv = C::one() / theta.clone();
        a.terms
            .iter()
            .filter_map(|(lam, ca)| b.terms.get(lam).map(|cb| (lam, ca, cb)))
            .fold(C::zero(), |acc, (lam, ca, cb)| {
                acc + ca.clone()
                    * cb.clone()
                    * C::from_rational(&lam.z())
                    * theta_inv.pow(lam.len() as u32)
            })
    }

    /// ε_X: p_r ↦ X, returned as a polynomial in X.
    pub fn eps_x(&self) -> DensePoly<C> {
        let p = self.to_power_sum();
        let top = p.terms.keys().map(Partition::len).max().unwrap_or(0);
        let mut coeffs = vec![C::zero(); top + 1];
        for (lam, c) in &p.terms {
            coeffs[lam.len()] = coeffs[lam.len()].clone() + c.clone();
        }
        DensePoly::new(coeffs)
    }
}

/// ∏_{s∈λ} (θX + a′(s) − θl′(s)) / (a(s) + θl(s) + θ), a polynomial in X.
pub fn spec_formula<C: Scalar>(lam: &Partition, theta: &C) -> DensePoly<C> {
    let conj = lam.conjugate();
    let mut num = DensePoly::one();
    let mut den = C::one();
    for (i, j) in lam.boxes() {
        let (a, l) = ((lam.part(i) - j) as i64, (conj.part(j) - i) as i64);
        let (ca, cl) = ((j - 1) as i64, (i - 1) as i64);
        let factor = DensePoly::new(vec![
            C::from_int(ca) - theta.clone() * C::from_int(cl),
            theta.clone(),
        ]);
        num = &num * &factor;
        den = den * (C::from_int(a) + theta.clone() * C::from_int(l) + theta.clone());
    }
    num.scale(&(C::one() / den))
}

impl<C: Scalar + fmt::Display> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
        };
        for (k, (lam, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{sym}[{lam}]")?;
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymFunc")
            .field("basis", &self.basis)
            .field("terms", &self.terms)
            .finish()
    }
}
