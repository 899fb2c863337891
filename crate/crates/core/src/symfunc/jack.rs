use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::{Basis, SymFunc};
use crate::exact::ThetaFunction;
use crate::partition::Partition;
use crate::scalar::Scalar;

/// Jack symmetric functions P_λ for a fixed value of θ (symbolic or numeric).
///
/// Each degree is built in one Gram–Schmidt pass and memoized; the memo is
/// safe for concurrent readers, and insertions are serialized.
pub struct JackAlgebra<C> {
    theta: C,
    /// P_λ in the power-sum basis, keyed by λ.
    cache: RwLock<HashMap<Partition, Arc<SymFunc<C>>>>,
}

impl JackAlgebra<ThetaFunction> {
    /// θ kept as an indeterminate.
    pub fn symbolic() -> Self {
        Self::new(ThetaFunction::theta())
    }
}

impl<C: Scalar> JackAlgebra<C> {
    pub fn new(theta: C) -> Self {
        JackAlgebra {
            theta,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn theta(&self) -> &C {
        &self.theta
    }

    /// P_λ in the power-sum basis.
    pub fn jack_p(&self, lam: &Partition) -> Arc<SymFunc<C>> {
        if let Some(f) = self.cache.read().expect("jack cache poisoned").get(lam) {
            return f.clone();
        }
        let mut cache = self.cache.write().expect("jack cache poisoned");
        if !cache.contains_key(lam) {
            for (mu, f) in self.gram_schmidt(lam.weight()) {
                cache.insert(mu, Arc::new(f));
            }
        }
        cache[lam].clone()
    }

    /// P_λ in the monomial basis.
    pub fn jack(&self, lam: &Partition) -> SymFunc<C> {
        self.jack_p(lam).to_monomial()
    }

    /// P_λ in the requested basis.
    pub fn jack_in(&self, lam: &Partition, basis: Basis) -> SymFunc<C> {
        self.jack_p(lam).convert(basis)
    }

    /// Kaneko's C_λ = |λ|!/∏(a+1+θl) · P_λ, in the power-sum basis.
    pub fn kaneko_c(&self, lam: &Partition) -> SymFunc<C> {
        self.jack_p(lam).scale(&lam.kaneko_factor(&self.theta))
    }

    /// ⟨P_λ, P_λ⟩ computed from the constructed function.
    pub fn norm(&self, lam: &Partition) -> C {
        let p = self.jack_p(lam);
        p.scalar_product(&p, &self.theta)
    }

    pub fn scalar_product(&self, f: &SymFunc<C>, g: &SymFunc<C>) -> C {
        f.scalar_product(g, &self.theta)
    }

    /// Gram–Schmidt over m_λ, |λ| = `degree`, from the dominance-smallest
    /// end. Each m_λ is orthogonalized against P_μ for μ strictly below λ in
    /// dominance only.
    fn gram_schmidt(&self, degree: usize) -> Vec<(Partition, SymFunc<C>)> {
        let labels = Partition::all(degree);
        let mut done: Vec<(Partition, SymFunc<C>, C)> = Vec::with_capacity(labels.len());
        for lam in labels.iter().rev() {
            let m = SymFunc::<C>::monomial(lam.clone()).to_power_sum();
            let mut p = m.clone();
            for (mu, pm, norm) in &done {
                if !mu.dominated_by(lam) {
                    continue;
                }
                let c = m.scalar_product(pm, &self.theta) / norm.clone();
                p = p.sub(&pm.scale(&c));
            }
            let norm = p.scalar_product(&p, &self.theta);
            done.push((lam.clone(), p, norm));
        }
        done.into_iter().map(|(l, p, _)| (l, p)).collect()
    }
}
