use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent vector, x-block first then y-block.
pub type Exps = Vec<u32>;

/// Sparse polynomial in x_1..x_n, y_1..y_m. Variable k < n is x_{k+1};
/// variable n + j is y_{j+1}. All indices in this API are 0-based.
#[derive(Clone, PartialEq)]
pub struct MPoly<C> {
    n: usize,
    m: usize,
    terms: BTreeMap<Exps, C>,
}

/// Ordering used for output: total degree descending, then lexicographic
/// descending on the exponent vector.
pub fn output_order(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl<C: Scalar> MPoly<C> {
    pub fn zero(n: usize, m: usize) -> Self {
        MPoly {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, m: usize, c: C) -> Self {
        let mut p = Self::zero(n, m);
        p.add_term(vec![0; n + m], c);
        p
    }

    pub fn one(n: usize, m: usize) -> Self {
        Self::constant(n, m, C::one())
    }

    /// The variable with flat index `k`.
    pub fn var(n: usize, m: usize, k: usize) -> Self {
        let mut e = vec![0; n + m];
        e[k] = 1;
        Self::from_terms(n, m, [(e, C::one())])
    }

    pub fn from_terms(n: usize, m: usize, terms: impl IntoIterator<Item = (Exps, C)>) -> Self {
        let mut p = Self::zero(n, m);
        for (e, c) in terms {
            assert_eq!(e.len(), n + m, "exponent vector length");
            p.add_term(e, c);
        }
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    /// Terms in output order (degree descending, then lex descending).
    pub fn sorted_terms(&self) -> Vec<(&Exps, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| output_order(a.0, b.0));
        v
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient passes [`Scalar::is_negligible`].
    pub fn is_negligible(&self) -> bool {
        self.terms.values().all(Scalar::is_negligible)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(
            self.n,
            self.m,
            self.terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.nvars()])
    }

    pub fn add_term(&mut self, e: Exps, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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

    fn check_layout(&self, other: &Self) {
        assert!(
            self.n == other.n && self.m == other.m,
            "variable layout mismatch: ({},{}) vs ({},{})",
            self.n,
            self.m,
            other.n,
            other.m
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_layout(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_layout(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.m);
        }
        Self::from_terms(
            self.n,
            self.m,
            self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c.clone())),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_layout(other);
        let mut out = Self::zero(self.n, self.m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n, self.m), |acc, _| acc.mul(self))
    }

    /// Multiplies by the monomial x^shift.
    pub fn shift(&self, shift: &[u32]) -> Self {
        Self::from_terms(
            self.n,
            self.m,
            self.terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone())),
        )
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(self.n, self.m, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Scalar, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<MPoly<D>, E> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((e.clone(), f(c)?)))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(MPoly::from_terms(self.n, self.m, terms))
    }

    /// ∂/∂x_k.
    pub fn derivative(&self, k: usize) -> Self {
        let mut out = Self::zero(self.n, self.m);
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[k] -= 1;
            out.add_term(f, c.clone() * C::from_int(i64::from(e[k])));
        }
        out
    }

    /// x_k ∂/∂x_k.
    pub fn euler_partial(&self, k: usize) -> Self {
        Self::from_terms(
            self.n,
            self.m,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone() * C::from_int(i64::from(e[k])))),
        )
    }

    /// Σ_k x_k ∂/∂x_k: each homogeneous part scaled by its degree.
    pub fn euler(&self) -> Self {
        Self::from_terms(
            self.n,
            self.m,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone() * C::from_int(i64::from(e.iter().sum::<u32>())))),
        )
    }

    /// Replaces the variable `from` by the variable `to`.
    pub fn substitute_var(&self, from: usize, to: usize) -> Self {
        let mut out = Self::zero(self.n, self.m);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f[to] += f[from];
            f[from] = 0;
            out.add_term(f, c.clone());
        }
        out
    }

    /// σ_{ij}: exchanges two variables.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        Self::from_terms(
            self.n,
            self.m,
            self.terms.iter().map(|(e, c)| {
                let mut f = e.clone();
                f.swap(i, j);
                (f, c.clone())
            }),
        )
    }

    /// Symmetric under every transposition inside the x-block and inside
    /// the y-block.
    pub fn is_block_symmetric(&self) -> bool {
        let adjacent = (1..self.n).chain(self.n + 1..self.n + self.m);
        adjacent.into_iter().all(|k| self.swap(k - 1, k) == *self)
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        self.evaluate_with(point, |c| c.clone())
    }

    /// Evaluation at a point over another scalar type, mapping coefficients
    /// with `f`.
    pub fn evaluate_with<D: Scalar>(&self, point: &[D], f: impl Fn(&C) -> D) -> D {
        assert_eq!(point.len(), self.nvars(), "evaluation point length");
        self.terms.iter().fold(D::zero(), |acc, (e, c)| {
            let mono = e
                .iter()
                .zip(point)
                .fold(f(c), |m, (&k, v)| m * v.pow(k));
            acc + mono
        })
    }

    /// Exact quotient p / (x_i − x_j). Fails when the remainder is nonzero.
    pub fn divided_difference(&self, i: usize, j: usize) -> Result<Self> {
        assert_ne!(i, j);
        // Division by the monic (in x_i) linear factor: peel off the top
        // x_i-power of each term, pushing one power onto x_j.
        let mut rest = self.terms.clone();
        let mut quot = Self::zero(self.n, self.m);
        loop {
            let top = rest.iter().max_by_key(|(e, _)| e[i]).map(|(e, _)| e.clone());
            let Some(e) = top else { break };
            if e[i] == 0 {
                // Exact types need a zero remainder; floating types only a
                // negligible one.
                if rest.values().all(Scalar::is_negligible) {
                    break;
                }
                return Err(Error::NonZeroRemainder { i, j });
            }
            let c = rest.remove(&e).expect("present");
            let mut q = e.clone();
            q[i] -= 1;
            let mut carry = q.clone();
            carry[j] += 1;
            quot.add_term(q, c.clone());
            use std::collections::btree_map::Entry;
            match rest.entry(carry) {
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
        Ok(quot)
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let name = if v < self.n {
                    format!("x{}", v + 1)
                } else {
                    format!("y{}", v - self.n + 1)
                };
                if p == 1 {
                    write!(f, "*{name}")?;
                } else {
                    write!(f, "*{name}^{p}")?;
                }
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MPoly")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("terms", &self.terms)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use proptest::prelude::*;

    type P = MPoly<Rational>;

    fn q(k: i64) -> Rational {
        Rational::from_int(k)
    }

    fn x(k: usize) -> P {
        P::var(2, 0, k)
    }

    #[test]
    fn divided_difference_examples() {
        let p = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
        assert_eq!(p.divided_difference(0, 1).unwrap(), x(0).add(&x(1)));
        assert_eq!(x(0).sub(&x(1)).divided_difference(0, 1).unwrap(), P::one(2, 0));
        assert_eq!(
            x(0).add(&x(1)).divided_difference(0, 1),
            Err(Error::NonZeroRemainder { i: 0, j: 1 })
        );
        assert!(P::zero(2, 0).divided_difference(0, 1).unwrap().is_zero());
    }

    #[test]
    fn calculus() {
        let p = x(0).pow(3).mul(&x(1));
        assert_eq!(p.derivative(0), x(0).pow(2).mul(&x(1)).scale(&q(3)));
        assert_eq!(p.euler(), p.scale(&q(4)));
        assert_eq!(p.substitute_var(1, 0), x(0).pow(4));
        assert_eq!(p.swap(0, 1), x(1).pow(3).mul(&x(0)));
        assert_eq!(p.evaluate(&[q(2), q(3)]), q(24));
    }

    #[test]
    fn output_ordering() {
        let p = x(1).add(&x(0).pow(2)).add(&x(0)).add(&P::one(2, 0));
        let order: Vec<Exps> = p.sorted_terms().into_iter().map(|(e, _)| e.clone()).collect();
        assert_eq!(order, vec![vec![2, 0], vec![1, 0], vec![0, 1], vec![0, 0]]);
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((prop::collection::vec(0u32..4, 3), -4i64..5), 0..6)
            .prop_map(|ts| P::from_terms(3, 0, ts.into_iter().map(|(e, c)| (e, q(c)))))
    }

    proptest! {
        #[test]
        fn divided_difference_inverts_multiplication(p in arb_poly(), i in 0usize..3, j in 0usize..3) {
            prop_assume!(i != j);
            let f = P::var(3, 0, i).sub(&P::var(3, 0, j));
            prop_assert_eq!(p.mul(&f).divided_difference(i, j).unwrap(), p);
        }

        #[test]
        fn antisymmetrization_is_divisible(p in arb_poly(), i in 0usize..3, j in 0usize..3) {
            prop_assume!(i != j);
            let d = p.sub(&p.swap(i, j));
            let quot = d.divided_difference(i, j).unwrap();
            prop_assert_eq!(quot.swap(i, j), quot.clone());
        }

        #[test]
        fn product_rule(a in arb_poly(), b in arb_poly(), k in 0usize..3) {
            let lhs = a.mul(&b).derivative(k);
            let rhs = a.derivative(k).mul(&b).add(&a.mul(&b.derivative(k)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
