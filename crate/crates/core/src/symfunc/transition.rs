//! Monomial ↔ power-sum transition matrices, computed once per degree.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::exact::Rational;
use crate::partition::Partition;

/// Transition data for one degree. Rows and columns are indexed by
/// `labels`, which follow the crate-wide partition order.
#[derive(Debug)]
pub struct Transition {
    pub labels: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `p_to_m[μ][λ]`: coefficient of m_λ in p_μ.
    pub p_to_m: Vec<Vec<Rational>>,
    /// `m_to_p[λ][ν]`: coefficient of p_ν in m_λ.
    pub m_to_p: Vec<Vec<Rational>>,
}

impl Transition {
    pub fn index_of(&self, lam: &Partition) -> usize {
        self.index[lam]
    }

    fn build(degree: usize) -> Self {
        let labels = Partition::all(degree);
        let index = labels.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let p_to_m: Vec<Vec<Rational>> = labels
            .iter()
            .map(|mu| {
                labels
                    .iter()
                    .map(|lam| Rational::from_integer(count_fillings(mu.parts(), lam.parts()).into()))
                    .collect()
            })
            .collect();
        let m_to_p = invert(&p_to_m);
        Transition {
            labels,
            index,
            p_to_m,
            m_to_p,
        }
    }
}

/// Number of maps f from the parts of μ to the rows of λ with
/// Σ_{f(k)=i} μ_k = λ_i, i.e. the coefficient of x^λ in p_μ.
fn count_fillings(mu: &[usize], lam: &[usize]) -> u64 {
    fn rec(mu: &[usize], cap: &mut [usize]) -> u64 {
        let Some((&first, rest)) = mu.split_first() else {
            return u64::from(cap.iter().all(|&c| c == 0));
        };
        let mut total = 0;
        for i in 0..cap.len() {
            if cap[i] >= first {
                cap[i] -= first;
                total += rec(rest, cap);
                cap[i] += first;
            }
        }
        total
    }
    rec(mu, &mut lam.to_vec())
}

fn invert(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut work: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .expect("power-sum transition matrix is invertible");
        work.swap(col, pivot);
        let inv = Rational::one() / work[col][col].clone();
        for v in work[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let f = work[r][col].clone();
            for c in 0..2 * n {
                let delta = &f * &work[col][c];
                work[r][c] -= delta;
            }
        }
    }
    work.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Shared transition for `degree`, built on first use.
pub fn transition(degree: usize) -> Arc<Transition> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("transition cache poisoned").get(&degree) {
        return t.clone();
    }
    let built = Arc::new(Transition::build(degree));
    cache
        .write()
        .expect("transition cache poisoned")
        .entry(degree)
        .or_insert(built)
        .clone()
}
