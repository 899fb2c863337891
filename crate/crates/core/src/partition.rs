//! Integer partitions and the box statistics used by Jack theory.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::scalar::Scalar;

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` is the total order used for all deterministic processing: by weight
/// first, then lexicographically *decreasing* in the parts. Within a weight
/// this refines dominance with the larger partition first, so `(2) < (1,1)`
/// in this ordering.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

/// Result of comparing two partitions of equal weight in dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Arm, leg, co-arm and co-leg of a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxStats {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

/// Boxes of a fat-hook partition to the east and south of the m×n rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookProfile {
    pub east: Vec<usize>,
    pub south: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into decreasing order and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// λ_i with 1-based index, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Multiplicity m_i(λ) of the part i.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// The union of parts, i.e. the index of the product p_λ p_μ.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Iterator over the boxes (i, j), 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) >= j
    }

    pub fn dominance_compare(&self, other: &Partition) -> Result<Dominance> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch(self.clone(), other.clone()));
        }
        if self == other {
            return Ok(Dominance::Equal);
        }
        let (mut below, mut above) = (true, true);
        let (mut a, mut b) = (0, 0);
        for k in 1..=self.len().max(other.len()) {
            a += self.part(k);
            b += other.part(k);
            below &= a <= b;
            above &= a >= b;
        }
        Ok(match (below, above) {
            (true, _) => Dominance::Less,
            (_, true) => Dominance::Greater,
            _ => Dominance::Incomparable,
        })
    }

    /// True when `self` is strictly dominated by `other` (same weight).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        matches!(self.dominance_compare(other), Ok(Dominance::Less))
    }

    /// Arm, leg, co-arm, co-leg of the box (i, j), 1-based.
    pub fn arm_leg(&self, i: usize, j: usize) -> Result<BoxStats> {
        if !self.contains_box(i, j) {
            return Err(Error::BoxOutsideDiagram {
                partition: self.clone(),
                row: i,
                col: j,
            });
        }
        let conj_j = self.0.iter().take_while(|&&p| p >= j).count();
        Ok(BoxStats {
            arm: self.part(i) - j,
            leg: conj_j - i,
            coarm: j - 1,
            coleg: i - 1,
        })
    }

    fn box_stats(&self) -> impl Iterator<Item = BoxStats> + '_ {
        let conj = self.conjugate();
        self.boxes().map(move |(i, j)| BoxStats {
            arm: self.part(i) - j,
            leg: conj.part(j) - i,
            coarm: j - 1,
            coleg: i - 1,
        })
    }

    /// z_λ = ∏ i^{m_i} m_i!.
    pub fn z(&self) -> Rational {
        let mut acc = BigInt::from(1);
        let mut k = 0;
        while k < self.0.len() {
            let part = self.0[k];
            let mult = self.0[k..].iter().take_while(|&&p| p == part).count();
            for t in 1..=mult {
                acc *= BigInt::from(part) * BigInt::from(t);
            }
            k += mult;
        }
        Rational::from_integer(acc)
    }

    /// Stanley's b_λ = ∏_s (a + θl + θ)/(a + 1 + θl), the inverse quadratic
    /// norm of the monic Jack function.
    pub fn b<C: Scalar>(&self, theta: &C) -> C {
        self.box_stats().fold(C::one(), |acc, s| {
            let a = C::from_int(s.arm as i64);
            let l = theta.clone() * C::from_int(s.leg as i64);
            acc * (a.clone() + l.clone() + theta.clone()) / (a + C::one() + l)
        })
    }

    /// ∏_s (a(s) + 1 + θ l(s)), the denominator in Kaneko's normalization.
    pub fn upper_hook_product<C: Scalar>(&self, theta: &C) -> C {
        self.box_stats().fold(C::one(), |acc, s| {
            acc * (C::from_int(s.arm as i64 + 1) + theta.clone() * C::from_int(s.leg as i64))
        })
    }

    /// |λ|! / ∏_s (a + 1 + θl): the factor taking P_λ to C_λ.
    pub fn kaneko_factor<C: Scalar>(&self, theta: &C) -> C {
        crate::scalar::factorial::<C>(self.weight()) / self.upper_hook_product(theta)
    }

    /// Generalized Pochhammer symbol (a)_λ = ∏_i (a − θ(i−1))_{λ_i}.
    pub fn pochhammer<C: Scalar>(&self, a: &C, theta: &C) -> C {
        self.0.iter().enumerate().fold(C::one(), |acc, (i, &len)| {
            let shifted = a.clone() - theta.clone() * C::from_int(i as i64);
            acc * crate::scalar::rising_factorial(&shifted, len)
        })
    }

    /// Membership in the fat hook H(n,m) = {λ : λ_{n+1} ≤ m}.
    pub fn in_fat_hook(&self, n: usize, m: usize) -> bool {
        self.part(n + 1) <= m
    }

    pub fn east_south(&self, n: usize, m: usize) -> Result<HookProfile> {
        if !self.in_fat_hook(n, m) {
            return Err(Error::NotInFatHook {
                partition: self.clone(),
                n,
                m,
            });
        }
        let conj = self.conjugate();
        Ok(HookProfile {
            east: (1..=n).map(|i| self.part(i).saturating_sub(m)).collect(),
            south: (1..=m).map(|j| conj.part(j).saturating_sub(n)).collect(),
        })
    }

    /// Number of boxes shared with the m-column, n-row rectangle.
    pub fn rectangle_overlap(&self, n: usize, m: usize) -> usize {
        (1..=n).map(|i| self.part(i).min(m)).sum()
    }

    /// All partitions of `weight`, largest-in-dominance first.
    pub fn all(weight: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(weight, weight, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `weight`, optionally restricted to the fat hook H(n,m).
    pub fn enumerate(weight: usize, filter: Option<(usize, usize)>) -> Vec<Partition> {
        let all = Self::all(weight);
        match filter {
            None => all,
            Some((n, m)) => all.into_iter().filter(|p| p.in_fat_hook(n, m)).collect(),
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// Comma-separated parts, `[]` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[]");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1,1`, `[3,1,1]`, `[]` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("malformed partition '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "'{s}' is not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition(parts))
    }
}

#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::Partition::new(vec![$($p),+]) };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ThetaFunction;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(p(&[1, 1]).dominance_compare(&p(&[2])).unwrap(), Dominance::Less);
        assert_eq!(p(&[2, 2]).dominance_compare(&p(&[3, 1])).unwrap(), Dominance::Less);
        assert_eq!(
            p(&[3, 1, 1, 1]).dominance_compare(&p(&[2, 2, 2])).unwrap(),
            Dominance::Incomparable
        );
        assert_eq!(p(&[3, 1]).dominance_compare(&p(&[2, 2])).unwrap(), Dominance::Greater);
        assert!(matches!(
            p(&[2]).dominance_compare(&p(&[1])),
            Err(Error::WeightMismatch(..))
        ));
    }

    #[test]
    fn arm_leg_examples() {
        let s = |a, l, ca, cl| BoxStats { arm: a, leg: l, coarm: ca, coleg: cl };
        assert_eq!(p(&[2]).arm_leg(1, 1).unwrap(), s(1, 0, 0, 0));
        assert_eq!(p(&[2]).arm_leg(1, 2).unwrap(), s(0, 0, 1, 0));
        assert_eq!(p(&[2, 2]).arm_leg(1, 1).unwrap(), s(1, 1, 0, 0));
        assert!(matches!(p(&[2]).arm_leg(2, 1), Err(Error::BoxOutsideDiagram { .. })));
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1]).z(), Rational::from_int(2));
        assert_eq!(p(&[2]).z(), Rational::from_int(2));
        assert_eq!(p(&[2, 1, 1]).z(), Rational::from_int(4));
        assert_eq!(Partition::empty().z(), Rational::from_int(1));
    }

    #[test]
    fn b_values() {
        let th = ThetaFunction::theta();
        assert_eq!(p(&[1]).b(&th), th.clone());
        assert_eq!(p(&[2]).b(&th), "theta*(1+theta)/2".parse().unwrap());
        assert_eq!(p(&[1, 1]).b(&th), "2*theta^2/(1+theta)".parse().unwrap());
        assert_eq!(Partition::empty().b(&th), ThetaFunction::from(1));
    }

    #[test]
    fn pochhammer_values() {
        let th = ThetaFunction::theta();
        let a: ThetaFunction = "theta^2+3".parse().unwrap();
        let one = ThetaFunction::from(1);
        assert_eq!(
            p(&[2, 1]).pochhammer(&a, &th),
            a.clone() * (a.clone() + one) * (a.clone() - th.clone())
        );
        assert_eq!(p(&[1, 1]).pochhammer(&a, &th), a.clone() * (a.clone() - th.clone()));
        let tnm = th.clone() - ThetaFunction::from(1);
        assert_eq!(p(&[2]).pochhammer(&tnm, &th), (th.clone() - one_()) * th.clone());
        assert_eq!(Partition::empty().pochhammer(&a, &th), ThetaFunction::from(1));
    }

    fn one_() -> ThetaFunction {
        ThetaFunction::from(1)
    }

    #[test]
    fn fat_hook_membership() {
        assert!(p(&[3, 1]).in_fat_hook(1, 1));
        assert!(!p(&[2, 2]).in_fat_hook(1, 1));
        assert!(p(&[5]).in_fat_hook(1, 0));
        assert!(!p(&[1, 1]).in_fat_hook(1, 0));
        assert!(Partition::empty().in_fat_hook(0, 0));
    }

    #[test]
    fn east_south_examples() {
        let hp = |e: &[usize], s: &[usize]| HookProfile { east: e.to_vec(), south: s.to_vec() };
        assert_eq!(p(&[3, 1]).east_south(1, 1).unwrap(), hp(&[2], &[1]));
        assert_eq!(p(&[1]).east_south(1, 1).unwrap(), hp(&[0], &[0]));
        assert_eq!(p(&[2, 2]).east_south(2, 1).unwrap(), hp(&[1, 1], &[0]));
        assert!(matches!(p(&[2, 2]).east_south(1, 1), Err(Error::NotInFatHook { .. })));
    }

    #[test]
    fn enumeration() {
        assert_eq!(Partition::enumerate(2, None), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(Partition::enumerate(2, Some((1, 1))), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            Partition::enumerate(4, Some((1, 1))),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(Partition::enumerate(0, None), vec![Partition::empty()]);
        let counts: Vec<usize> = (0..=8).map(|k| Partition::all(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn order_refines_dominance() {
        for k in 1..=7 {
            let parts = Partition::all(k);
            assert!(parts.windows(2).all(|w| w[0] < w[1]));
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    assert!(!a.dominated_by(b), "{a:?} listed before {b:?}");
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).to_string(), "3,1,1");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..6, 0..6).prop_map(Partition::new)
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(lam in arb_partition()) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().weight(), lam.weight());
        }

        #[test]
        fn arm_is_conjugate_leg(lam in arb_partition()) {
            let conj = lam.conjugate();
            for (i, j) in lam.boxes() {
                let s = lam.arm_leg(i, j).unwrap();
                let t = conj.arm_leg(j, i).unwrap();
                prop_assert_eq!(s.arm, t.leg);
                prop_assert_eq!(s.leg, t.arm);
            }
        }

        #[test]
        fn conjugation_reverses_dominance(k in 1usize..8, a in 0usize..22, b in 0usize..22) {
            let parts = Partition::all(k);
            let (mu, lam) = (&parts[a % parts.len()], &parts[b % parts.len()]);
            prop_assert_eq!(
                mu.dominated_by(lam),
                lam.conjugate().dominated_by(&mu.conjugate())
            );
        }

        #[test]
        fn fat_hook_box_count(lam in arb_partition(), n in 0usize..3, m in 0usize..3) {
            if let Ok(hp) = lam.east_south(n, m) {
                let e: usize = hp.east.iter().sum();
                let s: usize = hp.south.iter().sum();
                prop_assert_eq!(lam.weight(), e + s + lam.rectangle_overlap(n, m));
            }
        }
    }
}
