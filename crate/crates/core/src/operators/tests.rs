use super::*;
use crate::exact::{Rational, ThetaFunction};
use crate::partition;
use crate::symfunc::Basis;
use proptest::prelude::*;

type Sys = DeformedSystem<ThetaFunction>;
type P = MPoly<ThetaFunction>;

fn t(s: &str) -> ThetaFunction {
    s.parse().unwrap()
}

fn th() -> ThetaFunction {
    ThetaFunction::theta()
}

fn poly(n: usize, m: usize, terms: &[(&[u32], &str)]) -> P {
    MPoly::from_terms(n, m, terms.iter().map(|(e, c)| (e.to_vec(), t(c))))
}

fn konst(sys: &Sys, s: &str) -> P {
    MPoly::constant(sys.n(), sys.m(), t(s))
}

#[test]
fn dunkl_examples() {
    let x1 = poly(2, 0, &[(&[1, 0], "1")]);
    assert_eq!(dunkl_apply(0, &x1, &th()).unwrap(), poly(2, 0, &[(&[0, 0], "1+theta")]));
    let x1sq = poly(2, 0, &[(&[2, 0], "1")]);
    let expected = poly(2, 0, &[(&[1, 0], "2+theta"), (&[0, 1], "theta")]);
    assert_eq!(dunkl_apply(0, &x1sq, &th()).unwrap(), expected);
    assert!(dunkl_apply(0, &P::one(2, 0), &th()).unwrap().is_zero());
    assert!(dunkl_apply(0, &P::one(1, 1), &th()).is_err());
}

#[test]
fn symmetric_integral_examples() {
    let p2 = SymFunc::power_sum(partition![2]);
    let p1 = SymFunc::power_sum(partition![1]);
    let q = poly(2, 0, &[(&[2, 0], "1"), (&[0, 2], "1")]);
    assert_eq!(symmetric_integral_apply(&p2, &q, &th()).unwrap(), poly(2, 0, &[(&[0, 0], "4+4*theta")]));
    let q = poly(2, 0, &[(&[1, 0], "1"), (&[0, 1], "1")]);
    assert_eq!(symmetric_integral_apply(&p1, &q, &th()).unwrap(), poly(2, 0, &[(&[0, 0], "2")]));
    assert!(symmetric_integral_apply(&p1, &P::one(3, 0), &th()).unwrap().is_zero());
    let asym = poly(2, 0, &[(&[1, 0], "1")]);
    assert_eq!(symmetric_integral_apply(&p1, &asym, &th()), Err(Error::AsymmetricInput));
}

#[test]
fn partial_examples() {
    let sys = Sys::symbolic(1, 1);
    let sp1 = sys.super_jack(&partition![1]).poly.clone();
    let d = sys.partials(1, &sp1, Flavor::Rational).unwrap();
    assert_eq!(d[0], sys.one());
    assert_eq!(d[1], sys.one());
    // r = 2 on SP_(2), checked through the aggregate against the closed form.
    let sp2 = sys.super_jack(&partition![2]).poly.clone();
    assert_eq!(sys.rational_integral(2, &sp2).unwrap(), sys.laplacian(&sp2).unwrap());
}

#[test]
fn rational_integral_examples() {
    let sys = Sys::symbolic(1, 1);
    let sp1 = sys.super_jack(&partition![1]).poly.clone();
    let sp2 = sys.super_jack(&partition![2]).poly.clone();
    assert_eq!(sys.rational_integral(1, &sp1).unwrap(), konst(&sys, "1-1/theta"));
    assert_eq!(sys.rational_integral(2, &sp2).unwrap(), konst(&sys, "2*(theta-1)/(1+theta)"));
    assert!(sys.rational_integral(2, &sys.one()).unwrap().is_zero());
}

#[test]
fn nonmember_is_rejected() {
    let sys = Sys::symbolic(1, 1);
    // x² is symmetric in each block but not quasi-invariant.
    let p = poly(1, 1, &[(&[2, 0], "1")]);
    assert!(matches!(sys.rational_integral(2, &p), Err(Error::NonZeroRemainder { .. })));
}

#[test]
fn quantum_integral_examples() {
    let sys = Sys::symbolic(1, 1);
    let sp1 = sys.super_jack(&partition![1]).poly.clone();
    let sp2 = sys.super_jack(&partition![2]).poly.clone();
    let p1 = SymFunc::power_sum(partition![1]);
    assert_eq!(sys.quantum_integral(&p1, &sp1).unwrap(), konst(&sys, "(theta-1)/theta"));
    let p11 = SymFunc::power_sum(partition![1, 1]);
    let once = sys.rational_integral(1, &sp2).unwrap();
    assert_eq!(once, poly(1, 1, &[(&[1, 0], "2*theta/(1+theta)"), (&[0, 1], "-2/(1+theta)")]));
    assert_eq!(sys.quantum_integral(&p11, &sp2).unwrap(), konst(&sys, "2*(theta-1)/(1+theta)"));
    let jack2 = sys.algebra().jack_p(&partition![2]);
    assert_eq!(sys.quantum_integral(&jack2, &sp2).unwrap(), konst(&sys, "2*(theta-1)/(1+theta)"));
}

#[test]
fn trig_examples() {
    let sys = Sys::symbolic(1, 1);
    let sp1 = sys.super_jack(&partition![1]).poly.clone();
    let sp2 = sys.super_jack(&partition![2]).poly.clone();
    assert_eq!(sys.trig_integral(1, &sp2).unwrap(), sp2.scale(&t("2")));
    assert_eq!(sys.trig_integral(1, &sp1).unwrap(), sp1);
    assert_eq!(sys.trig_eigenvalue(&partition![2], 1).unwrap(), t("2"));
    assert_eq!(sys.trig_eigenvalue(&partition![1, 1], 1).unwrap(), t("2"));
    assert!(sys.trig_eigenvalue(&partition![2, 2], 1).is_err());
}

/// Values frozen from oracles/sympy_oracle.py.
#[test]
fn trig_eigenvalue_regression() {
    let cases_11: &[(&[usize], u32, &str)] = &[
        (&[1], 2, "0"),
        (&[1], 3, "theta/2"),
        (&[2], 2, "2"),
        (&[2], 3, "theta+3"),
        (&[1, 1], 2, "-2*theta"),
        (&[1, 1], 3, "theta*(3*theta+1)"),
        (&[3], 2, "6"),
        (&[3], 3, "3*(theta+10)/2"),
        (&[2, 1], 2, "-2*(theta-1)"),
        (&[2, 1], 3, "3*(2*theta^2+theta+2)/2"),
        (&[1, 1, 1], 2, "-6*theta"),
        (&[1, 1, 1], 3, "3*theta*(10*theta+1)/2"),
    ];
    let sys = Sys::symbolic(1, 1);
    for (lam, r, value) in cases_11 {
        let lam = Partition::from(*lam);
        assert_eq!(sys.trig_eigenvalue(&lam, *r).unwrap(), t(value), "{lam:?} r={r}");
    }
    let cases_21: &[(&[usize], u32, &str)] = &[
        (&[1], 2, "theta"),
        (&[1], 3, "theta"),
        (&[2], 2, "2*(theta+1)"),
        (&[2], 3, "5*theta+3"),
        (&[1, 1], 2, "0"),
        (&[1, 1], 3, "2*theta"),
        (&[2, 1], 2, "theta+2"),
        (&[2, 1], 3, "3*(2*theta+1)"),
    ];
    let sys = Sys::symbolic(2, 1);
    for (lam, r, value) in cases_21 {
        let lam = Partition::from(*lam);
        assert_eq!(sys.trig_eigenvalue(&lam, *r).unwrap(), t(value), "{lam:?} r={r}");
    }
}

#[test]
fn exp_and_hermite_examples() {
    let sys = Sys::symbolic(1, 1);
    let sp1 = sys.super_jack(&partition![1]).poly.clone();
    assert_eq!(sys.exp_half_l(&sp1, Sign::Minus).unwrap(), sp1);
    let sh2 = poly(1, 1, &[(&[2, 0], "1"), (&[1, 1], "-2/(1+theta)"), (&[0, 0], "-(theta-1)/(1+theta)")]);
    assert_eq!(sys.super_hermite(&partition![2]).unwrap(), sh2);
    assert_eq!(sys.super_hermite(&partition![1]).unwrap(), sp1);
    // L SP_(1,1) = (θ−1)/θ from the oracle.
    let sp11 = sys.super_jack(&partition![1, 1]).poly.clone();
    assert_eq!(sys.laplacian(&sp11).unwrap(), konst(&sys, "(theta-1)/theta"));
    let sh11 = sp11.sub(&konst(&sys, "(theta-1)/(2*theta)"));
    assert_eq!(sys.super_hermite(&partition![1, 1]).unwrap(), sh11);
    assert!(sys.super_hermite(&partition![2, 2]).is_err());
}

#[test]
fn harmonic_examples() {
    let sys = Sys::symbolic(1, 1);
    let sh2 = sys.super_hermite(&partition![2]).unwrap();
    for mode in [HarmonicMode::Conjugation, HarmonicMode::Commutator] {
        assert_eq!(sys.harmonic_integral(1, &sh2, mode).unwrap(), sh2.scale(&t("2")));
        assert!(sys.harmonic_integral(1, &sys.one(), mode).unwrap().is_zero());
    }
    let sh1 = sys.super_hermite(&partition![1]).unwrap();
    assert_eq!(
        sys.harmonic_integral(2, &sh1, HarmonicMode::Conjugation).unwrap(),
        sys.harmonic_integral(2, &sh1, HarmonicMode::Commutator).unwrap()
    );
    // 𝓢^{(1)} = Euler − L.
    let sh3 = sys.super_hermite(&partition![2, 1]).unwrap();
    let direct = sh3.euler().sub(&sys.laplacian(&sh3).unwrap());
    assert_eq!(sys.harmonic_integral(1, &sh3, HarmonicMode::Commutator).unwrap(), direct);
}

#[test]
fn m_zero_reduces_to_dunkl_integrals() {
    for n in 1..=3 {
        let sys = Sys::symbolic(n, 0);
        for k in 0..=4 {
            for lam in Partition::all(k) {
                let p = sys.phi_basis(Basis::Monomial, lam).poly;
                for r in 1..=3u32 {
                    let deformed = sys.rational_integral(r, &p).unwrap();
                    let f = SymFunc::power_sum(Partition::new(vec![r as usize]));
                    let res = symmetric_integral_apply(&f, &p, &th()).unwrap();
                    assert_eq!(deformed, res, "n={n} r={r}");
                }
            }
        }
    }
}

#[test]
fn dunkl_operators_commute() {
    let theta = th();
    for nv in 2..=3 {
        for deg in 0..=3u32 {
            for e in monomials(nv, deg) {
                let p = MPoly::from_terms(nv, 0, [(e, t("1"))]);
                for i in 0..nv {
                    for j in i + 1..nv {
                        let a = dunkl_apply(i, &dunkl_apply(j, &p, &theta).unwrap(), &theta).unwrap();
                        let b = dunkl_apply(j, &dunkl_apply(i, &p, &theta).unwrap(), &theta).unwrap();
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }
}

fn monomials(nv: usize, deg: u32) -> Vec<Vec<u32>> {
    if nv == 1 {
        return vec![vec![deg]];
    }
    (0..=deg)
        .flat_map(|a| {
            monomials(nv - 1, deg - a).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

#[test]
fn laplacian_lowers_degree_by_two() {
    let sys = Sys::symbolic(2, 1);
    for k in 0..=4 {
        for lam in sys.labels(k) {
            let img = sys.laplacian(&sys.super_jack(&lam).poly).unwrap();
            assert!(img.is_zero() || img.total_degree() == Some(k as u32 - 2));
            assert_eq!(img.homogeneous_part((k as u32).saturating_sub(2)), img);
        }
    }
}

#[test]
fn rational_theta_path() {
    let q = Rational::new(5.into(), 2.into());
    let sys = DeformedSystem::with_theta(1, 1, q.clone());
    let sp2 = sys.super_jack(&partition![2]).poly.clone();
    let v = sys.rational_integral(2, &sp2).unwrap().constant_term();
    // 2(θ−1)/(1+θ) at θ = 5/2.
    assert_eq!(v, Rational::new(6.into(), 7.into()));
    let f = DeformedSystem::with_theta(1, 1, 2.5f64);
    let sp2f = f.super_jack(&partition![2]).poly.clone();
    let vf = f.rational_integral(2, &sp2f).unwrap().constant_term();
    assert!((vf - 6.0 / 7.0).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exponentials_are_inverse(coeffs in prop::collection::vec(-3i64..4, 7)) {
        let sys = DeformedSystem::with_theta(1, 1, Rational::from_int(3));
        let mut f = SymFunc::zero(Basis::PowerSum);
        for (lam, c) in (0..=4).flat_map(Partition::all).zip(coeffs) {
            f.add_term(lam, Rational::from_int(c));
        }
        let p = sys.phi_poly(&f);
        let there = sys.exp_half_l(&p, Sign::Minus).unwrap();
        prop_assert_eq!(sys.exp_half_l(&there, Sign::Plus).unwrap(), p);
    }
}
