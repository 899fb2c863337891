use proptest::prelude::*;
use superjack::deformed::specialize_poly;
use superjack::{
    partition, Basis, Error, Partition, Rational, RationalSystem, Scalar, SymFunc, SymbolicSystem, ThetaFunction,
    ThetaGuard,
};

fn t(s: &str) -> ThetaFunction {
    s.parse().unwrap()
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

#[test]
fn theta_function_display_round_trips() {
    for s in ["(theta-1)/theta", "2*(theta-1)/(1+theta)", "3*theta^2-1/2", "0", "-7/3"] {
        let a = t(s);
        assert_eq!(a.to_string().parse::<ThetaFunction>().unwrap(), a, "{s}");
    }
}

#[test]
fn guard_rejects_excluded_values() {
    let sys = SymbolicSystem::symbolic(1, 1);
    let p = sys.super_jack(&partition![2]).poly.clone();
    // θ = 1 is excluded for n = m = 1.
    assert!(matches!(
        specialize_poly(&p, &Rational::from_int(1), ThetaGuard::FatHook { n: 1, m: 1 }),
        Err(Error::ExcludedParameter { .. })
    ));
    assert!(specialize_poly(&p, &q(5, 2), ThetaGuard::FatHook { n: 1, m: 1 }).is_ok());
    assert!(ThetaGuard::NonPositiveRational.check(&q(-1, 2)).is_err());
}

#[test]
fn specialized_super_jacks_match_direct_rational_computation() {
    let value = q(5, 2);
    let sym = SymbolicSystem::symbolic(2, 1);
    let rat = RationalSystem::with_theta(2, 1, value.clone());
    for k in 0..=4 {
        for lam in Partition::all(k) {
            let a = specialize_poly(&sym.super_jack(&lam).poly, &value, ThetaGuard::None).unwrap();
            assert_eq!(a, rat.super_jack(&lam).poly, "{lam:?}");
        }
    }
}

#[test]
fn super_jack_worked_example() {
    // SP_(1,1) for n = m = 1 is p_1^2/2 − p_2/2 after φ; its Laplacian is a constant.
    let sys = SymbolicSystem::symbolic(1, 1);
    let sp = sys.super_jack(&partition![1, 1]).poly.clone();
    assert_eq!(sys.laplacian(&sp).unwrap().constant_term(), t("(theta-1)/theta"));
    let sh = sys.super_hermite(&partition![1, 1]).unwrap();
    assert_eq!(sh.sub(&sp).constant_term(), t("-(theta-1)/(2*theta)"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn phi_is_a_ring_homomorphism(
        a in prop::collection::vec(-4i64..5, 7),
        b in prop::collection::vec(-4i64..5, 7),
        n in 1usize..3,
        m in 0usize..3,
    ) {
        let sys = RationalSystem::with_theta(n, m, q(7, 3));
        let build = |c: &[i64]| {
            let mut f = SymFunc::zero(Basis::Monomial);
            for (lam, &x) in (0..=3).flat_map(Partition::all).zip(c) {
                f.add_term(lam, Rational::from_int(x));
            }
            f
        };
        let (f, g) = (build(&a), build(&b));
        let lhs = sys.phi_poly(&f.multiply(&g));
        let rhs = sys.phi_poly(&f).mul(&sys.phi_poly(&g));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(sys.phi_poly(&f).is_block_symmetric());
        prop_assert!(sys.is_member(&sys.phi_poly(&g)));
    }

    #[test]
    fn specialization_is_a_homomorphism(a in -5i64..6, b in 1i64..5, c in -3i64..4) {
        let x = t(&format!("({a}*theta+{c})/({b}*theta^2+1)"));
        let y = t(&format!("theta-{c}"));
        let v = q(a.abs() + 2, b);
        let ev = |f: &ThetaFunction| f.eval(&v).unwrap();
        prop_assert_eq!(ev(&(x.clone() * y.clone())), ev(&x) * ev(&y));
        prop_assert_eq!(ev(&(x.clone() + y.clone())), ev(&x) + ev(&y));
    }
}
