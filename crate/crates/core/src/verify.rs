//! Parametrized invariant checks. Each returns a [`CheckOutcome`] rather
//! than panicking, so they can back both the acceptance suite and the CLI.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::deformed::{bound_check, DeformedSystem, MPoly};
use crate::error::Result;
use crate::exact::{specialize_theta, DensePoly, Rational, ThetaFunction, ThetaGuard};
use crate::forms;
use crate::operators::{dunkl_apply, symmetric_integral_apply, HarmonicMode, Sign};
use crate::partition::{Dominance, Partition};
use crate::scalar::Scalar;
use crate::symfunc::{spec_formula, Basis, JackAlgebra, SymFunc};

type Sys = DeformedSystem<ThetaFunction>;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub module: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn from_result(module: &'static str, name: impl Into<String>, r: Result<Option<String>>) -> Self {
        let (pass, detail) = match r {
            Ok(None) => (true, String::from("ok")),
            Ok(Some(failure)) => (false, failure),
            Err(e) => (false, format!("error: {e}")),
        };
        CheckOutcome {
            module,
            name: name.into(),
            pass,
            detail,
        }
    }
}

/// Runs `body`, turning the first failing case into the outcome's detail.
fn check(
    module: &'static str,
    name: impl Into<String>,
    body: impl FnOnce() -> Result<Option<String>>,
) -> CheckOutcome {
    CheckOutcome::from_result(module, name, body())
}

fn fail(msg: String) -> Result<Option<String>> {
    Ok(Some(msg))
}

fn random_theta_function(rng: &mut ChaCha8Rng) -> ThetaFunction {
    let mut poly = |deg: usize| {
        DensePoly::new(
            (0..=deg)
                .map(|_| Rational::new(rng.gen_range(-6i64..7).into(), rng.gen_range(1i64..5).into()))
                .collect(),
        )
    };
    let num = poly(2);
    let mut den = poly(2);
    if den.is_zero() {
        den = DensePoly::one();
    }
    ThetaFunction::new(num, den).expect("nonzero denominator")
}

/// Field axioms and the specialization homomorphism on seeded random
/// triples.
pub fn field_axioms(samples: usize, seed: u64) -> CheckOutcome {
    check("exact-coeff", format!("field axioms and specialization, {samples} triples"), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let value = Rational::new(7.into(), 5.into());
        for _ in 0..samples {
            let (a, b, c) = (
                random_theta_function(&mut rng),
                random_theta_function(&mut rng),
                random_theta_function(&mut rng),
            );
            let assoc = (a.clone() + b.clone()) + c.clone() == a.clone() + (b.clone() + c.clone())
                && (a.clone() * b.clone()) * c.clone() == a.clone() * (b.clone() * c.clone());
            let distrib = a.clone() * (b.clone() + c.clone()) == a.clone() * b.clone() + a.clone() * c.clone();
            let inverse = a.is_zero() || a.recip()? * a.clone() == ThetaFunction::from(1);
            if !(assoc && distrib && inverse) {
                return fail(format!("axiom failure on {a}, {b}, {c}"));
            }
            let ev = |x: &ThetaFunction| specialize_theta(x, &value, ThetaGuard::None);
            if let (Ok(ea), Ok(eb)) = (ev(&a), ev(&b)) {
                if ev(&(a.clone() * b.clone()))? != &ea * &eb || ev(&(a.clone() + b.clone()))? != ea + eb {
                    return fail(format!("specialization not multiplicative/additive on {a}, {b}"));
                }
            }
        }
        Ok(None)
    })
}

/// Conjugation, arm/leg duality, dominance reversal and the fat-hook box
/// count for all partitions up to `max_degree`.
pub fn partition_identities(max_degree: usize, n: usize, m: usize) -> CheckOutcome {
    check("partitions", format!("combinatorial identities, |λ| ≤ {max_degree}"), || {
        for k in 0..=max_degree {
            let all = Partition::all(k);
            for lam in &all {
                let conj = lam.conjugate();
                if conj.conjugate() != *lam || conj.weight() != k {
                    return fail(format!("conjugation fails on {lam}"));
                }
                for (i, j) in lam.boxes() {
                    let (s, t) = (lam.arm_leg(i, j)?, conj.arm_leg(j, i)?);
                    if s.arm != t.leg || s.leg != t.arm {
                        return fail(format!("arm/leg duality fails on {lam} at ({i},{j})"));
                    }
                }
                for mu in &all {
                    if mu.dominated_by(lam) != lam.conjugate().dominated_by(&mu.conjugate()) {
                        return fail(format!("dominance reversal fails on {mu}, {lam}"));
                    }
                }
                if let Ok(hp) = lam.east_south(n, m) {
                    let e: usize = hp.east.iter().sum();
                    let s: usize = hp.south.iter().sum();
                    if e + s + lam.rectangle_overlap(n, m) != k {
                        return fail(format!("fat-hook box count fails on {lam}"));
                    }
                }
            }
        }
        Ok(None)
    })
}

/// Triangularity, orthogonality, Stanley norms and the specialization
/// formula for all Jack functions up to `max_degree`.
pub fn jack_sanity(alg: &JackAlgebra<ThetaFunction>, max_degree: usize) -> CheckOutcome {
    check("symfunc", format!("Jack triangularity/orthogonality/norms/specialization, |λ| ≤ {max_degree}"), || {
        let theta = alg.theta().clone();
        let one = ThetaFunction::from(1);
        for k in 0..=max_degree {
            let labels = Partition::all(k);
            for lam in &labels {
                let mono = alg.jack(lam);
                if mono.coeff(lam) != one {
                    return fail(format!("P_{lam} is not monic"));
                }
                for mu in mono.support() {
                    if !matches!(mu.dominance_compare(lam)?, Dominance::Less | Dominance::Equal) {
                        return fail(format!("P_{lam} contains m_{mu}"));
                    }
                }
                if alg.norm(lam) * lam.b(&theta) != one {
                    return fail(format!("<P_{lam},P_{lam}> b_{lam} != 1"));
                }
                if alg.jack_p(lam).eps_x() != spec_formula(lam, &theta) {
                    return fail(format!("eps_X(P_{lam}) differs from the product formula"));
                }
                for mu in &labels {
                    if mu < lam && !alg.scalar_product(&alg.jack_p(lam), &alg.jack_p(mu)).is_zero() {
                        return fail(format!("<P_{lam},P_{mu}> != 0"));
                    }
                }
            }
        }
        Ok(None)
    })
}

/// Σ_{|λ|=k} C_λ = p_1^k.
pub fn kaneko_sum_rule(alg: &JackAlgebra<ThetaFunction>, max_k: usize) -> CheckOutcome {
    check("symfunc", format!("Kaneko sum rule, k ≤ {max_k}"), || {
        for k in 0..=max_k {
            let mut total = SymFunc::zero(Basis::PowerSum);
            for lam in Partition::all(k) {
                total = total.add(&alg.kaneko_c(&lam));
            }
            if total != SymFunc::power_sum(Partition::new(vec![1; k])) {
                return fail(format!("sum of C_λ at k={k} is {total}"));
            }
        }
        Ok(None)
    })
}

/// φ_{n,m}(P_λ) = 0 iff λ ∉ H_{n,m}, and the flag agrees.
pub fn kernel_theorem(sys: &Sys, max_degree: usize) -> CheckOutcome {
    check("deformed-ring", format!("kernel theorem ({},{}), |λ| ≤ {max_degree}", sys.n(), sys.m()), || {
        for k in 0..=max_degree {
            for lam in Partition::all(k) {
                let sp = sys.super_jack(&lam);
                let outside = !lam.in_fat_hook(sys.n(), sys.m());
                if sp.poly.is_zero() != outside || sp.outside_fat_hook != outside {
                    return fail(format!("SP_{lam}: zero={}, in fat hook={}", sp.poly.is_zero(), !outside));
                }
            }
        }
        Ok(None)
    })
}

/// Quasi-invariance for every (i, j) and block symmetry of φ(m_λ), which
/// span all φ-images up to `max_degree`.
pub fn membership(sys: &Sys, max_degree: usize) -> CheckOutcome {
    check("deformed-ring", format!("quasi-invariance ({},{}), degree ≤ {max_degree}", sys.n(), sys.m()), || {
        for k in 0..=max_degree {
            for lam in Partition::all(k) {
                let p = sys.phi_basis(Basis::Monomial, lam.clone()).poly;
                if !p.is_block_symmetric() {
                    return fail(format!("φ(m_{lam}) not block symmetric"));
                }
                for i in 0..sys.n() {
                    for j in 0..sys.m() {
                        if !sys.quasi_invariance_check(&p, i, j) {
                            return fail(format!("φ(m_{lam}) fails quasi-invariance at ({i},{j})"));
                        }
                    }
                }
            }
        }
        Ok(None)
    })
}

/// φ(fg) = φ(f)φ(g) on products of basis elements, plus SP_λ(1^{n+m}) against
/// the specialization formula.
pub fn phi_homomorphism(sys: &Sys, max_degree: usize) -> CheckOutcome {
    check("deformed-ring", format!("φ homomorphism and evaluation at ones ({},{})", sys.n(), sys.m()), || {
        let basis: Vec<SymFunc<ThetaFunction>> = (1..=max_degree)
            .flat_map(Partition::all)
            .map(SymFunc::monomial)
            .collect();
        for f in &basis {
            for g in &basis {
                if f.degree().unwrap_or(0) + g.degree().unwrap_or(0) > max_degree {
                    continue;
                }
                let lhs = sys.phi_poly(&f.multiply(g));
                let rhs = sys.phi_poly(f).mul(&sys.phi_poly(g));
                if lhs != rhs {
                    return fail(format!("φ not multiplicative on {f} · {g}"));
                }
            }
        }
        for k in 0..=max_degree {
            for lam in sys.labels(k) {
                if !sys.eval_ones_check(&lam)? {
                    return fail(format!("SP_{lam}(1,…,1) differs from the specialization formula"));
                }
            }
        }
        Ok(None)
    })
}

/// super_jack(λ, n, 0) is the Jack polynomial in n variables.
pub fn m_zero_jack(max_n: usize, max_degree: usize) -> CheckOutcome {
    check("deformed-ring", format!("m=0 reduction to Jack polynomials, n ≤ {max_n}"), || {
        for n in 1..=max_n {
            let sys = Sys::symbolic(n, 0);
            for k in 0..=max_degree {
                for lam in Partition::all(k) {
                    if sys.super_jack(&lam).poly != sys.jack_in_variables(&sys.algebra().jack(&lam)) {
                        return fail(format!("n={n}: SP_{lam} differs from P_{lam}(x_1..x_n)"));
                    }
                }
            }
        }
        Ok(None)
    })
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

/// D_i D_j = D_j D_i on every monomial of degree ≤ `max_degree`.
pub fn dunkl_commutativity(max_n: usize, max_degree: u32) -> CheckOutcome {
    check("cms-operators", format!("Dunkl commutativity, N ≤ {max_n}, degree ≤ {max_degree}"), || {
        let theta = ThetaFunction::theta();
        for nv in 2..=max_n {
            for deg in 0..=max_degree {
                for e in monomials(nv, deg) {
                    let p = MPoly::from_terms(nv, 0, [(e.clone(), ThetaFunction::from(1))]);
                    for i in 0..nv {
                        for j in i + 1..nv {
                            let a = dunkl_apply(i, &dunkl_apply(j, &p, &theta)?, &theta)?;
                            let b = dunkl_apply(j, &dunkl_apply(i, &p, &theta)?, &theta)?;
                            if a != b {
                                return fail(format!("D_{i} D_{j} != D_{j} D_{i} on x^{e:?}"));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    })
}

/// L^{(r)}_{n,0} equals Res p_r(D) on symmetric polynomials.
pub fn m_zero_integrals(max_n: usize, max_r: u32, max_degree: usize) -> CheckOutcome {
    check("cms-operators", format!("m=0 reduction of deformed integrals, r ≤ {max_r}"), || {
        for n in 1..=max_n {
            let sys = Sys::symbolic(n, 0);
            for k in 0..=max_degree {
                for lam in Partition::all(k) {
                    let p = sys.phi_basis(Basis::Monomial, lam.clone()).poly;
                    for r in 1..=max_r {
                        let f = SymFunc::power_sum(Partition::new(vec![r as usize]));
                        let res = symmetric_integral_apply(&f, &p, sys.theta())?;
                        if sys.rational_integral(r, &p)? != res {
                            return fail(format!("n={n}, r={r}, m_{lam}"));
                        }
                        if !res.is_block_symmetric() {
                            return fail(format!("Res p_{r}(D) m_{lam} not symmetric"));
                        }
                    }
                }
            }
        }
        Ok(None)
    })
}

/// [L^{(r)}, L^{(s)}] = 0 on SP_λ, and L^{(2)} agrees with the closed form.
pub fn integral_commutativity(sys: &Sys, max_r: u32, max_degree: usize) -> CheckOutcome {
    check("cms-operators", format!("commuting rational integrals ({},{}), r,s ≤ {max_r}", sys.n(), sys.m()), || {
        for k in 0..=max_degree {
            for lam in sys.labels(k) {
                let p = sys.super_jack(&lam).poly.clone();
                if sys.rational_integral(2, &p)? != sys.laplacian(&p)? {
                    return fail(format!("recursion r=2 differs from L_(n,m) on SP_{lam}"));
                }
                for r in 1..=max_r {
                    for s in r + 1..=max_r {
                        let a = sys.rational_integral(r, &sys.rational_integral(s, &p)?)?;
                        let b = sys.rational_integral(s, &sys.rational_integral(r, &p)?)?;
                        if a != b {
                            return fail(format!("[L^({r}), L^({s})] SP_{lam} != 0"));
                        }
                    }
                }
            }
        }
        Ok(None)
    })
}

/// SP_λ is an eigenfunction of every 𝓛^{(r)}.
pub fn trig_eigenfunctions(sys: &Sys, max_r: u32, max_degree: usize) -> CheckOutcome {
    check("cms-operators", format!("trigonometric joint eigenfunctions ({},{}), r ≤ {max_r}", sys.n(), sys.m()), || {
        for k in 0..=max_degree {
            for lam in sys.labels(k) {
                for r in 1..=max_r {
                    sys.trig_eigenvalue(&lam, r)?;
                }
            }
        }
        Ok(None)
    })
}

/// Intertwining, agreement of the two harmonic modes, and SH_λ as joint
/// eigenfunctions with the trigonometric eigenvalues.
pub fn intertwining(sys: &Sys, max_r: u32, max_degree: usize) -> CheckOutcome {
    check("cms-operators", format!("Lassalle–Nekrasov intertwining ({},{}), r ≤ {max_r}", sys.n(), sys.m()), || {
        for k in 0..=max_degree {
            for lam in sys.labels(k) {
                let sp = sys.super_jack(&lam).poly.clone();
                let sh = sys.exp_half_l(&sp, Sign::Minus)?;
                for r in 1..=max_r {
                    let left = sys.exp_half_l(&sys.trig_integral(r, &sp)?, Sign::Minus)?;
                    let conj = sys.harmonic_integral(r, &sh, HarmonicMode::Conjugation)?;
                    let comm = sys.harmonic_integral(r, &sh, HarmonicMode::Commutator)?;
                    if left != conj {
                        return fail(format!("diagram does not commute for r={r} on SP_{lam}"));
                    }
                    if conj != comm {
                        return fail(format!("conjugation and commutator modes differ for r={r} on SH_{lam}"));
                    }
                    let c = sys.trig_eigenvalue(&lam, r)?;
                    if comm != sh.scale(&c) {
                        return fail(format!("SH_{lam} not an eigenfunction of S^({r}) with eigenvalue {c}"));
                    }
                }
            }
        }
        Ok(None)
    })
}

/// Gram matrix diagonal with the closed-form entries.
pub fn orthogonality(sys: &Sys, degree: usize) -> CheckOutcome {
    check("forms", format!("Gram matrix ({},{}), degree {degree}", sys.n(), sys.m()), || {
        let g = forms::gram_matrix(sys, degree)?;
        if !g.is_diagonal() {
            return fail("off-diagonal entry is nonzero".into());
        }
        if !g.diagonal_matches() {
            return fail("diagonal differs from (θn−m)_λ/b_λ".into());
        }
        if g.expected_diagonal.iter().any(|d| d.is_zero()) {
            return fail("expected diagonal has a zero entry".into());
        }
        Ok(None)
    })
}

/// (SP_(2), SP_(2))_{1,1} = 2(θ−1)/(1+θ) by operators and by formula.
pub fn worked_value() -> CheckOutcome {
    check("forms", "(SP_(2),SP_(2))_{1,1} = 2(θ−1)/(1+θ)", || {
        let sys = Sys::symbolic(1, 1);
        let lam = Partition::new(vec![2]);
        let target: ThetaFunction = "2*(theta-1)/(1+theta)".parse()?;
        let p2 = sys.algebra().jack_p(&lam);
        let direct = forms::bilinear_form(&sys, &p2, &p2)?;
        let formula = forms::expected_norm(&sys, &lam);
        if direct != target || formula != target {
            return fail(format!("direct {direct}, formula {formula}"));
        }
        Ok(None)
    })
}

/// Form symmetry on basis pairs and representative independence against
/// kernel elements.
pub fn form_properties(sys: &Sys, degree: usize) -> CheckOutcome {
    check("forms", format!("symmetry and representative independence ({},{})", sys.n(), sys.m()), || {
        let all = Partition::all(degree);
        for a in &all {
            for b in &all {
                if b < a {
                    continue;
                }
                let (f, g) = (SymFunc::power_sum(a.clone()), SymFunc::power_sum(b.clone()));
                if forms::bilinear_form(sys, &f, &g)? != forms::bilinear_form(sys, &g, &f)? {
                    return fail(format!("(p_{a}, p_{b}) not symmetric"));
                }
            }
        }
        for kappa in all.iter().filter(|l| !l.in_fat_hook(sys.n(), sys.m())) {
            for g in &all {
                let f = SymFunc::power_sum(g.clone());
                if !forms::representative_independence_check(sys, &f, kappa, &f)? {
                    return fail(format!("adding P_{kappa} changes (p_{g}, p_{g})"));
                }
            }
        }
        Ok(None)
    })
}

pub fn reproducing(sys: &Sys, max_degree: usize) -> CheckOutcome {
    check("forms", format!("reproducing kernel ({},{}), |μ| ≤ {max_degree}", sys.n(), sys.m()), || {
        for k in 0..=max_degree {
            for mu in sys.labels(k) {
                if !forms::reproducing_check(sys, &mu)? {
                    return fail(format!("reproducing identity fails for μ={mu}"));
                }
            }
        }
        Ok(None)
    })
}

pub fn hermite_generating(sys: &Sys, dmax: usize) -> CheckOutcome {
    check("forms", format!("super-Hermite generating expansion ({},{}), dmax {dmax}", sys.n(), sys.m()), || {
        Ok((!forms::hermite_generating_check(sys, dmax)?).then(|| "expansion does not reproduce SH_λ".into()))
    })
}

pub fn hermite_isometry(sys: &Sys, degree: usize) -> CheckOutcome {
    check("forms", format!("super-Hermite Gram via isometry ({},{}), degree {degree}", sys.n(), sys.m()), || {
        let h = forms::hermite_gram(sys, degree)?;
        let g = forms::gram_matrix(sys, degree)?;
        if h.matrix != g.matrix || !h.pass {
            return fail("hermite_gram differs from gram_matrix".into());
        }
        Ok(None)
    })
}

pub fn pochhammer_vanishing(n: usize, m: usize, max_degree: usize) -> CheckOutcome {
    check("forms", format!("(θn−m)_λ = 0 iff (n+1,m+1) ∈ λ, ({n},{m})"), || {
        let theta = ThetaFunction::theta();
        let a = theta.clone() * ThetaFunction::from(n as i64) - ThetaFunction::from(m as i64);
        for k in 0..=max_degree {
            for lam in Partition::all(k) {
                if lam.pochhammer(&a, &theta).is_zero() != lam.contains_box(n + 1, m + 1) {
                    return fail(format!("λ={lam}"));
                }
            }
        }
        Ok(None)
    })
}

/// Growth bound on SP_λ at seeded random complex points.
pub fn analytic_bound(sys: &Sys, theta: &Rational, max_degree: usize, points: usize, seed: u64) -> CheckOutcome {
    check("deformed-ring", format!("|SP_λ| bound ({},{}), θ={theta}", sys.n(), sys.m()), || {
        let report = bound_check(sys, theta, max_degree, points, seed)?;
        match report.samples.iter().find(|s| !s.pass) {
            Some(s) => fail(format!("λ={} ratio {:.3e}", s.lambda, s.max_ratio)),
            None => Ok(None),
        }
    })
}

/// The full suite at the given scale, one outcome per check.
pub fn verify_all(n: usize, m: usize, degree: usize) -> Vec<CheckOutcome> {
    let alg = std::sync::Arc::new(JackAlgebra::symbolic());
    let sys = Sys::new(n, m, alg.clone());
    let r = degree.min(3) as u32;
    let checks: Vec<Box<dyn Fn() -> CheckOutcome + Send + Sync + '_>> = vec![
        Box::new(|| field_axioms(50, 1)),
        Box::new(|| partition_identities(degree.max(5), n, m)),
        Box::new(|| jack_sanity(&alg, degree)),
        Box::new(|| kaneko_sum_rule(&alg, degree)),
        Box::new(|| kernel_theorem(&sys, degree)),
        Box::new(|| membership(&sys, degree)),
        Box::new(|| phi_homomorphism(&sys, degree.min(3))),
        Box::new(|| m_zero_jack(n.max(1), degree)),
        Box::new(|| dunkl_commutativity(3, degree.min(4) as u32)),
        Box::new(|| m_zero_integrals(n.max(1), r, degree)),
        Box::new(|| integral_commutativity(&sys, r, degree)),
        Box::new(|| trig_eigenfunctions(&sys, r, degree)),
        Box::new(|| intertwining(&sys, r, degree)),
        Box::new(worked_value),
        Box::new(|| form_properties(&sys, degree.min(3))),
        Box::new(|| reproducing(&sys, degree.min(3))),
        Box::new(|| hermite_generating(&sys, degree.min(3))),
        Box::new(|| pochhammer_vanishing(n, m, degree.max(4))),
    ];
    let mut out: Vec<CheckOutcome> = checks.par_iter().map(|c| c()).collect();
    for d in 0..=degree {
        out.push(orthogonality(&sys, d));
        out.push(hermite_isometry(&sys, d));
    }
    for value in [2, 3] {
        let theta = Rational::from_int(value);
        if (ThetaGuard::FatHook { n, m }).check(&theta).is_ok() {
            out.push(analytic_bound(&sys, &theta, degree.min(4), 50, 2024));
        }
    }
    out
}
