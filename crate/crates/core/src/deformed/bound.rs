use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{evaluate_numeric, DeformedSystem};
use crate::error::Result;
use crate::exact::{Rational, ThetaFunction, ThetaGuard};
use crate::partition::Partition;

/// Relative slack allowed on top of the analytic bound.
pub const BOUND_SLACK: f64 = 1e-9;

/// Worst observed ratio |SP_λ(x,y)| / bound over the sample points.
#[derive(Debug, Clone)]
pub struct BoundSample {
    pub lambda: Partition,
    pub max_ratio: f64,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub theta: Rational,
    pub points: usize,
    pub seed: u64,
    pub samples: Vec<BoundSample>,
    pub pass: bool,
}

/// `count` points in C^{dim} with every coordinate of modulus at most
/// `radius`, from a seeded ChaCha stream.
pub fn sample_points(dim: usize, count: usize, radius: f64, seed: u64) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    let r = radius * rng.gen::<f64>();
                    let phase = std::f64::consts::TAU * rng.gen::<f64>();
                    Complex64::from_polar(r, phase)
                })
                .collect()
        })
        .collect()
}

/// Checks |SP_λ(x,y)| ≤ b_λ^{−1/2} (‖(x,y)‖_∞ (√θ n + m/√θ))^{|λ|} for all
/// λ ∈ H_{n,m} with |λ| ≤ `max_degree` at seeded random points.
pub fn bound_check(
    sys: &DeformedSystem<ThetaFunction>,
    theta: &Rational,
    max_degree: usize,
    points: usize,
    seed: u64,
) -> Result<BoundReport> {
    let (n, m) = (sys.n(), sys.m());
    ThetaGuard::FatHook { n, m }.check(theta)?;
    let th = theta.to_f64().unwrap_or(f64::NAN);
    let scale = th.sqrt() * n as f64 + m as f64 / th.sqrt();
    let pts = sample_points(n + m, points, 2.0, seed);
    let mut samples = Vec::new();
    for d in 0..=max_degree {
        for lam in sys.labels(d) {
            let sp = sys.super_jack(&lam);
            let b = lam.b(theta).to_f64().unwrap_or(f64::NAN);
            let mut worst = 0.0f64;
            for pt in &pts {
                let value = evaluate_numeric(&sp.poly, pt, theta)?.norm();
                let sup = pt.iter().map(|z| z.norm()).fold(0.0, f64::max);
                let bound = (sup * scale).powi(d as i32) / b.sqrt();
                worst = worst.max(value / bound);
            }
            samples.push(BoundSample {
                lambda: lam,
                max_ratio: worst,
                pass: worst <= 1.0 + BOUND_SLACK,
            });
        }
    }
    let pass = samples.iter().all(|s| s.pass);
    Ok(BoundReport {
        n,
        m,
        theta: theta.clone(),
        points,
        seed,
        samples,
        pass,
    })
}
