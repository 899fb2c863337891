use crate::deformed::MPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symfunc::SymFunc;

fn require_plain(p: &MPoly<impl Scalar>) -> Result<()> {
    if p.m() != 0 {
        return Err(Error::LayoutMismatch {
            expected_n: p.nvars(),
            expected_m: 0,
            n: p.n(),
            m: p.m(),
        });
    }
    Ok(())
}

/// D_i p = ∂p/∂x_i + θ Σ_{j≠i} (p − σ_{ij}p)/(x_i − x_j), i 0-based.
pub fn dunkl_apply<C: Scalar>(i: usize, p: &MPoly<C>, theta: &C) -> Result<MPoly<C>> {
    require_plain(p)?;
    let mut out = p.derivative(i);
    for j in (0..p.nvars()).filter(|&j| j != i) {
        let q = p.sub(&p.swap(i, j)).divided_difference(i, j)?;
        out = out.add(&q.scale(theta));
    }
    Ok(out)
}

/// Res f(D_1, …, D_N) on a symmetric polynomial, with p_r(D) = Σ_i D_i^r.
pub fn symmetric_integral_apply<C: Scalar>(f: &SymFunc<C>, p: &MPoly<C>, theta: &C) -> Result<MPoly<C>> {
    require_plain(p)?;
    if !p.is_block_symmetric() {
        return Err(Error::AsymmetricInput);
    }
    let mut out = MPoly::zero(p.n(), 0);
    for (mu, c) in f.to_power_sum().terms() {
        let mut q = p.clone();
        for &r in mu.parts() {
            let mut next = MPoly::zero(p.n(), 0);
            for i in 0..p.nvars() {
                let mut t = q.clone();
                for _ in 0..r {
                    t = dunkl_apply(i, &t, theta)?;
                }
                next = next.add(&t);
            }
            q = next;
        }
        out = out.add(&q.scale(c));
    }
    Ok(out)
}
