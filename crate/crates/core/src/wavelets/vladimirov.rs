use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::padic::Ball;
use crate::wavelets::kozyrev::{kozyrev_wavelet, WaveletIndex};
use crate::wavelets::schwartz::{Piece, SchwartzFunction};

/// How the exterior part of the kernel integral is summed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailPolicy {
    /// Closed-form geometric series over all outer shells.
    Analytic,
    /// Explicit sum over this many outer shells.
    Truncated(u32),
}

/// Γ_(p)(-α) = ∫ e^{2πi x}|x|^{-α} d×x, continued to all α ≠ 0 by its
/// closed form (1 - p^{-1-α}) / (1 - p^α).
pub fn gamma_p(p: u64, alpha: Complex64) -> Result<Complex64> {
    let pa = (alpha * (p as f64).ln()).exp();
    if (pa - 1.0).norm() < 1e-12 {
        return Err(Error::Pole("Γ_p at p^α = 1".into()));
    }
    Ok((1.0 - pa.inv() / p as f64) / (1.0 - pa))
}

/// The defining shell sum of Γ_(p)(-α) cut off after `shells` inner shells.
/// Shells |x| = p^k with k ≥ 2 vanish, k = 1 gives -p^{-1-α}.
pub fn gamma_p_shell_sum(p: u64, alpha: Complex64, shells: u32) -> Result<Complex64> {
    if alpha.re >= 0.0 {
        return Err(Error::Divergent(format!("Γ_p shell sum needs Re α < 0, got {alpha}")));
    }
    let pf = p as f64;
    let lp = pf.ln();
    let mut total = -(-(alpha + 1.0) * lp).exp();
    for j in 0..shells {
        total += (1.0 - 1.0 / pf) * (alpha * (j as f64 * lp)).exp();
    }
    Ok(total)
}

/// ∫_B f dx for a ball B, with f given as disjoint flat pieces.
fn ball_mass(pieces: &[(Ball, Complex64)], b: &Ball) -> Complex64 {
    let mut s = Complex64::new(0.0, 0.0);
    for (q, v) in pieces {
        if b.contains_ball(q) {
            s += v * q.measure();
        } else if q.contains_ball(b) {
            s += v * b.measure();
        }
    }
    s
}

/// D^α f(x) = Γ_(p)(-α)^{-1} ∫ (f(x') - f(x)) |x' - x|^{-α-1} dx'.
///
/// The result is constant on each cell of the partition of the support
/// ball generated by the pieces of f, and is returned on that partition.
pub fn vladimirov_apply(f: &SchwartzFunction, alpha: f64, tail: TailPolicy) -> Result<SchwartzFunction> {
    let p = f.prime();
    let Some(r_top) = f.support_exponent() else {
        return Ok(SchwartzFunction::zero(p));
    };
    let flat = f
        .flat_pieces()
        .ok_or_else(|| Error::Unsupported("Vladimirov derivative of a non-constant radial profile".into()))?;
    if tail == TailPolicy::Analytic && alpha <= 0.0 {
        return Err(Error::Divergent(format!("exterior tail needs α > 0, got {alpha}")));
    }
    let gamma = gamma_p(p, Complex64::new(alpha, 0.0))?;
    let pf = p as f64;
    let balls: Vec<Ball> = flat.iter().map(|x| x.0).collect();
    let mut cells = Vec::new();
    refine_cover(Ball::origin(p, r_top), &balls, &mut cells);

    let mut pieces = Vec::with_capacity(cells.len());
    let mut origin_value = None;
    for cell in cells {
        let fx = flat
            .iter()
            .find(|(q, _)| q.contains_ball(&cell))
            .map(|x| x.1)
            .unwrap_or_default();
        let rc = cell.radius_exponent();
        let mut sum = Complex64::new(0.0, 0.0);
        let mut inner_mass = ball_mass(&flat, &cell);
        for k in rc + 1..=r_top {
            let bk = Ball::new(p, k, cell.key().scale_up((k - rc) as u32, p));
            let mass = ball_mass(&flat, &bk);
            let shell = mass - inner_mass - fx * (1.0 - 1.0 / pf) * pf.powi(k);
            sum += shell * pf.powf(-(k as f64) * (alpha + 1.0));
            inner_mass = mass;
        }
        let outer = match tail {
            TailPolicy::Analytic => -fx * (1.0 - 1.0 / pf) * pf.powf(-((r_top + 1) as f64) * alpha) / (1.0 - pf.powf(-alpha)),
            TailPolicy::Truncated(n) => (1..=n as i32)
                .map(|j| -fx * (1.0 - 1.0 / pf) * pf.powf(-((r_top + j) as f64) * alpha))
                .sum(),
        };
        let value = (sum + outer) / gamma;
        if cell.contains_zero() {
            origin_value = Some((rc, value));
        } else {
            pieces.push(Piece { ball: cell, value });
        }
    }
    let origin = origin_value.map(|(r, v)| crate::wavelets::schwartz::OriginPart {
        radius_exponent: r,
        terms: vec![crate::wavelets::schwartz::RadialTerm { coefficient: v, power: 0.0 }],
    });
    Ok(SchwartzFunction::from_parts_unchecked(p, pieces, origin))
}

/// Partition of `ball` fine enough that each given ball is a union of cells.
fn refine_cover(ball: Ball, targets: &[Ball], out: &mut Vec<Ball>) {
    let inside: Vec<Ball> = targets
        .iter()
        .filter(|t| t.radius_exponent() < ball.radius_exponent() && ball.contains_ball(t))
        .copied()
        .collect();
    if inside.is_empty() {
        out.push(ball);
        return;
    }
    for c in ball.children() {
        refine_cover(c, &inside, out);
    }
}

/// Max over cells of |D^α ψ_{n,0,1} - p^{α(1-n)} ψ_{n,0,1}|.
pub fn vladimirov_eigencheck(p: u64, n: i32, alpha: f64) -> Result<f64> {
    let psi = kozyrev_wavelet(p, &WaveletIndex::mother(n))?;
    let d = vladimirov_apply(&psi, alpha, TailPolicy::Analytic)?;
    let lambda = (p as f64).powf(alpha * (1 - n) as f64);
    max_deviation(&d, &psi, lambda)
}

/// Max over cells of |d(x) - λ·f(x)|, using one representative per cell.
pub fn max_deviation(d: &SchwartzFunction, f: &SchwartzFunction, lambda: f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    let mut reps = Vec::new();
    for q in d.pieces() {
        reps.push(q.ball);
    }
    if let Some(o) = d.origin() {
        reps.push(Ball::origin(d.prime(), o.radius_exponent));
    }
    for b in reps {
        let x = b.center_padic(crate::padic::DEFAULT_PRECISION)?;
        let dv = d.evaluate(&x)?;
        let fv = f.evaluate(&x)?;
        worst = worst.max((dv - fv * lambda).norm());
    }
    Ok(worst)
}
