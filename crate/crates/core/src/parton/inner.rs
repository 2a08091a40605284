use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::parton::state::{ladder, Direction, PartonState};
use crate::wavelets::{Measure, SchwartzFunction};

/// ⟨ψ_{n,0,1}, ψ_{n',0,1}⟩ for the measure |x|^{k-1} d×x.
///
/// The mother wavelets are not orthogonal for this measure unless k = 2,
/// so states pair through this full matrix.
pub fn gram_entry(p: u64, k: f64, n: i32, n2: i32) -> Result<f64> {
    let w = k - 1.0;
    if w <= 0.0 {
        return Err(Error::Divergent(format!("|x|^{w} d×x is not summable near 0")));
    }
    let pf = p as f64;
    let tail = 1.0 / (1.0 - pf.powf(-w));
    if n == n2 {
        return Ok((1.0 - 1.0 / pf) * pf.powf(n as f64 * (w - 1.0)) * tail);
    }
    let (hi, lo) = if n > n2 { (n, n2) } else { (n2, n) };
    let lo_f = lo as f64;
    let mean = -pf.powf(lo_f * w) / pf + (1.0 - 1.0 / pf) * pf.powf((lo_f - 1.0) * w) * tail;
    Ok(pf.powf(-(hi as f64 + lo_f) / 2.0) * mean)
}

fn check_unrescaled(f: &PartonState, g: &PartonState) -> Result<()> {
    if f.prime != g.prime {
        return Err(Error::PrimeMismatch(f.prime, g.prime));
    }
    if f.rescaled || g.rescaled {
        return Err(Error::StateMismatch("inner product I takes un-rescaled states".into()));
    }
    Ok(())
}

/// ∫ |x|^{k-1} conj(f) g d×x through the closed-form Gram matrix. The states
/// may have different truncations.
pub fn inner_product_i(f: &PartonState, g: &PartonState, k: f64) -> Result<Complex64> {
    check_unrescaled(f, g)?;
    let mut total = Complex64::new(0.0, 0.0);
    for (m, a) in f.coeffs.iter().enumerate() {
        if *a == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (m2, b) in g.coeffs.iter().enumerate() {
            total += a.conj() * b * gram_entry(f.prime, k, 1 - m as i32, 1 - m2 as i32)?;
        }
    }
    Ok(total)
}

/// Same integral, by assembling both functions on ℚ_p and summing over balls.
pub fn inner_product_i_integral(f: &PartonState, g: &PartonState, k: f64) -> Result<Complex64> {
    check_unrescaled(f, g)?;
    let a = f.to_schwartz()?;
    let b = g.to_schwartz()?;
    SchwartzFunction::integrate_product(&a, &b, Measure::Multiplicative, Complex64::new(k - 1.0, 0.0), None)
}

#[derive(Clone, Debug, PartialEq)]
pub struct OverlapII {
    pub value: Complex64,
    /// Σ_{m ≤ j} conj(c_{f,m}) c_{g,m} for j = 0..=M.
    pub partial_sums: Vec<Complex64>,
}

/// Σ_m conj(c_{f,m}) c_{g,m}; the d×x pairing of rescaled states.
pub fn inner_product_ii(f: &PartonState, g: &PartonState) -> Result<OverlapII> {
    f.compatible(g)?;
    if !f.rescaled {
        return Err(Error::StateMismatch("inner product II takes rescaled states".into()));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let partial_sums: Vec<Complex64> = f
        .coeffs
        .iter()
        .zip(&g.coeffs)
        .map(|(a, b)| {
            acc += a.conj() * b;
            acc
        })
        .collect();
    Ok(OverlapII { value: acc, partial_sums })
}

/// ⟨a₊f, g⟩ compared with the scaled ⟨f, a₋g⟩, with the boundary pieces
/// named separately:
/// `lhs = scale·rhs + ground_boundary + truncation_boundary + residual`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointReport {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub scale: f64,
    /// -conj(c_{f,0})⟨ψ_2, g⟩: a₊ annihilates the ground state while the
    /// dilation it comes from does not.
    pub ground_boundary: Complex64,
    /// scale·⟨f, c_{g,M}ψ_{-M}⟩: the part of a₋g pushed out of the window.
    pub truncation_boundary: Complex64,
    pub residual: f64,
}

/// Variant I: a₊† = p^{k-2} a₋ up to the two boundary terms.
pub fn adjoint_check_i(f: &PartonState, g: &PartonState, k: f64) -> Result<AdjointReport> {
    check_unrescaled(f, g)?;
    let p = f.prime;
    let m = g.truncation;
    let scale = (p as f64).powf(k - 2.0);
    let lhs = inner_product_i(&ladder(f, Direction::Lower).state, g, k)?;
    let raised = ladder(g, Direction::Raise);
    let rhs = inner_product_i(f, &raised.state, k)?;
    let mut spill = 0.0 * Complex64::new(0.0, 0.0);
    for (i, a) in f.coeffs.iter().enumerate() {
        spill += a.conj() * raised.lost_tail * gram_entry(p, k, 1 - i as i32, -(m as i32))?;
    }
    let truncation_boundary = spill * scale;
    let mut ground = Complex64::new(0.0, 0.0);
    for (i, b) in g.coeffs.iter().enumerate() {
        ground += b * gram_entry(p, k, 2, 1 - i as i32)?;
    }
    let ground_boundary = -f.coeffs[0].conj() * ground;
    let residual = (lhs - scale * rhs - ground_boundary - truncation_boundary).norm();
    Ok(AdjointReport { lhs, rhs, scale, ground_boundary, truncation_boundary, residual })
}

/// Variant II: 𝐚₊† = 𝐚₋ on the window.
pub fn adjoint_check_ii(f: &PartonState, g: &PartonState) -> Result<AdjointReport> {
    let lhs = inner_product_ii(&ladder(f, Direction::Lower).state, g)?.value;
    let raised = ladder(g, Direction::Raise);
    let rhs = inner_product_ii(f, &raised.state)?.value;
    let zero = Complex64::new(0.0, 0.0);
    Ok(AdjointReport {
        lhs,
        rhs,
        scale: 1.0,
        ground_boundary: zero,
        truncation_boundary: zero,
        residual: (lhs - rhs).norm(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OverlapClass {
    /// Same Hecke eigenvalue at p: partial sums grow without bound.
    Diagonal,
    /// Partial sums of U_m(cos a)U_m(cos b) stay below `bound`.
    Bounded { bound: f64 },
    /// A root of unity ±1 on one side with a different eigenvalue on the other.
    Unclassified,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dichotomy {
    pub class: OverlapClass,
    /// (M, Σ_{m ≤ M} c_{f,m} c_{g,m}) at each requested window.
    pub partial_sums: Vec<(usize, f64)>,
}

/// Classify Σ_m U_m(cos a)U_m(cos b) for Hecke angles a, b at one prime,
/// and tabulate partial sums on the given windows.
pub fn overlap_dichotomy(a: f64, b: f64, windows: &[usize]) -> Dichotomy {
    let (ca, cb) = (a.cos(), b.cos());
    let (sa, sb) = (a.sin(), b.sin());
    let eps = 1e-12;
    let class = if (ca - cb).abs() < eps {
        OverlapClass::Diagonal
    } else if sa.abs() < eps || sb.abs() < eps {
        OverlapClass::Unclassified
    } else {
        let bound = (1.0 / ((a - b) / 2.0).sin().abs() + 1.0 / ((a + b) / 2.0).sin().abs()) / (2.0 * (sa * sb).abs());
        OverlapClass::Bounded { bound }
    };
    let top = windows.iter().copied().max().unwrap_or(0);
    let (mut ua, mut ua_prev) = (1.0, 0.0);
    let (mut ub, mut ub_prev) = (1.0, 0.0);
    let mut sum = 0.0;
    let mut partial_sums = Vec::new();
    for m in 0..=top {
        sum += ua * ub;
        if windows.contains(&m) {
            partial_sums.push((m, sum));
        }
        let na = 2.0 * ca * ua - ua_prev;
        ua_prev = ua;
        ua = na;
        let nb = 2.0 * cb * ub - ub_prev;
        ub_prev = ub;
        ub = nb;
    }
    Dichotomy { class, partial_sums }
}
