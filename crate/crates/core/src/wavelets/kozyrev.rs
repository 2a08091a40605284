use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::{Ball, PrincipalPart};
use crate::wavelets::schwartz::{Measure, OriginPart, Piece, RadialTerm, SchwartzFunction};

/// Labels (n, m, j) of the wavelet p^{-n/2} e^{2πi j p^{n-1} x} Ω(|p^n x - m|_p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WaveletIndex {
    pub n: i32,
    pub m: PrincipalPart,
    pub j: u32,
}

impl WaveletIndex {
    pub fn new(n: i32, m: PrincipalPart, j: u32) -> Self {
        WaveletIndex { n, m, j }
    }

    /// ψ_{n,0,1}, the family used for local states.
    pub fn mother(n: i32) -> Self {
        WaveletIndex { n, m: PrincipalPart::ZERO, j: 1 }
    }

    /// Support ball {|x - p^{-n} m| ≤ p^n}.
    pub fn support(&self, p: u64) -> Ball {
        Ball::new(p, self.n, self.m)
    }
}

fn validate(p: u64, idx: &WaveletIndex) -> Result<()> {
    if idx.j == 0 || idx.j as u64 >= p {
        return Err(Error::PhaseOutOfRange { j: idx.j, max: p - 1 });
    }
    Ok(())
}

/// One level of refinement below the support ball; `weighted` multiplies by |x|^{1/2}.
fn build(p: u64, idx: &WaveletIndex, weighted: bool) -> Result<SchwartzFunction> {
    validate(p, idx)?;
    let amp = (p as f64).powf(-(idx.n as f64) / 2.0);
    let support = idx.support(p);
    let mut pieces = Vec::with_capacity(p as usize);
    let mut origin = None;
    for child in support.children() {
        let phase = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * idx.j as f64 * child.key().to_f64(p));
        let value = phase * amp;
        match child.norm_exponent() {
            None => {
                let power = if weighted { 0.5 } else { 0.0 };
                origin = Some(OriginPart {
                    radius_exponent: child.radius_exponent(),
                    terms: vec![RadialTerm { coefficient: value, power }],
                });
            }
            Some(e) => {
                let w = if weighted { (p as f64).powf(e as f64 / 2.0) } else { 1.0 };
                pieces.push(Piece { ball: child, value: value * w });
            }
        }
    }
    Ok(SchwartzFunction::from_parts_unchecked(p, pieces, origin))
}

/// Kozyrev wavelet ψ^{(p)}_{n,m,j}, refined one level below its support ball.
pub fn kozyrev_wavelet(p: u64, index: &WaveletIndex) -> Result<SchwartzFunction> {
    build(p, index, false)
}

/// |x|_p^{1/2} ψ^{(p)}_{n,m,j}, orthonormal for d×x.
pub fn modified_wavelet(p: u64, index: &WaveletIndex) -> Result<SchwartzFunction> {
    build(p, index, true)
}

/// All translations m ∈ p^{-depth}ℤ/ℤ and phases j at scale n.
pub fn wavelet_window(p: u64, scales: std::ops::RangeInclusive<i32>, depth: u32) -> Vec<WaveletIndex> {
    let count = crate::arith::pow_u128(p, depth);
    let mut out = Vec::new();
    for n in scales {
        for k in 0..count {
            let m = PrincipalPart::from_parts(k, depth, p);
            for j in 1..p as u32 {
                out.push(WaveletIndex { n, m, j });
            }
        }
    }
    out
}

/// max |⟨ψ_a, ψ_b⟩ - δ_ab| over all pairs of the window; Kozyrev wavelets
/// with dx, or modified wavelets with d×x.
pub fn gram_deviation(p: u64, window: &[WaveletIndex], modified: bool) -> Result<f64> {
    use rayon::prelude::*;
    let measure = if modified { Measure::Multiplicative } else { Measure::Additive };
    let funcs: Vec<SchwartzFunction> = window
        .iter()
        .map(|idx| build(p, idx, modified))
        .collect::<Result<_>>()?;
    (0..funcs.len())
        .into_par_iter()
        .map(|a| -> Result<f64> {
            let mut worst: f64 = 0.0;
            for b in a..funcs.len() {
                let g = SchwartzFunction::inner_product(&funcs[a], &funcs[b], measure)?;
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((g - target).norm());
            }
            Ok(worst)
        })
        .try_reduce(|| 0.0, |x, y| Ok(x.max(y)))
}
