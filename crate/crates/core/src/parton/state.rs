use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::factorize;
use crate::coeffs::CoefficientStream;
use crate::error::{Error, Result};
use crate::wavelets::{kozyrev_wavelet, modified_wavelet, SchwartzFunction, WaveletIndex};

/// c_0..c_M with c_m = a(p^m), or p^{-(k-1)m/2} a(p^m) when rescaled.
/// Entry m is the coefficient of the wavelet at scale n = 1 - m.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartonState {
    pub prime: u64,
    pub truncation: usize,
    pub coeffs: Vec<Complex64>,
    pub rescaled: bool,
    pub weight: u32,
    pub nebentypus_at_p: Complex64,
}

/// Integer version of an un-rescaled state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPartonState {
    pub prime: u64,
    pub coeffs: Vec<BigInt>,
}

pub fn decompose(stream: &CoefficientStream, p: u64, truncation: usize, rescaled: bool) -> Result<PartonState> {
    let k = stream.weight();
    let scale = (p as f64).powf(-(k as f64 - 1.0) / 2.0);
    let mut coeffs = Vec::with_capacity(truncation + 1);
    for m in 0..=truncation {
        let a = stream.prime_power(p, m as u32)?;
        coeffs.push(if rescaled { a * scale.powi(m as i32) } else { a });
    }
    Ok(PartonState { prime: p, truncation, coeffs, rescaled, weight: k, nebentypus_at_p: stream.chi(p) })
}

pub fn decompose_exact(stream: &CoefficientStream, p: u64, truncation: usize) -> Result<ExactPartonState> {
    let coeffs = (0..=truncation)
        .map(|m| stream.prime_power_exact(p, m as u32))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactPartonState { prime: p, coeffs })
}

fn exponents(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    Ok(factorize(n))
}

/// Π_p c_{n_p} over the prime factorization of n.
pub fn reconstruct(states: &BTreeMap<u64, PartonState>, n: u64) -> Result<Complex64> {
    let mut v = Complex64::new(1.0, 0.0);
    for (p, e) in exponents(n)? {
        let s = states.get(&p).ok_or(Error::MissingSeed(p))?;
        let c = s
            .coeffs
            .get(e as usize)
            .ok_or(Error::TruncationExceeded { prime: p, exponent: e, truncation: s.truncation })?;
        v *= c;
    }
    Ok(v)
}

pub fn reconstruct_exact(states: &BTreeMap<u64, ExactPartonState>, n: u64) -> Result<BigInt> {
    let mut v = BigInt::one();
    for (p, e) in exponents(n)? {
        let s = states.get(&p).ok_or(Error::MissingSeed(p))?;
        let c = s.coeffs.get(e as usize).ok_or(Error::TruncationExceeded {
            prime: p,
            exponent: e,
            truncation: s.coeffs.len() - 1,
        })?;
        v *= c;
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// a₋: ψ_n → ψ_{n-1}, moving mass to higher index m.
    Raise,
    /// a₊: ψ_n → ψ_{n+1}, annihilating the ground state.
    Lower,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LadderOutput {
    pub state: PartonState,
    /// Coefficient pushed past index M by a raise.
    pub lost_tail: Complex64,
    /// Index whose new value is not determined by the window.
    pub boundary_index: Option<usize>,
}

pub fn ladder(state: &PartonState, direction: Direction) -> LadderOutput {
    let m = state.truncation;
    let zero = Complex64::new(0.0, 0.0);
    let mut out = state.clone();
    match direction {
        Direction::Raise => {
            out.coeffs = std::iter::once(zero).chain(state.coeffs[..m].iter().copied()).collect();
            LadderOutput { state: out, lost_tail: state.coeffs[m], boundary_index: None }
        }
        Direction::Lower => {
            out.coeffs = state.coeffs[1..].iter().copied().chain(std::iter::once(zero)).collect();
            LadderOutput { state: out, lost_tail: zero, boundary_index: Some(m) }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeVariant {
    /// a₊ + χ(p)p^{k-1}a₋ on un-rescaled states.
    I,
    /// a₊ + χ(p)a₋ on rescaled states.
    II,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeckeOutput {
    pub state: PartonState,
    pub eigenvalue: Complex64,
    /// max_{m<M} |(Tc)_m - λc_m| / max(1, max_m |c_m|).
    pub residual: f64,
}

pub fn hecke_apply(state: &PartonState, variant: HeckeVariant) -> Result<HeckeOutput> {
    let p = state.prime as f64;
    let k = state.weight as f64;
    let factor = match (variant, state.rescaled) {
        (HeckeVariant::I, false) => p.powf(k - 1.0),
        (HeckeVariant::II, true) => 1.0,
        _ => return Err(Error::StateMismatch(format!("variant {variant:?} on rescaled = {}", state.rescaled))),
    };
    let c = &state.coeffs;
    let m = state.truncation;
    let chi = state.nebentypus_at_p * factor;
    let zero = Complex64::new(0.0, 0.0);
    let mut t = vec![zero; m + 1];
    for i in 0..=m {
        let up = if i < m { c[i + 1] } else { zero };
        let down = if i > 0 { c[i - 1] } else { zero };
        t[i] = up + chi * down;
    }
    // c_1/c_0 is a(p), or p^{-(k-1)/2}a(p) on a rescaled state.
    let eigenvalue = if m >= 1 && c[0] != zero { c[1] / c[0] } else { zero };
    let norm = c.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let residual = (0..m).map(|i| (t[i] - eigenvalue * c[i]).norm()).fold(0.0, f64::max) / norm;
    let mut out = state.clone();
    out.coeffs = t;
    Ok(HeckeOutput { state: out, eigenvalue, residual })
}

impl PartonState {
    pub fn zero(prime: u64, truncation: usize, weight: u32, rescaled: bool) -> Self {
        PartonState {
            prime,
            truncation,
            coeffs: vec![Complex64::new(0.0, 0.0); truncation + 1],
            rescaled,
            weight,
            nebentypus_at_p: Complex64::new(1.0, 0.0),
        }
    }

    /// The ground state |0⟩ = (1, 0, 0, …).
    pub fn ground(prime: u64, truncation: usize, weight: u32, rescaled: bool) -> Self {
        let mut s = Self::zero(prime, truncation, weight, rescaled);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn combine(&self, a: Complex64, other: &PartonState, b: Complex64) -> Result<PartonState> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (x, y) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *x = a * *x + b * y;
        }
        Ok(out)
    }

    pub(crate) fn compatible(&self, other: &PartonState) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch(self.prime, other.prime));
        }
        if self.truncation != other.truncation || self.rescaled != other.rescaled {
            return Err(Error::StateMismatch("truncation or rescaling differs".into()));
        }
        Ok(())
    }

    /// Σ_m c_m ψ_{1-m,0,1}, or with the |x|^{1/2}-weighted wavelets when rescaled.
    pub fn to_schwartz(&self) -> Result<SchwartzFunction> {
        let p = self.prime;
        let mut acc = SchwartzFunction::zero(p);
        for (m, c) in self.coeffs.iter().enumerate() {
            if *c == Complex64::new(0.0, 0.0) {
                continue;
            }
            let idx = WaveletIndex::mother(1 - m as i32);
            let w = if self.rescaled { modified_wavelet(p, &idx)? } else { kozyrev_wavelet(p, &idx)? };
            acc = acc.add(&w.scale(*c))?;
        }
        Ok(acc)
    }
}
