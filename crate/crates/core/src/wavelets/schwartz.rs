use std::collections::HashMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::{Ball, PadicNumber, DEFAULT_PRECISION};
use crate::numeric::CompensatedSum;

/// Haar measure used by [`SchwartzFunction::integrate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Measure {
    /// dx, with mass p^r on a ball of radius p^r.
    Additive,
    /// d×x = dx/|x|_p.
    Multiplicative,
}

/// A ball not containing 0, with the constant value taken there.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Piece {
    pub ball: Ball,
    pub value: Complex64,
}

/// One summand c·|x|_p^power of the profile on the origin ball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialTerm {
    pub coefficient: Complex64,
    pub power: f64,
}

/// The ball {|x| ≤ p^R} carrying a radial profile Σ c_i |x|^{w_i}.
#[derive(Clone, Debug, PartialEq)]
pub struct OriginPart {
    pub radius_exponent: i32,
    pub terms: Vec<RadialTerm>,
}

impl OriginPart {
    fn value_at_norm(&self, p: u64, e: i32) -> Complex64 {
        self.terms
            .iter()
            .map(|t| t.coefficient * (p as f64).powf(e as f64 * t.power))
            .sum()
    }

    fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.power == 0.0)
    }
}

/// A function on ℚ_p that is constant on each of finitely many disjoint
/// balls away from 0, plus an optional radial profile on a ball around 0.
///
/// Plain locally constant functions use a profile with a single term of
/// power 0; the |x|^{1/2}-weighted wavelets use power 1/2.
#[derive(Clone, Debug, PartialEq)]
pub struct SchwartzFunction {
    prime: u64,
    pieces: Vec<Piece>,
    origin: Option<OriginPart>,
}

/// Serialized form of one piece.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PieceRecord {
    pub center: String,
    pub radius_exponent: i32,
    pub re: f64,
    pub im: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm_power: Option<f64>,
}

fn omega(p: u64, ell: u32, digit: u32) -> Complex64 {
    let angle = 2.0 * std::f64::consts::PI * (ell as f64) * (digit as f64) / p as f64;
    Complex64::from_polar(1.0, angle)
}

/// Σ_{d=1}^{p-1} ω_ℓ(d).
fn digit_sum(p: u64, ell: Option<u32>) -> f64 {
    match ell {
        Some(l) if l as u64 % p != 0 => -1.0,
        _ => (p - 1) as f64,
    }
}

/// ∫_{|x| ≤ p^R} |x|^a ω_ℓ(x) dμ over ℚ_p^×, in closed form.
fn origin_integral(p: u64, r: i32, a: Complex64, measure: Measure, ell: Option<u32>) -> Result<Complex64> {
    let beta = match measure {
        Measure::Additive => a + 1.0,
        Measure::Multiplicative => a,
    };
    if beta.re <= 0.0 {
        return Err(Error::Divergent(format!("shell sum near 0 with exponent {beta}")));
    }
    let lp = (p as f64).ln();
    let top = (beta * (r as f64 * lp)).exp();
    let ratio = (-beta * lp).exp();
    Ok(digit_sum(p, ell) / p as f64 * top / (1.0 - ratio))
}

/// Integral of the constant 1·|x|^w ω_ℓ over a ball not containing 0.
fn ball_integral(ball: &Ball, w: Complex64, measure: Measure, ell: Option<u32>) -> Complex64 {
    let p = ball.prime();
    let e = ball.norm_exponent().expect("piece contains 0");
    let lp = (p as f64).ln();
    let mass = match measure {
        Measure::Additive => ball.radius_exponent() as f64,
        Measure::Multiplicative => (ball.radius_exponent() - e) as f64,
    };
    let mut v = (w * (e as f64 * lp) + mass * lp).exp();
    if let Some(l) = ell {
        v *= omega(p, l, ball.leading_digit().unwrap());
    }
    v
}

/// Split every ball until none of `others` lies strictly inside it.
fn refine_into(ball: Ball, others: &[Ball], out: &mut Vec<Ball>) {
    let inside: Vec<Ball> = others
        .iter()
        .filter(|o| o.radius_exponent() < ball.radius_exponent() && ball.contains_ball(o))
        .copied()
        .collect();
    if inside.is_empty() {
        out.push(ball);
        return;
    }
    for c in ball.children() {
        refine_into(c, &inside, out);
    }
}

impl SchwartzFunction {
    pub fn zero(prime: u64) -> Self {
        SchwartzFunction { prime, pieces: Vec::new(), origin: None }
    }

    /// Build from pieces, checking that no ball contains 0 and that balls
    /// are pairwise disjoint and disjoint from the origin ball.
    pub fn new(prime: u64, pieces: Vec<Piece>, origin: Option<OriginPart>) -> Result<Self> {
        for (i, a) in pieces.iter().enumerate() {
            if a.ball.prime() != prime {
                return Err(Error::PrimeMismatch(a.ball.prime(), prime));
            }
            if a.ball.contains_zero() {
                return Err(Error::Unsupported("piece containing 0; use the origin part".into()));
            }
            if let Some(o) = &origin {
                if a.ball.norm_exponent().unwrap() <= o.radius_exponent {
                    return Err(Error::Unsupported("piece overlaps the origin ball".into()));
                }
            }
            for b in &pieces[i + 1..] {
                if a.ball.intersects(&b.ball) {
                    return Err(Error::Unsupported(format!("overlapping balls {:?} and {:?}", a.ball, b.ball)));
                }
            }
        }
        Ok(SchwartzFunction { prime, pieces, origin })
    }

    pub(crate) fn from_parts_unchecked(prime: u64, pieces: Vec<Piece>, origin: Option<OriginPart>) -> Self {
        SchwartzFunction { prime, pieces, origin }
    }

    /// Indicator of {|x| ≤ p^r}.
    pub fn origin_indicator(prime: u64, r: i32) -> Self {
        Self::radial(prime, r, Complex64::new(1.0, 0.0), 0.0)
    }

    /// c·|x|^power on {|x| ≤ p^r}.
    pub fn radial(prime: u64, r: i32, coefficient: Complex64, power: f64) -> Self {
        SchwartzFunction {
            prime,
            pieces: Vec::new(),
            origin: Some(OriginPart { radius_exponent: r, terms: vec![RadialTerm { coefficient, power }] }),
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn origin(&self) -> Option<&OriginPart> {
        self.origin.as_ref()
    }

    /// Smallest R with the support inside {|x| ≤ p^R}; `None` for the empty function.
    pub fn support_exponent(&self) -> Option<i32> {
        let a = self.pieces.iter().map(|p| p.ball.norm_exponent().unwrap()).max();
        let b = self.origin.as_ref().map(|o| o.radius_exponent);
        a.max(b).or(a).or(b)
    }

    pub fn evaluate(&self, x: &PadicNumber) -> Result<Complex64> {
        if x.prime() != self.prime {
            return Err(Error::PrimeMismatch(x.prime(), self.prime));
        }
        if let Some(o) = &self.origin {
            match x.valuation() {
                None => {
                    return Ok(o.terms.iter().filter(|t| t.power == 0.0).map(|t| t.coefficient).sum());
                }
                Some(v) if -(v as i32) <= o.radius_exponent => {
                    return Ok(o.value_at_norm(self.prime, -(v as i32)));
                }
                _ => {}
            }
        }
        for piece in &self.pieces {
            if piece.ball.contains(x)? {
                return Ok(piece.value);
            }
        }
        Ok(Complex64::new(0.0, 0.0))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        SchwartzFunction {
            prime: self.prime,
            pieces: self.pieces.iter().map(|p| Piece { ball: p.ball, value: p.value * c }).collect(),
            origin: self.origin.as_ref().map(|o| OriginPart {
                radius_exponent: o.radius_exponent,
                terms: o.terms.iter().map(|t| RadialTerm { coefficient: t.coefficient * c, power: t.power }).collect(),
            }),
        }
    }

    pub fn conj(&self) -> Self {
        SchwartzFunction {
            prime: self.prime,
            pieces: self.pieces.iter().map(|p| Piece { ball: p.ball, value: p.value.conj() }).collect(),
            origin: self.origin.as_ref().map(|o| OriginPart {
                radius_exponent: o.radius_exponent,
                terms: o.terms.iter().map(|t| RadialTerm { coefficient: t.coefficient.conj(), power: t.power }).collect(),
            }),
        }
    }

    /// x ↦ f(p^n x).
    pub fn dilate(&self, n: i32) -> Self {
        let p = self.prime as f64;
        SchwartzFunction {
            prime: self.prime,
            pieces: self
                .pieces
                .iter()
                .map(|q| Piece { ball: Ball::new(self.prime, q.ball.radius_exponent() + n, q.ball.key()), value: q.value })
                .collect(),
            origin: self.origin.as_ref().map(|o| OriginPart {
                radius_exponent: o.radius_exponent + n,
                terms: o
                    .terms
                    .iter()
                    .map(|t| RadialTerm { coefficient: t.coefficient * p.powf(-(n as f64) * t.power), power: t.power })
                    .collect(),
            }),
        }
    }

    /// Shrink the origin ball to radius `r`, turning the shells in between
    /// into ordinary pieces.
    fn peel_origin(&mut self, r: i32) {
        let Some(o) = self.origin.as_mut() else { return };
        let p = self.prime;
        while o.radius_exponent > r {
            let k = o.radius_exponent;
            let value = o.value_at_norm(p, k);
            let parent = Ball::origin(p, k);
            for child in parent.children().skip(1) {
                self.pieces.push(Piece { ball: child, value });
            }
            o.radius_exponent -= 1;
        }
    }

    /// Split every piece into its p children and peel one shell off the
    /// origin ball. Values and integrals are unchanged.
    pub fn refine(&self) -> Self {
        let mut pieces = Vec::with_capacity(self.pieces.len() * self.prime as usize);
        for q in &self.pieces {
            for c in q.ball.children() {
                pieces.push(Piece { ball: c, value: q.value });
            }
        }
        let mut out = SchwartzFunction { prime: self.prime, pieces, origin: self.origin.clone() };
        if let Some(o) = &self.origin {
            out.peel_origin(o.radius_exponent - 1);
        }
        out
    }

    /// Pointwise sum on the common refinement.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch(self.prime, other.prime));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let min_norm = |f: &SchwartzFunction| f.pieces.iter().map(|q| q.ball.norm_exponent().unwrap()).min();
        let target = |own: i32, other_r: Option<i32>, other_pieces: Option<i32>| {
            let mut r = own;
            if let Some(x) = other_r {
                r = r.min(x);
            }
            if let Some(e) = other_pieces {
                r = r.min(e - 1);
            }
            r
        };
        let (ra, rb) = (a.origin.as_ref().map(|o| o.radius_exponent), b.origin.as_ref().map(|o| o.radius_exponent));
        if let Some(r) = ra {
            let t = target(r, rb, min_norm(&b));
            a.peel_origin(t);
        }
        if let Some(r) = rb {
            let t = target(r, ra, min_norm(&a));
            b.peel_origin(t);
        }
        let origin = match (a.origin.take(), b.origin.take()) {
            (None, None) => None,
            (Some(o), None) | (None, Some(o)) => Some(o),
            (Some(mut o1), Some(o2)) => {
                let r = o1.radius_exponent.min(o2.radius_exponent);
                debug_assert_eq!(o1.radius_exponent, o2.radius_exponent);
                for t in o2.terms {
                    match o1.terms.iter_mut().find(|u| u.power == t.power) {
                        Some(u) => u.coefficient += t.coefficient,
                        None => o1.terms.push(t),
                    }
                }
                o1.radius_exponent = r;
                Some(o1)
            }
        };
        let balls_a: Vec<Ball> = a.pieces.iter().map(|q| q.ball).collect();
        let balls_b: Vec<Ball> = b.pieces.iter().map(|q| q.ball).collect();
        let mut acc: HashMap<Ball, Complex64> = HashMap::new();
        for (src, against) in [(&a, &balls_b), (&b, &balls_a)] {
            for q in &src.pieces {
                let mut cells = Vec::new();
                refine_into(q.ball, against, &mut cells);
                for c in cells {
                    *acc.entry(c).or_insert(Complex64::new(0.0, 0.0)) += q.value;
                }
            }
        }
        let mut pieces: Vec<Piece> = acc.into_iter().map(|(ball, value)| Piece { ball, value }).collect();
        pieces.sort_by(|x, y| x.ball.cmp(&y.ball));
        Ok(SchwartzFunction { prime: self.prime, pieces, origin })
    }

    /// Σ c_i f_i.
    pub fn linear_combination(prime: u64, terms: &[(Complex64, &SchwartzFunction)]) -> Result<Self> {
        let mut acc = SchwartzFunction::zero(prime);
        for (c, f) in terms {
            acc = acc.add(&f.scale(*c))?;
        }
        Ok(acc)
    }

    /// ∫ f(x) |x|^w ω_ℓ(x) dμ(x), exact up to floating point.
    pub fn integrate_weighted(&self, measure: Measure, w: Complex64, ell: Option<u32>) -> Result<Complex64> {
        let mut total = CompensatedSum::default();
        for q in &self.pieces {
            total.add(q.value * ball_integral(&q.ball, w, measure, ell));
        }
        if let Some(o) = &self.origin {
            for t in &o.terms {
                if t.coefficient != Complex64::new(0.0, 0.0) {
                    total.add(t.coefficient * origin_integral(self.prime, o.radius_exponent, w + t.power, measure, ell)?);
                }
            }
        }
        Ok(total.value())
    }

    /// ∫ f(x) |x|^w dμ(x).
    pub fn integrate(&self, measure: Measure, weight_exponent: f64) -> Result<Complex64> {
        self.integrate_weighted(measure, Complex64::new(weight_exponent, 0.0), None)
    }

    /// ∫ conj(f) g |x|^w ω_ℓ dμ, summed over nested piece pairs without
    /// building the product.
    pub fn integrate_product(f: &Self, g: &Self, measure: Measure, w: Complex64, ell: Option<u32>) -> Result<Complex64> {
        if f.prime != g.prime {
            return Err(Error::PrimeMismatch(f.prime, g.prime));
        }
        let p = f.prime;
        let mut total = CompensatedSum::default();
        for a in &f.pieces {
            for b in &g.pieces {
                let cell = if a.ball.contains_ball(&b.ball) {
                    b.ball
                } else if b.ball.contains_ball(&a.ball) {
                    a.ball
                } else {
                    continue;
                };
                total.add(a.value.conj() * b.value * ball_integral(&cell, w, measure, ell));
            }
        }
        if let Some(o) = &f.origin {
            for b in &g.pieces {
                let e = b.ball.norm_exponent().unwrap();
                if e <= o.radius_exponent {
                    total.add(o.value_at_norm(p, e).conj() * b.value * ball_integral(&b.ball, w, measure, ell));
                }
            }
        }
        if let Some(o) = &g.origin {
            for a in &f.pieces {
                let e = a.ball.norm_exponent().unwrap();
                if e <= o.radius_exponent {
                    total.add(a.value.conj() * o.value_at_norm(p, e) * ball_integral(&a.ball, w, measure, ell));
                }
            }
        }
        if let (Some(of), Some(og)) = (&f.origin, &g.origin) {
            let r = of.radius_exponent.min(og.radius_exponent);
            for s in &of.terms {
                for t in &og.terms {
                    let c = s.coefficient.conj() * t.coefficient;
                    if c != Complex64::new(0.0, 0.0) {
                        total.add(c * origin_integral(p, r, w + s.power + t.power, measure, ell)?);
                    }
                }
            }
        }
        Ok(total.value())
    }

    /// ⟨f, g⟩ = ∫ conj(f) g dμ.
    pub fn inner_product(f: &Self, g: &Self, measure: Measure) -> Result<Complex64> {
        Self::integrate_product(f, g, measure, Complex64::new(0.0, 0.0), None)
    }

    /// All pieces with the origin profile folded in as a constant piece,
    /// or `None` if the profile is not constant.
    pub(crate) fn flat_pieces(&self) -> Option<Vec<(Ball, Complex64)>> {
        let mut out: Vec<(Ball, Complex64)> = self.pieces.iter().map(|q| (q.ball, q.value)).collect();
        if let Some(o) = &self.origin {
            if !o.is_constant() {
                return None;
            }
            out.push((Ball::origin(self.prime, o.radius_exponent), o.terms.iter().map(|t| t.coefficient).sum()));
        }
        Some(out)
    }

    pub fn to_records(&self) -> Result<Vec<PieceRecord>> {
        let mut out = Vec::new();
        for q in &self.pieces {
            out.push(PieceRecord {
                center: q.ball.center_padic(DEFAULT_PRECISION)?.format(),
                radius_exponent: q.ball.radius_exponent(),
                re: q.value.re,
                im: q.value.im,
                norm_power: None,
            });
        }
        if let Some(o) = &self.origin {
            for t in &o.terms {
                out.push(PieceRecord {
                    center: "0".into(),
                    radius_exponent: o.radius_exponent,
                    re: t.coefficient.re,
                    im: t.coefficient.im,
                    norm_power: (t.power != 0.0).then_some(t.power),
                });
            }
        }
        Ok(out)
    }

    pub fn from_records(prime: u64, records: &[PieceRecord]) -> Result<Self> {
        let mut pieces = Vec::new();
        let mut origin: Option<OriginPart> = None;
        for r in records {
            let center = PadicNumber::parse(&r.center, prime, DEFAULT_PRECISION)?;
            let value = Complex64::new(r.re, r.im);
            let ball = Ball::around(&center, r.radius_exponent)?;
            if ball.contains_zero() {
                let term = RadialTerm { coefficient: value, power: r.norm_power.unwrap_or(0.0) };
                match origin.as_mut() {
                    Some(o) if o.radius_exponent == r.radius_exponent => o.terms.push(term),
                    Some(_) => return Err(Error::Unsupported("origin terms with different radii".into())),
                    None => origin = Some(OriginPart { radius_exponent: r.radius_exponent, terms: vec![term] }),
                }
            } else {
                pieces.push(Piece { ball, value });
            }
        }
        Self::new(prime, pieces, origin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PrincipalPart;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn haar_measure_of_unit_ball() {
        let f = SchwartzFunction::origin_indicator(2, 0);
        assert!((f.integrate(Measure::Additive, 0.0).unwrap() - c(1.0)).norm() < 1e-15);
        let z = f.integrate(Measure::Additive, 1.0).unwrap() * (2.0 / 1.0);
        assert!((z - c(4.0 / 3.0)).norm() < 1e-14);
        assert!(matches!(f.integrate(Measure::Multiplicative, 0.0), Err(Error::Divergent(_))));
    }

    #[test]
    fn add_refines_consistently() {
        let p = 3;
        let a = SchwartzFunction::origin_indicator(p, 1);
        let piece = Piece { ball: Ball::new(p, -1, PrincipalPart::from_parts(1, 1, p)), value: c(2.0) };
        let b = SchwartzFunction::new(p, vec![piece], None).unwrap();
        let s = a.add(&b).unwrap();
        let x = PadicNumber::from_i64(1, p, 16).unwrap();
        assert!((s.evaluate(&x).unwrap() - c(3.0)).norm() < 1e-15);
        let y = PadicNumber::from_i64(2, p, 16).unwrap();
        assert!((s.evaluate(&y).unwrap() - c(1.0)).norm() < 1e-15);
        let total = s.integrate(Measure::Additive, 0.0).unwrap();
        assert!((total - c(3.0 + 2.0 / 3.0)).norm() < 1e-13);
    }

    #[test]
    fn records_round_trip() {
        let p = 5;
        let piece = Piece { ball: Ball::new(p, 0, PrincipalPart::from_parts(3, 1, p)), value: Complex64::new(0.5, -1.0) };
        let mut f = SchwartzFunction::new(p, vec![piece], None).unwrap();
        f = f.add(&SchwartzFunction::radial(p, -1, c(2.0), 0.5)).unwrap();
        let recs = f.to_records().unwrap();
        let g = SchwartzFunction::from_records(p, &recs).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn overlapping_pieces_rejected() {
        let p = 2;
        let b1 = Ball::new(p, 0, PrincipalPart::from_parts(1, 1, p));
        let b2 = b1.children().next().unwrap();
        let r = SchwartzFunction::new(p, vec![Piece { ball: b1, value: c(1.0) }, Piece { ball: b2, value: c(1.0) }], None);
        assert!(r.is_err());
    }
}
