use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::padic::ball::PrincipalPart;

/// Default number of stored digits.
pub const DEFAULT_PRECISION: usize = 32;

/// An element of ℚ_p stored as `p^valuation · u` with a unit `u` known
/// modulo `p^precision`.
///
/// Zero is a separate tag: it has no valuation and no digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicNumber {
    prime: u64,
    valuation: Option<i64>,
    digits: Vec<u32>,
    precision: usize,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn pow_big(p: u64, e: usize) -> BigUint {
    num_traits::pow(BigUint::from(p), e)
}

/// Strip powers of p, returning (v, n / p^v). `n` must be nonzero.
fn split_valuation(n: &BigInt, p: u64) -> (i64, BigInt) {
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return (v, n);
        }
        n = q;
        v += 1;
    }
}

fn digits_of(mut m: BigUint, p: u64, count: usize) -> Vec<u32> {
    let pb = BigUint::from(p);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (q, r) = m.div_rem(&pb);
        out.push(r.to_u32().unwrap());
        m = q;
    }
    out
}

impl PadicNumber {
    pub fn zero(prime: u64, precision: usize) -> Result<Self> {
        check_prime(prime)?;
        if precision == 0 {
            return Err(Error::InvalidPrecision);
        }
        Ok(PadicNumber { prime, valuation: None, digits: Vec::new(), precision })
    }

    /// Build from a unit mantissa `u` (not divisible by p) known mod p^precision.
    fn from_unit(prime: u64, valuation: i64, unit: &BigUint, precision: usize) -> Self {
        let m = unit % pow_big(prime, precision);
        PadicNumber { prime, valuation: Some(valuation), digits: digits_of(m, prime, precision), precision }
    }

    pub fn from_rational(value: &BigRational, prime: u64, precision: usize) -> Result<Self> {
        check_prime(prime)?;
        if precision == 0 {
            return Err(Error::InvalidPrecision);
        }
        if value.is_zero() {
            return Self::zero(prime, precision);
        }
        let (vn, un) = split_valuation(value.numer(), prime);
        let (vd, ud) = split_valuation(value.denom(), prime);
        let modulus = BigInt::from(pow_big(prime, precision));
        let inv = mod_inverse(&ud.mod_floor(&modulus), &modulus, prime, precision);
        let unit = (un * inv).mod_floor(&modulus);
        Ok(Self::from_unit(prime, vn - vd, &unit.to_biguint().unwrap(), precision))
    }

    pub fn from_i64(value: i64, prime: u64, precision: usize) -> Result<Self> {
        Self::from_rational(&BigRational::from_integer(value.into()), prime, precision)
    }

    pub fn from_fraction(num: i64, den: i64, prime: u64, precision: usize) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator(format!("{num}/{den}")));
        }
        Self::from_rational(&BigRational::new(num.into(), den.into()), prime, precision)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_none()
    }

    /// `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.valuation
    }

    /// Digits from the lowest power upward, starting at `p^valuation`.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    fn unit(&self) -> BigUint {
        self.digits
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &d| acc * self.prime + d)
    }

    /// Exact rational value of the stored digits.
    pub fn to_rational(&self) -> BigRational {
        match self.valuation {
            None => BigRational::zero(),
            Some(v) => {
                let u = BigRational::from_integer(BigInt::from(self.unit()));
                let scale = BigRational::from_integer(BigInt::from(pow_big(self.prime, v.unsigned_abs() as usize)));
                if v >= 0 { u * scale } else { u / scale }
            }
        }
    }

    /// |x|_p = p^{-v} as an exact rational.
    pub fn norm(&self) -> BigRational {
        match self.valuation {
            None => BigRational::zero(),
            Some(v) => {
                let pv = BigRational::from_integer(BigInt::from(pow_big(self.prime, v.unsigned_abs() as usize)));
                if v >= 0 { pv.recip() } else { pv }
            }
        }
    }

    pub fn norm_f64(&self) -> f64 {
        match self.valuation {
            None => 0.0,
            Some(v) => (self.prime as f64).powi(-(v as i32)),
        }
    }

    /// Leading digit of the unit part, `None` for zero.
    pub fn leading_digit(&self) -> Option<u32> {
        self.valuation.map(|_| self.digits[0])
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.prime == other.prime {
            Ok(())
        } else {
            Err(Error::PrimeMismatch(self.prime, other.prime))
        }
    }

    pub fn neg(&self) -> Self {
        match self.valuation {
            None => self.clone(),
            Some(v) => {
                let modulus = pow_big(self.prime, self.precision);
                let u = &modulus - self.unit();
                Self::from_unit(self.prime, v, &u, self.precision)
            }
        }
    }

    /// Sum at tracked precision. Fails if every known digit cancels.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let (vx, vy) = match (self.valuation, other.valuation) {
            (None, _) => return Ok(other.with_precision_cap(self.precision)),
            (_, None) => return Ok(self.with_precision_cap(other.precision)),
            (Some(a), Some(b)) => (a, b),
        };
        let p = self.prime;
        let v0 = vx.min(vy);
        let abs_x = vx + self.precision as i64;
        let abs_y = vy + other.precision as i64;
        let abs = abs_x.min(abs_y);
        let width = (abs - v0) as usize;
        let modulus = pow_big(p, width);
        let sx = self.unit() * pow_big(p, (vx - v0) as usize);
        let sy = other.unit() * pow_big(p, (vy - v0) as usize);
        let s = (sx + sy) % &modulus;
        if s.is_zero() {
            return Err(Error::Cancellation);
        }
        let (shift, unit) = split_valuation(&BigInt::from(s), p);
        let v = v0 + shift;
        let prec = ((abs - v) as usize).min(self.precision.min(other.precision));
        Ok(Self::from_unit(p, v, &unit.to_biguint().unwrap(), prec))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let prec = self.precision.min(other.precision);
        match (self.valuation, other.valuation) {
            (Some(a), Some(b)) => Ok(Self::from_unit(self.prime, a + b, &(self.unit() * other.unit()), prec)),
            _ => Self::zero(self.prime, prec),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let v = self.valuation.ok_or(Error::InverseOfZero)?;
        let modulus = BigInt::from(pow_big(self.prime, self.precision));
        let u = mod_inverse(&BigInt::from(self.unit()), &modulus, self.prime, self.precision);
        Ok(Self::from_unit(self.prime, -v, &u.to_biguint().unwrap(), self.precision))
    }

    fn with_precision_cap(&self, cap: usize) -> Self {
        match self.valuation {
            None => PadicNumber { precision: self.precision.min(cap), ..self.clone() },
            Some(v) => {
                let prec = self.precision.min(cap);
                Self::from_unit(self.prime, v, &self.unit(), prec)
            }
        }
    }

    /// frac(p^k x) as an element of ℚ_p/ℤ_p.
    pub fn principal_part_scaled(&self, k: i32) -> Result<PrincipalPart> {
        let v = match self.valuation {
            None => return Ok(PrincipalPart::ZERO),
            Some(v) => v + k as i64,
        };
        if v >= 0 {
            return Ok(PrincipalPart::ZERO);
        }
        let needed = (-v) as usize;
        if needed > self.precision {
            return Err(Error::InsufficientPrecision { precision: self.precision, needed: -1 - k as i64 });
        }
        let p = self.prime as u128;
        let num = self.digits[..needed]
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc.checked_mul(p).and_then(|a| a.checked_add(d as u128)).expect("principal part overflows u128"));
        Ok(PrincipalPart::from_parts(num, needed as u32, self.prime))
    }

    /// Σ of the digits at negative powers, as a rational in [0, 1).
    pub fn fractional_part(&self) -> Result<BigRational> {
        let t = self.principal_part_scaled(0)?;
        Ok(t.to_rational(self.prime))
    }

    /// e^{2πi frac(x)}.
    pub fn additive_character(&self) -> Result<num_complex::Complex64> {
        let f = self.fractional_part()?;
        let angle = 2.0 * std::f64::consts::PI * f.to_f64().unwrap_or(0.0);
        Ok(num_complex::Complex64::from_polar(1.0, angle))
    }

    /// Indicator of |x - center|_p ≤ 1.
    pub fn indicator_omega(&self, center: &PadicNumber) -> Result<u8> {
        self.same_prime(center)?;
        let a = self.principal_part_scaled(0)?;
        let b = center.principal_part_scaled(0)?;
        Ok((a == b) as u8)
    }

    /// Parse digit notation (`"1 0 2 . 1"`, high power first) or a rational
    /// literal (`"12"`, `"-3/4"`). A trailing `(base p)` is accepted.
    pub fn parse(text: &str, prime: u64, precision: usize) -> Result<Self> {
        check_prime(prime)?;
        if precision == 0 {
            return Err(Error::InvalidPrecision);
        }
        let bad = || Error::Parse(text.to_string());
        let mut body = text.trim();
        if let Some(idx) = body.find("(base") {
            let tail = body[idx + 5..].trim().trim_end_matches(')').trim();
            let base: u64 = tail.parse().map_err(|_| bad())?;
            if base != prime {
                return Err(Error::PrimeMismatch(base, prime));
            }
            body = body[..idx].trim();
        }
        if body.is_empty() {
            return Err(bad());
        }
        let spaced = body.replace('.', " . ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        let value = if tokens.len() == 1 {
            parse_rational(tokens[0]).ok_or_else(bad)??
        } else {
            let mut int_part = BigInt::zero();
            let mut frac_len = 0usize;
            let mut seen_point = false;
            for tok in tokens {
                if tok == "." {
                    if seen_point {
                        return Err(bad());
                    }
                    seen_point = true;
                    continue;
                }
                let d: u64 = tok.parse().map_err(|_| bad())?;
                if d >= prime {
                    return Err(bad());
                }
                int_part = int_part * prime + d;
                if seen_point {
                    frac_len += 1;
                }
            }
            BigRational::new(int_part, BigInt::from(pow_big(prime, frac_len)))
        };
        Self::from_rational(&value, prime, precision)
    }

    /// Canonical digit text: high power first, `.` only when negative
    /// powers are present, `"0"` for zero.
    pub fn format(&self) -> String {
        let v = match self.valuation {
            None => return "0".to_string(),
            Some(v) => v,
        };
        let mut top = v;
        for (i, &d) in self.digits.iter().enumerate() {
            if d != 0 {
                top = v + i as i64;
            }
        }
        let hi = top.max(0);
        let lo = v.min(0);
        let mut parts = Vec::new();
        let mut k = hi;
        while k >= lo {
            if k == -1 {
                parts.push(".".to_string());
            }
            let idx = k - v;
            let d = if idx >= 0 && (idx as usize) < self.digits.len() { self.digits[idx as usize] } else { 0 };
            parts.push(d.to_string());
            k -= 1;
        }
        parts.join(" ")
    }
}

fn parse_rational(tok: &str) -> Option<Result<BigRational>> {
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return Some(Err(Error::ZeroDenominator(tok.to_string())));
    }
    Some(Ok(BigRational::new(n, d)))
}

/// Inverse of a unit modulo p^precision via Euler's theorem.
fn mod_inverse(u: &BigInt, modulus: &BigInt, p: u64, precision: usize) -> BigInt {
    let phi = BigInt::from(pow_big(p, precision - 1)) * BigInt::from(p - 1);
    let e = phi - BigInt::one();
    let base = u.mod_floor(modulus);
    debug_assert!(base.sign() != Sign::Minus);
    let r = base.modpow(&e, modulus);
    if r.is_negative() { r + modulus } else { r }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (base {})", self.format(), self.prime)
    }
}
