//! Dirichlet characters modulo N.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::arith::{divisors, factorize, gcd, mod_pow, totient};
use crate::error::{Error, Result};

/// Generators of (ℤ/Nℤ)^* with their orders, and the discrete-log table.
#[derive(Debug)]
struct UnitGroup {
    modulus: u64,
    generators: Vec<(u64, u32)>,
    exponent: u32,
    /// logs[a] = exponent vector of a, for a coprime to N.
    logs: Vec<Option<Vec<u32>>>,
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a as u64, b as u64) as u32 * b
}

fn primitive_root(q: u64) -> u64 {
    let phi = totient(q);
    let primes: Vec<u64> = factorize(phi).into_iter().map(|x| x.0).collect();
    (2..q)
        .find(|&g| gcd(g, q) == 1 && primes.iter().all(|&r| mod_pow(g, phi / r, q) != 1))
        .unwrap_or(1)
}

/// x ≡ a (mod q), x ≡ 1 (mod n/q).
fn crt_lift(a: u64, q: u64, n: u64) -> u64 {
    (0..n / q).map(|k| a + k * q).find(|x| x % (n / q) == 1 % (n / q)).unwrap() % n
}

impl UnitGroup {
    fn new(n: u64) -> Self {
        let mut generators = Vec::new();
        for (l, e) in factorize(n) {
            let q = l.pow(e);
            if l == 2 {
                if e >= 2 {
                    generators.push((crt_lift(q - 1, q, n), 2));
                }
                if e >= 3 {
                    generators.push((crt_lift(5, q, n), 1 << (e - 2)));
                }
            } else {
                generators.push((crt_lift(primitive_root(q), q, n), totient(q) as u32));
            }
        }
        let exponent = generators.iter().fold(1, |acc, g| lcm(acc, g.1));
        let mut logs = vec![None; n as usize];
        let mut counter = vec![0u32; generators.len()];
        loop {
            let mut x = 1 % n;
            for (g, k) in generators.iter().zip(&counter) {
                x = x * mod_pow(g.0, *k as u64, n) % n;
            }
            logs[x as usize] = Some(counter.clone());
            let mut i = 0;
            loop {
                if i == generators.len() {
                    return UnitGroup { modulus: n, generators, exponent, logs };
                }
                counter[i] += 1;
                if counter[i] < generators[i].1 {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
        }
    }
}

/// A character mod N, stored as exponents against fixed generators.
#[derive(Clone, Debug)]
pub struct DirichletCharacter {
    group: Arc<UnitGroup>,
    exponents: Vec<u32>,
    label: usize,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.group.modulus == other.group.modulus && self.exponents == other.exponents
    }
}

/// All φ(N) characters mod N, in lexicographic order of exponent vectors.
/// Label 0 is the principal character.
pub fn characters_mod(n: u64) -> Vec<DirichletCharacter> {
    assert!(n >= 1, "modulus must be positive");
    let group = Arc::new(UnitGroup::new(n));
    let orders: Vec<u32> = group.generators.iter().map(|g| g.1).collect();
    let mut out = Vec::new();
    let mut vec = vec![0u32; orders.len()];
    loop {
        out.push(DirichletCharacter { group: group.clone(), exponents: vec.clone(), label: out.len() });
        let mut i = orders.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            vec[i] += 1;
            if vec[i] < orders[i] {
                break;
            }
            vec[i] = 0;
        }
    }
}

/// The character with the given label mod N.
pub fn character(n: u64, index: usize) -> Result<DirichletCharacter> {
    if n == 0 {
        return Err(Error::Domain("modulus 0".into()));
    }
    let all = characters_mod(n);
    let count = all.len();
    all.into_iter()
        .nth(index)
        .ok_or_else(|| Error::Domain(format!("character index {index} out of range for modulus {n} ({count} characters)")))
}

/// Parse a descriptor "N:index".
pub fn parse_descriptor(text: &str) -> Result<DirichletCharacter> {
    let (n, i) = text
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::Config(format!("character descriptor `{text}` is not N:index")))?;
    let n: u64 = n.trim().parse().map_err(|_| Error::Config(format!("bad modulus in `{text}`")))?;
    let i: usize = i.trim().parse().map_err(|_| Error::Config(format!("bad index in `{text}`")))?;
    character(n, i)
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn descriptor(&self) -> String {
        format!("{}:{}", self.modulus(), self.label)
    }

    /// Common order L of the values; ν(a) = e^{2πi k/L} with k from [`Self::value_exponent`].
    pub fn order(&self) -> u32 {
        self.group.exponent
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// k with ν(a) = e^{2πi k / L}, or `None` if gcd(a, N) > 1.
    pub fn value_exponent(&self, a: i64) -> Option<u32> {
        let n = self.group.modulus;
        let r = a.rem_euclid(n as i64) as usize;
        let logs = self.group.logs[r].as_ref()?;
        let l = self.group.exponent as u64;
        let mut k = 0u64;
        for ((g, e), x) in self.group.generators.iter().zip(&self.exponents).zip(logs) {
            k += *e as u64 * *x as u64 * (l / g.1 as u64);
        }
        Some((k % l) as u32)
    }

    pub fn value(&self, a: i64) -> Complex64 {
        match self.value_exponent(a) {
            None => Complex64::new(0.0, 0.0),
            Some(k) => Complex64::from_polar(1.0, 2.0 * PI * k as f64 / self.group.exponent as f64),
        }
    }

    /// arg ν(p) in [0, 2π), `None` where ν vanishes.
    pub fn arg(&self, a: i64) -> Option<f64> {
        self.value_exponent(a).map(|k| 2.0 * PI * k as f64 / self.group.exponent as f64)
    }

    /// The complex conjugate character ν*.
    pub fn conjugate(&self) -> DirichletCharacter {
        let exponents: Vec<u32> = self
            .exponents
            .iter()
            .zip(&self.group.generators)
            .map(|(e, g)| (g.1 - e) % g.1)
            .collect();
        let orders: Vec<u32> = self.group.generators.iter().map(|g| g.1).collect();
        let mut label = 0usize;
        for (e, o) in exponents.iter().zip(&orders) {
            label = label * *o as usize + *e as usize;
        }
        DirichletCharacter { group: self.group.clone(), exponents, label }
    }

    /// ε = 0 if ν(-1) = 1, 1 if ν(-1) = -1.
    pub fn parity_epsilon(&self) -> u32 {
        match self.value_exponent(-1) {
            Some(0) | None => 0,
            Some(_) => 1,
        }
    }

    /// τ(ν) = Σ_{m=0}^{N-1} ν(m) e^{2πim/N}.
    pub fn gauss_sum(&self) -> Complex64 {
        let n = self.modulus();
        (0..n)
            .map(|m| self.value(m as i64) * Complex64::from_polar(1.0, 2.0 * PI * m as f64 / n as f64))
            .sum()
    }

    /// Smallest d | N with ν trivial on units ≡ 1 (mod d).
    pub fn conductor(&self) -> u64 {
        let n = self.modulus();
        for d in divisors(n) {
            let trivial = (1..=n)
                .filter(|&a| gcd(a, n) == 1 && a % d == 1 % d)
                .all(|a| self.value_exponent(a as i64) == Some(0));
            if trivial {
                return d;
            }
        }
        n
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus()
    }

    /// (residue, Re ν, Im ν) rows for every residue mod N.
    pub fn table(&self) -> Vec<(u64, f64, f64)> {
        (0..self.modulus())
            .map(|a| {
                let v = self.value(a as i64);
                (a, v.re, v.im)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(characters_mod(5).len(), 4);
        assert_eq!(characters_mod(1).len(), 1);
        assert_eq!(characters_mod(8).len(), 4);
        assert_eq!(characters_mod(7).len(), 6);
        assert!(characters_mod(5)[0].is_principal());
        assert_eq!(UnitGroup::new(5).generators, vec![(2, 4)]);
    }

    #[test]
    fn mod_five_labels() {
        let chars = characters_mod(5);
        assert!((chars[1].value(2) - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert_eq!(chars[1].parity_epsilon(), 1);
        assert_eq!(chars[2].parity_epsilon(), 0);
        assert_eq!(chars[0].parity_epsilon(), 0);
        assert_eq!(chars[1].conjugate(), chars[3]);
        assert_eq!(chars[1].conjugate().label(), 3);
    }

    #[test]
    fn gauss_sums() {
        let chars = characters_mod(5);
        assert!((chars[2].gauss_sum() - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12);
        assert!((chars[0].gauss_sum() + 1.0).norm() < 1e-12);
        for n in [5u64, 7] {
            for nu in characters_mod(n).into_iter().filter(|c| c.is_primitive()) {
                let prod = nu.gauss_sum() * nu.conjugate().gauss_sum();
                let want = nu.value(-1) * n as f64;
                assert!((prod - want).norm() < 1e-12);
                assert!((nu.gauss_sum().norm() - (n as f64).sqrt()).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn primitivity() {
        let chars = characters_mod(5);
        assert!(!chars[0].is_primitive());
        assert!(chars[1..].iter().all(|c| c.is_primitive()));
        let induced = characters_mod(9).into_iter().filter(|c| c.conductor() == 3).count();
        assert_eq!(induced, 1);
        assert_eq!(characters_mod(9).into_iter().filter(|c| c.is_primitive()).count(), 4);
    }

    #[test]
    fn orthogonality() {
        for n in [5u64, 7, 8, 12, 15] {
            let chars = characters_mod(n);
            let phi = totient(n) as f64;
            for a in &chars {
                for b in &chars {
                    let s: Complex64 = (0..n as i64).map(|m| a.value(m) * b.value(m).conj()).sum();
                    let want = if a == b { phi } else { 0.0 };
                    assert!((s - want).norm() < 1e-12);
                }
                assert_eq!(a.parity_epsilon(), a.value_exponent(n as i64 - 1).map(|k| (k != 0) as u32).unwrap_or(0));
            }
        }
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!(parse_descriptor("7:3").unwrap().label(), 3);
        assert!(parse_descriptor("7").is_err());
        assert!(parse_descriptor("5:9").is_err());
    }
}
