use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::arith::{factorize, is_prime, primes_below};
use crate::coeffs::ramanujan_tau_table;
use crate::dirichlet::{parse_descriptor, DirichletCharacter};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StreamKind {
    CuspForm,
    ProductDirichlet,
    Custom,
}

#[derive(Clone, Debug)]
enum Nebentypus {
    /// χ(p) = 1 for every p.
    Trivial,
    Character(DirichletCharacter),
    Table(BTreeMap<u64, Complex64>, Complex64),
}

/// a: ℕ → ℂ, multiplicative, with prime powers generated by
/// a(p^{m+1}) = a(p)a(p^m) - χ(p)p^{k-1}a(p^{m-1}).
#[derive(Debug)]
pub struct CoefficientStream {
    kind: StreamKind,
    weight: u32,
    nebentypus: Nebentypus,
    seeds: BTreeMap<u64, Complex64>,
    exact_seeds: Option<BTreeMap<u64, BigInt>>,
    memo: RwLock<HashMap<u64, Vec<Complex64>>>,
    exact_memo: RwLock<HashMap<u64, Vec<BigInt>>>,
}

impl Clone for CoefficientStream {
    fn clone(&self) -> Self {
        Self::build(self.kind, self.weight, self.nebentypus.clone(), self.seeds.clone(), self.exact_seeds.clone())
    }
}

impl CoefficientStream {
    fn build(
        kind: StreamKind,
        weight: u32,
        nebentypus: Nebentypus,
        seeds: BTreeMap<u64, Complex64>,
        exact_seeds: Option<BTreeMap<u64, BigInt>>,
    ) -> Self {
        CoefficientStream {
            kind,
            weight,
            nebentypus,
            seeds,
            exact_seeds,
            memo: RwLock::new(HashMap::new()),
            exact_memo: RwLock::new(HashMap::new()),
        }
    }

    /// The discriminant form Δ, seeded with τ(p) for primes p ≤ `prime_bound`.
    pub fn tau(prime_bound: usize) -> Self {
        let table = ramanujan_tau_table(prime_bound.max(2));
        let mut seeds = BTreeMap::new();
        let mut exact = BTreeMap::new();
        for p in primes_below(prime_bound + 1) {
            let t = table[p as usize];
            seeds.insert(p, Complex64::new(t as f64, 0.0));
            exact.insert(p, BigInt::from(t));
        }
        Self::build(StreamKind::CuspForm, 12, Nebentypus::Trivial, seeds, Some(exact))
    }

    /// Coefficients of L(s,ν)L(s,ν*): weight 1, χ = principal character mod N,
    /// a(p) = ν(p) + ν*(p), for primes p ≤ `prime_bound`.
    pub fn product_dirichlet(nu: &DirichletCharacter, prime_bound: usize) -> Result<Self> {
        if nu.is_principal() {
            return Err(Error::PrincipalCharacter);
        }
        let mut seeds = BTreeMap::new();
        for p in primes_below(prime_bound + 1) {
            let v = nu.value(p as i64);
            seeds.insert(p, v + v.conj());
        }
        let principal = crate::dirichlet::character(nu.modulus(), 0)?;
        Ok(Self::build(StreamKind::ProductDirichlet, 1, Nebentypus::Character(principal), seeds, None))
    }

    /// User-supplied weight, nebentypus character (trivial if `None`) and seeds.
    pub fn custom(weight: u32, character: Option<DirichletCharacter>, seeds: BTreeMap<u64, Complex64>) -> Result<Self> {
        for &p in seeds.keys() {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        let neb = character.map(Nebentypus::Character).unwrap_or(Nebentypus::Trivial);
        let exact = integral_seeds(&seeds);
        Ok(Self::build(StreamKind::Custom, weight, neb, seeds, exact))
    }

    /// Seeds and χ(p) both given per prime; χ defaults to `chi_default` elsewhere.
    pub fn with_table(weight: u32, chi: BTreeMap<u64, Complex64>, chi_default: Complex64, seeds: BTreeMap<u64, Complex64>) -> Self {
        let exact = integral_seeds(&seeds);
        Self::build(StreamKind::Custom, weight, Nebentypus::Table(chi, chi_default), seeds, exact)
    }

    /// Parse a descriptor with lines `kind = tau|product-dirichlet|custom`,
    /// `weight = k`, `character = N:index`, `seeds = 2:-24,3:252` (complex
    /// seeds as `p:re:im`) and `prime_bound = B`. `#` starts a comment.
    pub fn from_descriptor(text: &str) -> Result<Self> {
        let mut fields = BTreeMap::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected key = value, got `{line}`")))?;
            fields.insert(k.trim().to_string(), v.trim().to_string());
        }
        let bound: usize = match fields.get("prime_bound") {
            Some(b) => b.parse().map_err(|_| Error::Config(format!("bad prime_bound `{b}`")))?,
            None => 10_000,
        };
        let kind = fields.get("kind").map(String::as_str).unwrap_or("custom");
        match kind {
            "tau" => Ok(Self::tau(bound)),
            "product-dirichlet" => {
                let c = fields.get("character").ok_or_else(|| Error::Config("product-dirichlet needs `character`".into()))?;
                Self::product_dirichlet(&parse_descriptor(c)?, bound)
            }
            "custom" => {
                let weight: u32 = fields
                    .get("weight")
                    .ok_or_else(|| Error::Config("custom stream needs `weight`".into()))?
                    .parse()
                    .map_err(|_| Error::Config("bad weight".into()))?;
                let character = fields.get("character").map(|c| parse_descriptor(c)).transpose()?;
                let seeds = parse_seeds(fields.get("seeds").map(String::as_str).unwrap_or(""))?;
                Self::custom(weight, character, seeds)
            }
            other => Err(Error::Config(format!("unknown stream kind `{other}`"))),
        }
    }

    pub fn kind(&self) -> StreamKind {
        self.kind
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn seed_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.seeds.keys().copied()
    }

    pub fn seed(&self, p: u64) -> Result<Complex64> {
        self.seeds.get(&p).copied().ok_or(Error::MissingSeed(p))
    }

    pub fn chi(&self, p: u64) -> Complex64 {
        match &self.nebentypus {
            Nebentypus::Trivial => Complex64::new(1.0, 0.0),
            Nebentypus::Character(c) => c.value(p as i64),
            Nebentypus::Table(t, d) => t.get(&p).copied().unwrap_or(*d),
        }
    }

    /// a(p^m).
    pub fn prime_power(&self, p: u64, m: u32) -> Result<Complex64> {
        if m == 0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if let Some(v) = self.memo.read().unwrap().get(&p) {
            if let Some(x) = v.get(m as usize) {
                return Ok(*x);
            }
        }
        let ap = self.seed(p)?;
        let c = self.chi(p) * (p as f64).powi(self.weight as i32 - 1);
        let mut memo = self.memo.write().unwrap();
        let v = memo.entry(p).or_insert_with(|| vec![Complex64::new(1.0, 0.0), ap]);
        while v.len() <= m as usize {
            let n = v.len();
            let next = ap * v[n - 1] - c * v[n - 2];
            v.push(next);
        }
        Ok(v[m as usize])
    }

    /// a(n) = Π a(p^{n_p}).
    pub fn coefficient(&self, n: u64) -> Result<Complex64> {
        if n == 0 {
            return Err(Error::Domain("a(0) is not part of a multiplicative stream".into()));
        }
        let mut v = Complex64::new(1.0, 0.0);
        for (p, e) in factorize(n) {
            v *= self.prime_power(p, e)?;
        }
        Ok(v)
    }

    fn exact_chi(&self, p: u64) -> Result<BigInt> {
        let c = self.chi(p);
        if c.im != 0.0 || c.re.fract() != 0.0 {
            return Err(Error::Unsupported(format!("non-integral χ({p}) = {c} on the exact path")));
        }
        Ok(BigInt::from(c.re as i64))
    }

    /// a(p^m) in exact integer arithmetic, for streams with integral seeds and χ.
    pub fn prime_power_exact(&self, p: u64, m: u32) -> Result<BigInt> {
        let seeds = self
            .exact_seeds
            .as_ref()
            .ok_or_else(|| Error::Unsupported("stream has non-integral seeds".into()))?;
        if m == 0 {
            return Ok(BigInt::one());
        }
        if let Some(v) = self.exact_memo.read().unwrap().get(&p) {
            if let Some(x) = v.get(m as usize) {
                return Ok(x.clone());
            }
        }
        let ap = seeds.get(&p).cloned().ok_or(Error::MissingSeed(p))?;
        let c = self.exact_chi(p)? * num_traits::pow(BigInt::from(p), self.weight as usize - 1);
        let mut memo = self.exact_memo.write().unwrap();
        let v = memo.entry(p).or_insert_with(|| vec![BigInt::one(), ap.clone()]);
        while v.len() <= m as usize {
            let n = v.len();
            let next = &ap * &v[n - 1] - &c * &v[n - 2];
            v.push(next);
        }
        Ok(v[m as usize].clone())
    }

    pub fn coefficient_exact(&self, n: u64) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::Domain("a(0) is not part of a multiplicative stream".into()));
        }
        let mut v = BigInt::one();
        for (p, e) in factorize(n) {
            v *= self.prime_power_exact(p, e)?;
            if v.is_zero() {
                break;
            }
        }
        Ok(v)
    }
}

fn integral_seeds(seeds: &BTreeMap<u64, Complex64>) -> Option<BTreeMap<u64, BigInt>> {
    seeds
        .iter()
        .map(|(&p, v)| (v.im == 0.0 && v.re.fract() == 0.0 && v.re.abs() < 9e15).then(|| (p, BigInt::from(v.re as i64))))
        .collect()
}

fn parse_seeds(text: &str) -> Result<BTreeMap<u64, Complex64>> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        let bad = || Error::Config(format!("bad seed `{item}`"));
        let p: u64 = parts[0].trim().parse().map_err(|_| bad())?;
        let re: f64 = parts.get(1).ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let im: f64 = match parts.get(2) {
            Some(s) => s.trim().parse().map_err(|_| bad())?,
            None => 0.0,
        };
        if parts.len() > 3 {
            return Err(bad());
        }
        out.insert(p, Complex64::new(re, im));
    }
    Ok(out)
}

/// max_p |a(p)| / p^{(k-1)/2} over seeded primes up to a cutoff.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub cutoff: u64,
    pub max_ratio: f64,
    pub worst_prime: Option<u64>,
    pub ratios: Vec<(u64, f64)>,
}

impl BoundReport {
    pub fn within(&self, c: f64) -> bool {
        self.max_ratio <= c
    }
}

pub fn coefficient_bound_check(stream: &CoefficientStream, cutoff: u64) -> Result<BoundReport> {
    let mut ratios = Vec::new();
    let mut max_ratio: f64 = 0.0;
    let mut worst = None;
    for p in primes_below(cutoff as usize + 1) {
        let r = stream.seed(p)?.norm() / (p as f64).powf((stream.weight() as f64 - 1.0) / 2.0);
        if r > max_ratio {
            max_ratio = r;
            worst = Some(p);
        }
        ratios.push((p, r));
    }
    Ok(BoundReport { cutoff, max_ratio, worst_prime: worst, ratios })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::characters_mod;

    #[test]
    fn tau_stream_examples() {
        let s = CoefficientStream::tau(100);
        assert_eq!(s.coefficient(4).unwrap().re, -1472.0);
        assert_eq!(s.coefficient(6).unwrap().re, -6048.0);
        assert_eq!(s.coefficient(1).unwrap().re, 1.0);
        assert_eq!(s.coefficient_exact(12).unwrap(), BigInt::from(-1472 * 252));
        assert!(matches!(s.coefficient(101), Err(Error::MissingSeed(101))));
    }

    #[test]
    fn bound_reports() {
        let s = CoefficientStream::tau(100);
        assert!(coefficient_bound_check(&s, 99).unwrap().within(2.0));
        for nu in characters_mod(7).iter().skip(1) {
            let d = CoefficientStream::product_dirichlet(nu, 200).unwrap();
            let r = coefficient_bound_check(&d, 200).unwrap();
            assert!(r.within(2.0 + 1e-12));
            assert_eq!(r.ratios.iter().find(|x| x.0 == 7).unwrap().1, 0.0);
        }
    }

    #[test]
    fn descriptor_round() {
        let s = CoefficientStream::from_descriptor("kind = custom\nweight = 12\nseeds = 2:-24, 3:252\n").unwrap();
        assert_eq!(s.coefficient_exact(6).unwrap(), BigInt::from(-6048));
        let d = CoefficientStream::from_descriptor("kind = product-dirichlet\ncharacter = 5:1\nprime_bound = 50").unwrap();
        assert_eq!(d.weight(), 1);
        assert!(CoefficientStream::from_descriptor("kind = bogus").is_err());
        assert!(CoefficientStream::from_descriptor("kind = custom\nweight = 2\nseeds = 2:1:0:5").is_err());
    }
}
