use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown format `{other}`"))),
        }
    }
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

pub const SUITES: [&str; 10] = [
    "wavelets",
    "mellin",
    "hecke",
    "parton",
    "chebyshev",
    "theta",
    "bessel",
    "maass",
    "time-average",
    "all",
];

/// Everything a run needs. Grids are kept as text ("a,b,c" or
/// "start:stop:count") so they round-trip unchanged.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    /// default "all"
    pub suite: String,
    /// default 2,3,5
    pub primes: Vec<u64>,
    /// window size M, default 10
    pub truncation: usize,
    /// p-adic digits, default 32
    pub precision: usize,
    /// default 5
    pub modulus: u64,
    /// default 1
    pub char_index: usize,
    /// default 12
    pub weight: u32,
    /// "tau", "dirichlet" (uses modulus and char_index) or a descriptor file; default "tau"
    pub stream: String,
    /// default "2,2.5,3"
    pub s_grid: String,
    /// default "0:10:21"
    pub t_grid: String,
    /// default "0.5,1,2"
    pub y_grid: String,
    /// default: standard output
    pub out: Option<PathBuf>,
    /// default csv
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suite: "all".into(),
            primes: vec![2, 3, 5],
            truncation: 10,
            precision: 32,
            modulus: 5,
            char_index: 1,
            weight: 12,
            stream: "tau".into(),
            s_grid: "2,2.5,3".into(),
            t_grid: "0:10:21".into(),
            y_grid: "0.5,1,2".into(),
            out: None,
            format: Format::Csv,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("bad value `{value}` for {key}")))
}

pub fn parse_primes(text: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let p: u64 = parse_num("primes", tok)?;
        if !crate::arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        out.push(p);
    }
    Ok(out)
}

/// "a,b,c" or "start:stop:count" (inclusive, evenly spaced).
pub fn parse_grid(text: &str) -> Result<Vec<f64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Config(format!("grid `{text}` is not start:stop:count")));
        }
        let a: f64 = parse_num("grid", parts[0])?;
        let b: f64 = parse_num("grid", parts[1])?;
        let n: usize = parse_num("grid", parts[2])?;
        return Ok(match n {
            0 => Vec::new(),
            1 => vec![a],
            _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
        });
    }
    text.split(',').map(|t| parse_num("grid", t)).collect()
}

impl RunConfig {
    /// Flat `key = value` lines; `#` starts a comment.
    pub fn from_config_text(text: &str) -> Result<Self> {
        let mut c = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            c.set(k.trim(), v.trim())?;
        }
        Ok(c)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "suite" => self.suite = value.to_string(),
            "primes" => self.primes = parse_primes(value)?,
            "truncation" => self.truncation = parse_num(key, value)?,
            "precision" => self.precision = parse_num(key, value)?,
            "modulus" => self.modulus = parse_num(key, value)?,
            "char_index" | "char-index" => self.char_index = parse_num(key, value)?,
            "weight" => self.weight = parse_num(key, value)?,
            "stream" => self.stream = value.to_string(),
            "s_grid" | "s-grid" => self.s_grid = value.to_string(),
            "t_grid" | "t-grid" => self.t_grid = value.to_string(),
            "y_grid" | "y-grid" => self.y_grid = value.to_string(),
            "out" => self.out = if value.is_empty() { None } else { Some(PathBuf::from(value)) },
            "format" => self.format = value.parse()?,
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    pub fn to_config_text(&self) -> String {
        let mut s = String::new();
        let primes: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        let _ = writeln!(s, "suite = {}", self.suite);
        let _ = writeln!(s, "primes = {}", primes.join(","));
        let _ = writeln!(s, "truncation = {}", self.truncation);
        let _ = writeln!(s, "precision = {}", self.precision);
        let _ = writeln!(s, "modulus = {}", self.modulus);
        let _ = writeln!(s, "char_index = {}", self.char_index);
        let _ = writeln!(s, "weight = {}", self.weight);
        let _ = writeln!(s, "stream = {}", self.stream);
        let _ = writeln!(s, "s_grid = {}", self.s_grid);
        let _ = writeln!(s, "t_grid = {}", self.t_grid);
        let _ = writeln!(s, "y_grid = {}", self.y_grid);
        let _ = writeln!(s, "out = {}", self.out.as_ref().map(|p| p.display().to_string()).unwrap_or_default());
        let _ = writeln!(s, "format = {}", self.format);
        s
    }

    pub fn validate(&self) -> Result<()> {
        if !SUITES.contains(&self.suite.as_str()) {
            return Err(Error::Config(format!("unknown suite `{}`", self.suite)));
        }
        if self.precision == 0 {
            return Err(Error::InvalidPrecision);
        }
        if self.modulus == 0 {
            return Err(Error::Config("modulus must be positive".into()));
        }
        parse_grid(&self.s_grid)?;
        parse_grid(&self.t_grid)?;
        parse_grid(&self.y_grid)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grids() {
        assert_eq!(parse_grid("1,2.5").unwrap(), vec![1.0, 2.5]);
        assert_eq!(parse_grid("0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("a,b").is_err());
        assert!(parse_grid("").unwrap().is_empty());
    }

    #[test]
    fn unknown_key_and_suite() {
        assert!(RunConfig::from_config_text("colour = red").is_err());
        let c = RunConfig::from_config_text("suite = nope").unwrap();
        assert!(c.validate().is_err());
        assert!(RunConfig::default().validate().is_ok());
    }

    proptest! {
        #[test]
        fn config_round_trip(
            suite in proptest::sample::select(SUITES.to_vec()),
            primes in proptest::collection::vec(proptest::sample::select(vec![2u64, 3, 5, 7, 11, 13]), 0..4),
            truncation in 0usize..200,
            modulus in 1u64..100,
            idx in 0usize..50,
            weight in 1u32..40,
            json in any::<bool>(),
            out in proptest::option::of("[a-z]{1,8}\\.csv"),
        ) {
            let c = RunConfig {
                suite: suite.to_string(),
                primes,
                truncation,
                modulus,
                char_index: idx,
                weight,
                out: out.map(PathBuf::from),
                format: if json { Format::Json } else { Format::Csv },
                ..RunConfig::default()
            };
            let back = RunConfig::from_config_text(&c.to_config_text()).unwrap();
            prop_assert_eq!(back, c);
        }
    }
}
