use std::str::FromStr;

use num_complex::Complex64;

use super::config::{parse_grid, RunConfig};
use super::suites::resolve_stream;
use crate::analytic::{dirichlet_l, product_l, LMethod, MaassExpansion, ProductMethod};
use crate::coeffs::{chebyshev_product_coeffs, convolution_coeffs, ramanujan_tau_table};
use crate::dirichlet::character;
use crate::pmellin::cp_modified;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Tau,
    Convolution,
    Ltable,
    Maass,
    Mellin,
    Character,
    Stream,
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "tau" => TableKind::Tau,
            "convolution" => TableKind::Convolution,
            "ltable" => TableKind::Ltable,
            "maass" => TableKind::Maass,
            "mellin" => TableKind::Mellin,
            "character" => TableKind::Character,
            "stream" => TableKind::Stream,
            other => return Err(Error::Config(format!("unknown table kind `{other}`"))),
        })
    }
}

struct Table {
    w: csv::Writer<Vec<u8>>,
}

impl Table {
    fn new(header: &[&str]) -> Result<Self> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header).map_err(io)?;
        Ok(Table { w })
    }

    fn row(&mut self, fields: &[String]) -> Result<()> {
        self.w.write_record(fields).map_err(io)
    }

    fn finish(self) -> Result<String> {
        let bytes = self.w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }
}

fn io(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn f(x: f64) -> String {
    format!("{x:.17e}")
}

fn first_prime(config: &RunConfig) -> Result<u64> {
    config.primes.first().copied().ok_or_else(|| Error::Config("no prime given".into()))
}

/// Deterministic CSV for one table kind. `n_max` bounds index-based
/// tables; grid-based tables read the s- and y-grids from `config`.
pub fn emit_table(kind: TableKind, config: &RunConfig, n_max: usize) -> Result<String> {
    match kind {
        TableKind::Tau => {
            let mut t = Table::new(&["n", "tau(n) [q prod(1-q^k)^24]"])?;
            if n_max > 0 {
                let tau = ramanujan_tau_table(n_max);
                for n in 1..=n_max {
                    t.row(&[n.to_string(), tau[n].to_string()])?;
                }
            }
            t.finish()
        }
        TableKind::Convolution => {
            let nu = character(config.modulus, config.char_index)?;
            let mut t = Table::new(&[
                "n",
                "re sum_{d|n} nu(d)nu*(n/d)",
                "im sum_{d|n} nu(d)nu*(n/d)",
                "prod_p U_{n_p}(cos arg nu(p))",
            ])?;
            if n_max > 0 {
                let a = convolution_coeffs(&nu, n_max)?;
                let b = chebyshev_product_coeffs(&nu, n_max)?;
                for n in 1..=n_max {
                    t.row(&[n.to_string(), f(a[n].re), f(a[n].im), f(b[n].re)])?;
                }
            }
            t.finish()
        }
        TableKind::Ltable => {
            let nu = character(config.modulus, config.char_index)?;
            let mut t = Table::new(&[
                "s",
                "re L(s,nu) series",
                "im L(s,nu) series",
                "re L(s,nu) euler",
                "im L(s,nu) euler",
                "re L(s,nu)L(s,nu*)",
                "im L(s,nu)L(s,nu*)",
            ])?;
            for s in parse_grid(&config.s_grid)? {
                let z = Complex64::new(s, 0.0);
                let a = dirichlet_l(z, &nu, LMethod::DEFAULT_SERIES)?.value;
                let b = dirichlet_l(z, &nu, LMethod::DEFAULT_EULER)?.value;
                let c = if nu.is_principal() {
                    Complex64::new(f64::NAN, f64::NAN)
                } else {
                    product_l(z, &nu, &ProductMethod::direct())?.value
                };
                t.row(&[f(s), f(a.re), f(a.im), f(b.re), f(b.im), f(c.re), f(c.im)])?;
            }
            t.finish()
        }
        TableKind::Maass => {
            let nu = character(config.modulus, config.char_index)?;
            let mut t = Table::new(&["y", "n", "re a(n)", "re a(n)(ny)^eps sqrt(y) K0(2 pi n y/N)", "im a(n)(ny)^eps sqrt(y) K0(2 pi n y/N)"])?;
            if n_max > 0 {
                let a = convolution_coeffs(&nu, n_max)?;
                for y in parse_grid(&config.y_grid)? {
                    let e = MaassExpansion::new(y, &nu, n_max, true)?;
                    for n in 1..=n_max {
                        t.row(&[f(y), n.to_string(), f(a[n].re), f(e.terms[n].re), f(e.terms[n].im)])?;
                    }
                }
            }
            t.finish()
        }
        TableKind::Mellin => {
            let p = first_prime(config)?;
            let mut t = Table::new(&["ell", "t", "re c_p(ell, it + 1/2)", "im c_p(ell, it + 1/2)"])?;
            for ell in 0..p as u32 {
                for s in parse_grid(&config.t_grid)? {
                    let v = cp_modified(p, ell, Complex64::new(0.0, s))?;
                    t.row(&[ell.to_string(), f(s), f(v.re), f(v.im)])?;
                }
            }
            t.finish()
        }
        TableKind::Character => {
            let nu = character(config.modulus, config.char_index)?;
            let mut t = Table::new(&["residue", "re nu", "im nu"])?;
            for (r, re, im) in nu.table() {
                t.row(&[r.to_string(), f(re), f(im)])?;
            }
            t.finish()
        }
        TableKind::Stream => {
            let stream = resolve_stream(config, n_max.max(2))?;
            let mut t = Table::new(&["n", "re a(n)", "im a(n)"])?;
            for n in 1..=n_max as u64 {
                let a = stream.coefficient(n)?;
                t.row(&[n.to_string(), f(a.re), f(a.im)])?;
            }
            t.finish()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_table_head() {
        let c = RunConfig::default();
        let s = emit_table(TableKind::Tau, &c, 5).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[2], "2,-24");
        assert_eq!(lines[5], "5,4830");
    }

    #[test]
    fn empty_range_header_only() {
        let c = RunConfig::default();
        for kind in [TableKind::Tau, TableKind::Convolution, TableKind::Maass, TableKind::Stream] {
            assert_eq!(emit_table(kind, &c, 0).unwrap().lines().count(), 1);
        }
    }

    #[test]
    fn convolution_columns_agree() {
        let c = RunConfig::default();
        let s = emit_table(TableKind::Convolution, &c, 50).unwrap();
        for line in s.lines().skip(1) {
            let v: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
            assert!((v[1] - v[3]).abs() < 1e-10 && v[2].abs() < 1e-10);
        }
    }

    #[test]
    fn unknown_kind() {
        assert!("pie".parse::<TableKind>().is_err());
    }
}
