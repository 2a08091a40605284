use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;

use super::config::{parse_grid, RunConfig};
use super::report::{CheckRow, Report};
use crate::analytic::{
    bessel_k0, bessel_k0_asymptotic, bessel_k0_series, chebyshev_local_factor, chebyshev_local_series, dirichlet_l,
    gauss_product_residual, halving_cutoffs, l_from_theta_mellin, maass_norm_divergence_probe, product_l,
    product_l_bessel_check, theta_convolution_weight_check, theta_s_transform_residual, time_average_inner_product,
    time_average_trend, two_sided_exponential_integral, LMethod, MaassExpansion, ProductMethod,
};
use crate::coeffs::{chebyshev_product_coeffs, convolution_coeffs, CoefficientStream};
use crate::dirichlet::{character, characters_mod, DirichletCharacter};
use crate::padic::PadicNumber;
use crate::parton::{
    adjoint_check_i, adjoint_check_ii, decompose, decompose_exact, finite_euler_mellin_check, hecke_apply,
    overlap_dichotomy, parseval_check, reconstruct, reconstruct_exact, uv_on_qseries, HeckeVariant, OverlapClass,
    QOp, QSeries,
};
use crate::pmellin::{cp_unitarity_sum, inverse_mellin, mellin_transform, wavelet_mellin_closed_form, MellinVariant};
use crate::wavelets::{
    gamma_p, gamma_p_shell_sum, gram_deviation, kozyrev_wavelet, modified_wavelet, vladimirov_eigencheck,
    wavelet_window, WaveletIndex,
};
use crate::{Error, Result};

type Check = Box<dyn Fn() -> Result<Vec<CheckRow>> + Send + Sync>;

fn job(name: &'static str, params: String, f: impl Fn() -> Result<Vec<CheckRow>> + Send + Sync + 'static) -> (String, String, Check) {
    (name.to_string(), params, Box::new(f))
}

/// Builds the stream named by `config.stream`: "tau", "dirichlet", or a
/// descriptor file path.
pub fn resolve_stream(config: &RunConfig, prime_bound: usize) -> Result<CoefficientStream> {
    match config.stream.as_str() {
        "tau" => Ok(CoefficientStream::tau(prime_bound)),
        "dirichlet" => CoefficientStream::product_dirichlet(&character(config.modulus, config.char_index)?, prime_bound),
        path => CoefficientStream::from_descriptor(&std::fs::read_to_string(path)?),
    }
}

fn max_of(values: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for v in values {
        let v = v?;
        if v.is_nan() {
            return Ok(f64::NAN);
        }
        worst = worst.max(v);
    }
    Ok(worst)
}

fn nonprincipal(modulus: u64) -> Vec<DirichletCharacter> {
    characters_mod(modulus).into_iter().filter(|c| !c.is_principal()).collect()
}

fn primitive(modulus: u64) -> Vec<DirichletCharacter> {
    characters_mod(modulus).into_iter().filter(|c| c.is_primitive()).collect()
}

fn wavelet_checks(config: &RunConfig, out: &mut Vec<(String, String, Check)>) {
    for &p in &config.primes {
        let params = format!("p={p} n=-2..2 depth=1");
        out.push(job("wavelets.orthonormal", params.clone(), move || {
            let w = wavelet_window(p, -2..=2, 1);
            Ok(vec![CheckRow::check("wavelets.orthonormal", format!("p={p} n=-2..2 depth=1"), gram_deviation(p, &w, false)?, 1e-12)])
        }));
        out.push(job("wavelets.modified_orthonormal", params, move || {
            let w = wavelet_window(p, -2..=2, 1);
            Ok(vec![CheckRow::check("wavelets.modified_orthonormal", format!("p={p} n=-2..2 depth=1"), gram_deviation(p, &w, true)?, 1e-12)])
        }));
        out.push(job("wavelets.vladimirov", format!("p={p}"), move || {
            let mut rows = Vec::new();
            for alpha in [0.5, 1.0, 2.0] {
                let r = max_of((-2..=2).map(|n| vladimirov_eigencheck(p, n, alpha)))?;
                rows.push(CheckRow::check("wavelets.vladimirov", format!("p={p} alpha={alpha} n=-2..2"), r, 1e-8));
            }
            Ok(rows)
        }));
        out.push(job("wavelets.gamma_p", format!("p={p}"), move || {
            let alpha = Complex64::new(-0.7, 0.4);
            let r = (gamma_p(p, alpha)? - gamma_p_shell_sum(p, alpha, 400)?).norm();
            Ok(vec![CheckRow::check("wavelets.gamma_p", format!("p={p} alpha=-0.7+0.4i"), r, 1e-12)])
        }));
    }
}

fn mellin_checks(config: &RunConfig, out: &mut Vec<(String, String, Check)>) {
    let s_grid = parse_grid(&config.s_grid).unwrap_or_default();
    let t_grid = parse_grid(&config.t_grid).unwrap_or_default();
    let precision = config.precision;
    for &p in &config.primes {
        let s_grid = s_grid.clone();
        out.push(job("mellin.closed_form", format!("p={p}"), move || {
            let mut worst: f64 = 0.0;
            for n in -2..=2 {
                let psi = kozyrev_wavelet(p, &WaveletIndex::mother(n))?;
                let mpsi = modified_wavelet(p, &WaveletIndex::mother(n))?;
                for &sr in &s_grid {
                    for ell in 0..p as u32 {
                        let s = Complex64::new(sr, 0.3);
                        let a = mellin_transform(&psi, s, ell)?;
                        let b = wavelet_mellin_closed_form(p, n, s, ell, MellinVariant::Kozyrev)?;
                        let c = mellin_transform(&mpsi, s, ell)?;
                        let d = wavelet_mellin_closed_form(p, n, s, ell, MellinVariant::Modified)?;
                        worst = worst.max((a - b).norm() / b.norm().max(1.0)).max((c - d).norm() / d.norm().max(1.0));
                    }
                }
            }
            Ok(vec![CheckRow::check("mellin.closed_form", format!("p={p} n=-2..2 s=grid+0.3i"), worst, 1e-12)])
        }));
        let t_grid = t_grid.clone();
        out.push(job("mellin.unitarity", format!("p={p}"), move || {
            let r = max_of(t_grid.iter().map(|&t| cp_unitarity_sum(p, Complex64::new(0.0, t)).map(|v| (v - 1.0).abs())));
            Ok(vec![CheckRow::check("mellin.unitarity", format!("p={p} s=it t=grid"), r?, 1e-12)])
        }));
        out.push(job("mellin.inverse", format!("p={p}"), move || {
            let n = 1;
            let psi = kozyrev_wavelet(p, &WaveletIndex::mother(n))?;
            let g = |ell: u32, s: Complex64| wavelet_mellin_closed_form(p, n, s, ell, MellinVariant::Kozyrev);
            let mut worst: f64 = 0.0;
            for (a, b) in [(1, 1), (1, p as i64), (2, 1), (3, p as i64 * p as i64)] {
                let x = PadicNumber::from_fraction(a, b, p, precision)?;
                let v = inverse_mellin(g, &x, 1.0, 64)?.value;
                worst = worst.max((v - psi.evaluate(&x)?).norm());
            }
            Ok(vec![CheckRow::check("mellin.inverse", format!("p={p} n={n} sigma=1"), worst, 1e-8)])
        }));
    }
}

fn hecke_checks(config: &RunConfig, out: &mut Vec<(String, String, Check)>) {
    let m = config.truncation.max(1);
    for &p in &config.primes {
        let cfg = config.clone();
        out.push(job("hecke.eigen", format!("p={p}"), move || {
            let stream = resolve_stream(&cfg, 2000)?;
            let st = decompose(&stream, p, m, false)?;
            let r1 = hecke_apply(&st, HeckeVariant::I)?.residual;
            let st2 = decompose(&stream, p, m, true)?;
            let r2 = hecke_apply(&st2, HeckeVariant::II)?.residual;
            let params = format!("stream={} p={p} M={m}", cfg.stream);
            Ok(vec![
                CheckRow::check("hecke.eigen_i", params.clone(), r1, 1e-10),
                CheckRow::check("hecke.eigen_ii", params, r2, 1e-10),
            ])
        }));
        let cfg = config.clone();
        out.push(job("hecke.qseries", format!("p={p}"), move || {
            let n_max = 2000usize;
            let stream = resolve_stream(&cfg, n_max * p as usize)?;
            let f = QSeries::from_stream(&stream, n_max * p as usize)?;
            let ap = stream.seed(p)?;
            let g = uv_on_qseries(&f, p as usize, QOp::T, stream.weight(), stream.chi(p));
            let mut worst: f64 = 0.0;
            for n in 1..=n_max {
                let want = ap * f.coeffs[n];
                worst = worst.max((g.coeffs[n] - want).norm() / want.norm().max(1.0));
            }
            Ok(vec![CheckRow::check("hecke.qseries", format!("stream={} p={p} n<=2000", cfg.stream), worst, 1e-10)])
        }));
    }
}

fn parton_checks(config: &RunConfig, out: &mut Vec<(String, String, Check)>) {
    let m = config.truncation.max(1);
    let cfg = config.clone();
    out.push(job("parton.reconstruct", String::new(), move || {
        let n_max = 2000u64;
        let stream = resolve_stream(&cfg, n_max as usize)?;
        let primes = crate::arith::primes_below(n_max as usize + 1);
        let exponent = |p: u64| {
            let (mut e, mut q) = (0usize, p);
            while q <= n_max {
                e += 1;
                q *= p;
            }
            e
        };
        let params = format!("stream={} n<={n_max}", cfg.stream);
        if cfg.stream == "tau" {
            let states: BTreeMap<u64, _> = primes
                .iter()
                .map(|&p| decompose_exact(&stream, p, exponent(p)).map(|s| (p, s)))
                .collect::<Result<_>>()?;
            let bad = (1..=n_max)
                .filter(|&n| reconstruct_exact(&states, n).ok() != stream.coefficient_exact(n).ok())
                .count();
            return Ok(vec![CheckRow::check("parton.reconstruct_exact", params, bad as f64, 0.0)]);
        }
        let states: BTreeMap<u64, _> = primes
            .iter()
            .map(|&p| decompose(&stream, p, exponent(p), false).map(|s| (p, s)))
            .collect::<Result<_>>()?;
        let worst = max_of((1..=n_max).map(|n| Ok((reconstruct(&states, n)? - stream.coefficient(n)?).norm())))?;
        Ok(vec![CheckRow::check("parton.reconstruct", params, worst, 1e-9)])
    }));
    for &p in &config.primes {
        let cfg = config.clone();
        out.push(job("parton.adjoint", format!("p={p}"), move || {
            let stream = resolve_stream(&cfg, 2000)?;
            let k = stream.weight() as f64;
            let f = decompose(&stream, p, m, false)?;
            let g = f.combine(Complex64::new(0.5, 0.25), &crate::parton::PartonState::ground(p, m, stream.weight(), false), Complex64::new(1.0, 0.0))?;
            let r1 = adjoint_check_i(&f, &g, k)?;
            let fr = decompose(&stream, p, m, true)?;
            let r2 = adjoint_check_ii(&fr, &fr)?;
            let params = format!("stream={} p={p} M={m}", cfg.stream);
            let scale = r1.lhs.norm().max(1.0);
            Ok(vec![
                CheckRow::check("parton.adjoint_i", params.clone(), r1.residual / scale, 1e-10),
                CheckRow::check("parton.adjoint_ii", params, r2.residual / r2.lhs.norm().max(1.0), 1e-10),
            ])
        }));
        let cfg = config.clone();
        out.push(job("parton.parseval", format!("p={p}"), move || {
            let stream = resolve_stream(&cfg, 2000)?;
            let params = format!("stream={} p={p} M={m}", cfg.stream);
            let mut rows = Vec::new();
            for rescaled in [false, true] {
                let f = decompose(&stream, p, m, rescaled)?;
                let r = parseval_check(&f, &f, 64)?;
                let name = if rescaled { "parton.parseval_ii" } else { "parton.parseval_i" };
                rows.push(CheckRow::check(name, params.clone(), r.residual / r.rhs.norm().max(1.0), 1e-8));
            }
            Ok(rows)
        }));
    }
    let cfg = config.clone();
    out.push(job("parton.euler_mellin", String::new(), move || {
        let stream = resolve_stream(&cfg, 2000)?;
        let s = Complex64::new(if stream.weight() >= 12 { 8.0 } else { 3.0 }, 0.2);
        let set: Vec<(u64, u32)> = cfg.primes.iter().map(|&p| (p, 1)).collect();
        let r = finite_euler_mellin_check(&stream, &set, s, 60)?;
        Ok(vec![CheckRow::check(
            "parton.euler_mellin",
            format!("stream={} s={s} M=60", cfg.stream),
            r.residual / r.rhs.norm().max(1e-300),
            1e-10,
        )])
    }));
    let modulus = config.modulus;
    let primes = config.primes.clone();
    out.push(job("parton.dichotomy", String::new(), move || {
        let chars = nonprincipal(modulus);
        let windows = [10usize, 100, 1000];
        let mut rows = Vec::new();
        for &p in &primes {
            if modulus % p == 0 {
                continue;
            }
            for a in &chars {
                for b in &chars {
                    if a.label() >= b.label() {
                        continue;
                    }
                    let (ta, tb) = (a.arg(p as i64).unwrap(), b.arg(p as i64).unwrap());
                    let d = overlap_dichotomy(ta, tb, &windows);
                    let params = format!("N={modulus} p={p} {}x{}", a.descriptor(), b.descriptor());
                    let top = d.partial_sums.iter().map(|x| x.1.abs()).fold(0.0, f64::max);
                    rows.push(match d.class {
                        OverlapClass::Bounded { bound } => CheckRow::check("parton.dichotomy_bounded", params, top - bound, 0.0),
                        OverlapClass::Diagonal => CheckRow::exploratory("parton.dichotomy_diagonal", params, top),
                        OverlapClass::Unclassified => CheckRow::exploratory("parton.dichotomy_unclassified", params, top),
                    });
                }
            }
        }
        Ok(rows)
    }));
}

fn chebyshev_checks(config: &RunConfig, out: &mut Vec<(String, String, Check)>) {
    let modulus = config.modulus;
    out.push(job("chebyshev.convolution", format!("N={modulus}"), move || {
        let mut rows = Vec::new();
        for nu in nonprincipal(modulus) {
            let a = convolution_coeffs(&nu, 5000)?;
            let b = chebyshev_product_coeffs(&nu, 5000)?;
            let worst = a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
            rows.push(CheckRow::check("chebyshev.convolution", format!("nu={} n<=5000", nu.descriptor()), worst, 1e-10));
            let mut local: f64 = 0.0;
            for p in crate::arith::primes_below(30) {
                if modulus % p != 0 {
                    let s = Complex64::new(2.0, 0.0);
                    local = local.max((chebyshev_local_factor(s, &nu, p)? - chebyshev_local_series(s, &nu, p, 50)?).norm());
                }
            }
            rows.push(CheckRow::check("chebyshev.local_factor", format!("nu={} s=2 p<30", nu.descriptor()), local, 1e-12));
        }
        Ok(rows)
    }));
}

fn theta_checks(config: &RunConfig, out: &mut Vec<(String, String, Check)>) {
    let modulus = config.modulus;
    let y_grid = parse_grid(&config.y_grid).unwrap_or_default();
    out.push(job("theta.s_transform", format!("N={modulus}"), move || {
        let mut rows = Vec::new();
        for nu in primitive(modulus) {
            let r = max_of(y_grid.iter().map(|&y| theta_s_transform_residual(y, &nu)))?;
            rows.push(CheckRow::check("theta.s_transform", format!("nu={} y=grid", nu.descriptor()), r, 1e-10));
            rows.push(CheckRow::check("theta.gauss_product", format!("nu={}", nu.descriptor()), gauss_product_residual(&nu), 1e-12));
        }
        Ok(rows)
    }));
    let s_grid = parse_grid(&config.s_grid).unwrap_or_default();
    let (modulus, idx) = (config.modulus, config.char_index);
    out.push(job("theta.mellin", format!("N={modulus}"), move || {
        let nu = character(modulus, idx)?;
        if !nu.is_primitive() {
            return Ok(Vec::new());
        }
        let mut rows = Vec::new();
        for &s in &s_grid {
            let s = Complex64::new(s, 0.0);
            let a = l_from_theta_mellin(s, &nu)?;
            let b = dirichlet_l(s, &nu, LMethod::DEFAULT_SERIES)?.value;
            rows.push(CheckRow::check("theta.mellin", format!("nu={} s={}", nu.descriptor(), s.re), (a - b).norm(), 1e-8));
        }
        Ok(rows)
    }));
    out.push(job("theta.convolution_weight", format!("N={modulus}"), move || {
        let nu = character(modulus, idx)?;
        if !nu.is_primitive() {
            return Ok(Vec::new());
        }
        let r = max_of([0.5, 0.8, 1.3, 2.0, 3.0].iter().map(|&y| theta_convolution_weight_check(y, &nu).map(|c| c.residual)))?;
        Ok(vec![CheckRow::check("theta.convolution_weight", format!("nu={} 5 y values", nu.descriptor()), r, 1e-6)])
    }));
    let s_grid = parse_grid(&config.s_grid).unwrap_or_default();
    out.push(job("theta.product_l", format!("N={modulus}"), move || {
        let nu = character(modulus, idx)?;
        let mut rows = Vec::new();
        for &s in &s_grid {
            let s = Complex64::new(s, 0.0);
            let a = product_l(s, &nu, &ProductMethod::direct())?.value;
            let b = product_l(s, &nu, &ProductMethod::convolution())?.value;
            let c = product_l(s, &nu, &ProductMethod::chebyshev())?.value;
            let r = (a - b).norm().max((a - c).norm());
            rows.push(CheckRow::check("theta.product_l", format!("nu={} s={}", nu.descriptor(), s.re), r, 1e-8));
        }
        Ok(rows)
    }));
}

fn bessel_checks(config: &RunConfig, out: &mut Vec<(String, String, Check)>) {
    out.push(job("bessel.k0", String::new(), || {
        let mut rows = Vec::new();
        for x in [0.1, 1.0] {
            let q = bessel_k0(x)?;
            rows.push(CheckRow::check("bessel.k0_series", format!("x={x}"), (q - bessel_k0_series(x)).abs() / q, 1e-12));
        }
        let q = bessel_k0(20.0)?;
        rows.push(CheckRow::check("bessel.k0_asymptotic", "x=20 terms=12", (q - bessel_k0_asymptotic(20.0, 12)).abs() / q, 1e-6));
        let r = (2.0 * bessel_k0(2.0)? - two_sided_exponential_integral(1.0, 1.0)?).abs();
        rows.push(CheckRow::check("bessel.two_sided", "a=1 b=1", r, 1e-10));
        Ok(rows)
    }));
    let (modulus, idx) = (config.modulus, config.char_index);
    out.push(job("bessel.product_l", String::new(), move || {
        let nu = character(modulus, idx)?;
        let r = product_l_bessel_check(Complex64::new(2.0, 0.0), &nu, 8000)?;
        let terms = r.terms.iter().map(|t| t.relative_error).fold(0.0, f64::max);
        Ok(vec![
            CheckRow::check("bessel.product_l", format!("nu={} s=2 N=8000", nu.descriptor()), r.residual, 1e-6),
            CheckRow::check("bessel.term_quadrature", format!("nu={} s=2 n<=10", nu.descriptor()), terms, 1e-8),
        ])
    }));
}

fn maass_checks(config: &RunConfig, out: &mut Vec<(String, String, Check)>) {
    let (modulus, idx) = (config.modulus, config.char_index);
    out.push(job("maass.waveform", String::new(), move || {
        let nu = character(modulus, idx)?;
        let e = MaassExpansion::new(1.0, &nu, 50, true)?;
        let d = nu.descriptor();
        let period = [0.0, 0.37, 1.9].iter().map(|&x| (e.evaluate(x) - e.evaluate(x + modulus as f64)).norm()).fold(0.0, f64::max);
        let fourier = (1..=10).map(|n| (e.fourier_coefficient(n, 128) - e.terms[n as usize]).norm()).fold(0.0, f64::max);
        let parity = if nu.parity_epsilon() == 0 { "even" } else { "odd" };
        Ok(vec![
            CheckRow::check("maass.tail", format!("nu={d} ({parity}) y=1 N=50"), e.tail_bound, 1e-12),
            CheckRow::check("maass.periodic", format!("nu={d} y=1"), period, 1e-12),
            CheckRow::check("maass.fourier", format!("nu={d} y=1 n<=10"), fourier, 1e-10),
        ])
    }));
    out.push(job("maass.norm_probe", String::new(), move || {
        let mut rows = Vec::new();
        for (m, n) in [(1u64, 1u64), (1, 2), (2, 2)] {
            let probe = maass_norm_divergence_probe(m, n, modulus, &halving_cutoffs(2, 12))?;
            for r in &probe.rows {
                if let Some(v) = r.normalized_increment {
                    rows.push(CheckRow::exploratory(
                        "maass.norm_probe",
                        format!("m={m} n={n} eps=2^{:.0} increment={:.6}", r.epsilon.log2(), r.increment.unwrap_or(0.0)),
                        v,
                    ));
                }
            }
        }
        Ok(rows)
    }));
}

fn time_average_checks(config: &RunConfig, out: &mut Vec<(String, String, Check)>) {
    let modulus = config.modulus;
    out.push(job("time_average", String::new(), move || {
        let chars = nonprincipal(modulus);
        let mut rows = Vec::new();
        for f in &chars {
            for g in &chars {
                let r = time_average_inner_product(f, g, 50.0, 4000, 60)?;
                let params = format!("f={} g={} T=50 N=60", f.descriptor(), g.descriptor());
                rows.push(CheckRow::check("time_average.odd_part", params.clone(), r.odd_part_residual, 1e-10));
                rows.push(CheckRow::exploratory("time_average.value", params, r.value.re));
            }
        }
        if chars.len() >= 2 {
            let (f, g) = (&chars[0], &chars[1]);
            for r in time_average_trend(f, g, 25.0, 3, 40.0, 60)? {
                rows.push(CheckRow::exploratory(
                    "time_average.trend",
                    format!("f={} g={} T={}", f.descriptor(), g.descriptor(), r.t_max),
                    r.value.re,
                ));
            }
        }
        Ok(rows)
    }));
}

/// Runs the named suite; checks execute in parallel and the rows come
/// back sorted by name.
pub fn run_suite(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let mut jobs = Vec::new();
    let all = config.suite == "all";
    let want = |s: &str| all || config.suite == s;
    if want("wavelets") {
        wavelet_checks(config, &mut jobs);
    }
    if want("mellin") {
        mellin_checks(config, &mut jobs);
    }
    if want("hecke") {
        hecke_checks(config, &mut jobs);
    }
    if want("parton") {
        parton_checks(config, &mut jobs);
    }
    if want("chebyshev") {
        chebyshev_checks(config, &mut jobs);
    }
    if want("theta") {
        theta_checks(config, &mut jobs);
    }
    if want("bessel") {
        bessel_checks(config, &mut jobs);
    }
    if want("maass") {
        maass_checks(config, &mut jobs);
    }
    if want("time-average") {
        time_average_checks(config, &mut jobs);
    }
    let rows: Vec<CheckRow> = jobs
        .par_iter()
        .flat_map_iter(|(name, params, f)| match f() {
            Ok(rows) => rows,
            Err(e) => vec![CheckRow::error(name.clone(), params.clone(), &e)],
        })
        .collect();
    Ok(Report::new(config.suite.clone(), rows))
}

pub fn is_usage_error(e: &Error) -> bool {
    matches!(e, Error::Config(_) | Error::NotPrime(_) | Error::InvalidPrecision)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_config_error() {
        let c = RunConfig { suite: "bogus".into(), ..RunConfig::default() };
        let e = run_suite(&c).unwrap_err();
        assert!(is_usage_error(&e));
    }

    #[test]
    fn hecke_tau_prime_two() {
        let c = RunConfig { suite: "hecke".into(), primes: vec![2], ..RunConfig::default() };
        let r = run_suite(&c).unwrap();
        assert_eq!(r.failures(), 0, "{:#?}", r.rows);
        assert!(r.rows.iter().any(|row| row.name == "hecke.eigen_i" && row.residual < 1e-10));
    }

    #[test]
    fn deterministic_rows() {
        let c = RunConfig { suite: "chebyshev".into(), ..RunConfig::default() };
        let a = run_suite(&c).unwrap().render(super::super::config::Format::Csv).unwrap();
        let b = run_suite(&c).unwrap().render(super::super::config::Format::Csv).unwrap();
        assert_eq!(a, b);
    }
}
