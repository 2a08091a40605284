use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use rayon::prelude::*;

use parton::analytic::{
    dirichlet_l, gauss_product_residual, halving_cutoffs, l_from_theta_mellin, maass_norm_divergence_probe, product_l,
    product_l_bessel_check, theta_s_transform_residual, time_average_inner_product, LMethod, ProductMethod,
};
use parton::arith::primes_below;
use parton::coeffs::{chebyshev_product_coeffs, convolution_coeffs, ramanujan_tau_table, CoefficientStream};
use parton::dirichlet::{characters_mod, DirichletCharacter};
use parton::padic::PadicNumber;
use parton::parton::{
    decompose, decompose_exact, hecke_apply, overlap_dichotomy, parseval_check, reconstruct, reconstruct_exact,
    uv_on_qseries, HeckeVariant, OverlapClass, QOp, QSeries,
};
use parton::pmellin::{cp_unitarity_sum, inverse_mellin, mellin_transform, wavelet_mellin_closed_form, MellinVariant};
use parton::wavelets::{gram_deviation, kozyrev_wavelet, modified_wavelet, vladimirov_eigencheck, wavelet_window, WaveletIndex};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn nonprincipal(n: u64) -> Vec<DirichletCharacter> {
    characters_mod(n).into_iter().filter(|c| !c.is_principal()).collect()
}

fn largest_exponent(p: u64, n_max: u64) -> usize {
    let (mut e, mut q) = (0, p);
    while q <= n_max {
        e += 1;
        q *= p;
    }
    e
}

fn orthonormality() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for p in [2u64, 3, 5, 7] {
        let w = wavelet_window(p, -3..=3, 2);
        count += w.len();
        worst = worst.max(gram_deviation(p, &w, false).unwrap());
        worst = worst.max(gram_deviation(p, &w, true).unwrap());
    }
    outcome(worst < 1e-12, format!("max |G - I| = {worst:.2e} over {count} wavelets per variant"))
}

fn vladimirov() -> Outcome {
    let mut worst: f64 = 0.0;
    for p in [2u64, 3, 5] {
        for n in -2..=2 {
            for alpha in [0.5, 1.0, 2.0] {
                worst = worst.max(vladimirov_eigencheck(p, n, alpha).unwrap());
            }
        }
    }
    outcome(worst < 1e-8, format!("max residual {worst:.2e}"))
}

fn mellin() -> Outcome {
    let mut closed: f64 = 0.0;
    let samples = [Complex64::new(0.8, -0.3), Complex64::new(2.0, 0.0), Complex64::new(0.0, 1.1), Complex64::new(1.5, 4.0)];
    for p in [2u64, 3, 5, 7] {
        for n in -2..=2 {
            let psi = kozyrev_wavelet(p, &WaveletIndex::mother(n)).unwrap();
            let mpsi = modified_wavelet(p, &WaveletIndex::mother(n)).unwrap();
            for ell in 0..p as u32 {
                for &s in &samples {
                    if s.re > 0.0 {
                        let a = mellin_transform(&psi, s, ell).unwrap();
                        let b = wavelet_mellin_closed_form(p, n, s, ell, MellinVariant::Kozyrev).unwrap();
                        closed = closed.max((a - b).norm() / b.norm().max(1.0));
                    }
                    let d = mellin_transform(&mpsi, s, ell).unwrap();
                    let e = wavelet_mellin_closed_form(p, n, s, ell, MellinVariant::Modified).unwrap();
                    closed = closed.max((d - e).norm() / e.norm().max(1.0));
                }
            }
        }
    }
    let mut inverse: f64 = 0.0;
    for (p, n) in [(2u64, 1), (3, 0)] {
        let psi = kozyrev_wavelet(p, &WaveletIndex::mother(n)).unwrap();
        let g = |ell: u32, s: Complex64| wavelet_mellin_closed_form(p, n, s, ell, MellinVariant::Kozyrev);
        for (a, b) in [(1, 1), (1, 2), (2, 1), (5, 1), (7, 3)] {
            let x = PadicNumber::from_fraction(a, b, p, 32).unwrap();
            let v = inverse_mellin(g, &x, 1.0, 256).unwrap().value;
            inverse = inverse.max((v - psi.evaluate(&x).unwrap()).norm());
        }
    }
    outcome(closed < 1e-12 && inverse < 1e-8, format!("closed form {closed:.2e}, inverse round trip {inverse:.2e}"))
}

fn unitarity() -> Outcome {
    let mut worst: f64 = 0.0;
    for p in primes_below(14) {
        for i in 0..20 {
            let t = -5.0 + 0.55 * i as f64;
            worst = worst.max((cp_unitarity_sum(p, Complex64::new(0.0, t)).unwrap() - 1.0).abs());
        }
    }
    outcome(worst < 1e-12, format!("max |sum - 1| = {worst:.2e}"))
}

fn tau_oracle() -> Outcome {
    let n_max = 10_000u64;
    let table = ramanujan_tau_table(n_max as usize);
    let stream = CoefficientStream::tau(n_max as usize);
    let mismatches = (1..=n_max)
        .into_par_iter()
        .filter(|&n| stream.coefficient_exact(n).unwrap() != BigInt::from(table[n as usize]))
        .count();
    let deligne = primes_below(100)
        .into_iter()
        .all(|p| table[p as usize] * table[p as usize] <= 4 * (p as i128).pow(11));
    outcome(mismatches == 0 && deligne, format!("{mismatches} mismatches for n <= {n_max}, Deligne bound holds: {deligne}"))
}

fn reconstruction() -> Outcome {
    let n_max = 10_000u64;
    let stream = CoefficientStream::tau(n_max as usize);
    let table = ramanujan_tau_table(n_max as usize);
    let states: BTreeMap<u64, _> = primes_below(n_max as usize + 1)
        .into_iter()
        .map(|p| (p, decompose_exact(&stream, p, largest_exponent(p, n_max)).unwrap()))
        .collect();
    let mismatches = (1..=n_max)
        .into_par_iter()
        .filter(|&n| reconstruct_exact(&states, n).unwrap() != BigInt::from(table[n as usize]))
        .count();
    outcome(mismatches == 0, format!("{mismatches} mismatches for n <= {n_max}"))
}

fn hecke() -> Outcome {
    let mut streams = vec![("tau".to_string(), CoefficientStream::tau(30_000))];
    for n in [5u64, 7] {
        for nu in nonprincipal(n) {
            streams.push((nu.descriptor(), CoefficientStream::product_dirichlet(&nu, 30_000).unwrap()));
        }
    }
    let primes = primes_below(14);
    let mut eigen: f64 = 0.0;
    let mut oracle: f64 = 0.0;
    for (_, stream) in &streams {
        for &p in &primes {
            let st = decompose(stream, p, 12, false).unwrap();
            let h = hecke_apply(&st, HeckeVariant::I).unwrap();
            eigen = eigen.max(h.residual);
            let st2 = decompose(stream, p, 12, true).unwrap();
            eigen = eigen.max(hecke_apply(&st2, HeckeVariant::II).unwrap().residual);

            // q-series rebuilt from local states, then T(p) at coefficient level
            let top = 2000 * p;
            let states: BTreeMap<u64, _> = primes_below(top as usize + 1)
                .into_iter()
                .map(|q| (q, decompose(stream, q, largest_exponent(q, top), false).unwrap()))
                .collect();
            let coeffs = (0..=top).map(|n| if n == 0 { c(0.0) } else { reconstruct(&states, n).unwrap() }).collect();
            let f = QSeries { coeffs };
            let direct = QSeries::from_stream(stream, top as usize).unwrap();
            let g = uv_on_qseries(&f, p as usize, QOp::T, stream.weight(), stream.chi(p));
            for n in 1..=2000 {
                let want = h.eigenvalue * f.coeffs[n];
                let scale = want.norm().max(direct.coeffs[n].norm()).max(1.0);
                oracle = oracle.max((g.coeffs[n] - want).norm() / scale);
                oracle = oracle.max((f.coeffs[n] - direct.coeffs[n]).norm() / scale);
            }
        }
    }
    outcome(
        eigen < 1e-10 && oracle < 1e-10,
        format!("{} streams, p <= 13: eigen residual {eigen:.2e}, q-series oracle {oracle:.2e}", streams.len()),
    )
}

fn parseval() -> Outcome {
    let tau = CoefficientStream::tau(100);
    let mut worst: f64 = 0.0;
    for rescaled in [false, true] {
        let f = decompose(&tau, 2, 10, rescaled).unwrap();
        let r = parseval_check(&f, &f, 64).unwrap();
        worst = worst.max(r.residual / r.rhs.norm().max(1.0));
    }
    let chars = nonprincipal(5);
    for a in &chars {
        for b in &chars {
            let sa = CoefficientStream::product_dirichlet(a, 100).unwrap();
            let sb = CoefficientStream::product_dirichlet(b, 100).unwrap();
            // weight 1: only the rescaled pairing is finite
            let f = decompose(&sa, 2, 40, true).unwrap();
            let g = decompose(&sb, 2, 40, true).unwrap();
            let r = parseval_check(&f, &g, 64).unwrap();
            worst = worst.max(r.residual / r.rhs.norm().max(1.0));
        }
    }
    outcome(worst < 1e-8, format!("max residual {worst:.2e} (tau M=10; mod 5 pairs M=40)"))
}

fn chebyshev() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in [5u64, 7] {
        for nu in nonprincipal(n) {
            let a = convolution_coeffs(&nu, 5000).unwrap();
            let b = chebyshev_product_coeffs(&nu, 5000).unwrap();
            worst = a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(worst, f64::max);
        }
    }
    outcome(worst < 1e-10, format!("max difference {worst:.2e} for n <= 5000"))
}

fn theta() -> Outcome {
    let mut s_worst: f64 = 0.0;
    let mut g_worst: f64 = 0.0;
    let mut parities = [false, false];
    for n in [5u64, 7] {
        for nu in characters_mod(n).into_iter().filter(|c| c.is_primitive()) {
            parities[nu.parity_epsilon() as usize] = true;
            for y in [0.5, 1.0, 2.0] {
                s_worst = s_worst.max(theta_s_transform_residual(y, &nu).unwrap());
            }
            g_worst = g_worst.max(gauss_product_residual(&nu));
        }
    }
    let both = parities[0] && parities[1];
    outcome(
        s_worst < 1e-10 && g_worst < 1e-12 && both,
        format!("S-transform {s_worst:.2e}, Gauss product {g_worst:.2e}, both parities: {both}"),
    )
}

fn cross_representation() -> Outcome {
    let mut triple: f64 = 0.0;
    let mut mellin: f64 = 0.0;
    for nu in nonprincipal(5) {
        for s in [2.0, 2.5, 3.0] {
            let a = product_l(c(s), &nu, &ProductMethod::direct()).unwrap().value;
            let b = product_l(c(s), &nu, &ProductMethod::convolution()).unwrap().value;
            let d = product_l(c(s), &nu, &ProductMethod::chebyshev()).unwrap().value;
            triple = triple.max((a - b).norm()).max((a - d).norm()).max((b - d).norm());
            let l = dirichlet_l(c(s), &nu, LMethod::DEFAULT_SERIES).unwrap().value;
            mellin = mellin.max((l_from_theta_mellin(c(s), &nu).unwrap() - l).norm());
        }
    }
    let bessel = product_l_bessel_check(c(2.0), &nonprincipal(5)[0], 8000).unwrap();
    let terms = bessel.terms.iter().map(|t| t.relative_error).fold(0.0, f64::max);
    outcome(
        triple < 1e-8 && mellin < 1e-8 && bessel.residual < 1e-6 && terms < 1e-8,
        format!(
            "product routes {triple:.2e}, theta-Mellin {mellin:.2e}, K0 series {:.2e}, K0 terms {terms:.2e}",
            bessel.residual
        ),
    )
}

fn replacements() -> Outcome {
    // off-diagonal pairs stay under the computed bound; diagonal sums keep growing
    let windows: Vec<usize> = (6..=12).map(|k| 1usize << k).collect();
    let mut bounded_ok = true;
    let mut bounded_pairs = 0;
    let mut diagonal_ok = true;
    for n in [5u64, 7] {
        let chars = nonprincipal(n);
        for p in [2u64, 3, 11, 13] {
            for a in &chars {
                for b in &chars {
                    let d = overlap_dichotomy(a.arg(p as i64).unwrap(), b.arg(p as i64).unwrap(), &windows);
                    match d.class {
                        OverlapClass::Bounded { bound } => {
                            bounded_pairs += 1;
                            bounded_ok &= d.partial_sums.iter().all(|(_, s)| s.abs() <= bound);
                        }
                        OverlapClass::Diagonal => {
                            let last = d.partial_sums.len() - 1;
                            let ratio = d.partial_sums[last].1 / d.partial_sums[last - 1].1;
                            diagonal_ok &= ratio >= 1.5;
                        }
                        OverlapClass::Unclassified => {}
                    }
                }
            }
        }
    }
    let probe = maass_norm_divergence_probe(1, 1, 5, &halving_cutoffs(2, 14)).unwrap();
    let incs: Vec<f64> = probe.rows.iter().filter_map(|r| r.increment).collect();
    let growing = incs.iter().all(|&d| d > 0.0) && incs.windows(2).all(|w| w[1] > w[0]);
    let normalized = probe.rows.last().unwrap().normalized_increment.unwrap();
    let mut odd: f64 = 0.0;
    for n in [5u64, 7] {
        let chars = nonprincipal(n);
        for f in &chars {
            for g in &chars {
                odd = odd.max(time_average_inner_product(f, g, 50.0, 4000, 60).unwrap().odd_part_residual);
            }
        }
    }
    outcome(
        bounded_ok && bounded_pairs > 0 && diagonal_ok && growing && odd < 1e-10,
        format!(
            "{bounded_pairs} bounded pairs within bound: {bounded_ok}, diagonal growth: {diagonal_ok}, \
             norm probe increments growing: {growing} (last / (ln2 ln^2 eps) = {normalized:.3}), Im-odd {odd:.2e}"
        ),
    )
}

fn main() {
    let criteria: Vec<(u32, &str, Option<Duration>, fn() -> Outcome)> = vec![
        (1, "wavelet orthonormality", Some(Duration::from_secs(10)), orthonormality),
        (2, "Vladimirov eigenrelation", Some(Duration::from_secs(10)), vladimirov),
        (3, "Mellin closed form and inverse", Some(Duration::from_secs(20)), mellin),
        (4, "unitarity sum", None, unitarity),
        (5, "tau oracle vs recursion", Some(Duration::from_secs(30)), tau_oracle),
        (6, "parton reconstruction", None, reconstruction),
        (7, "Hecke eigenrelation", None, hecke),
        (8, "Parseval identities", None, parseval),
        (9, "Chebyshev convolution identity", None, chebyshev),
        (10, "theta S-transform", None, theta),
        (11, "cross-representation L-checks", Some(Duration::from_secs(60)), cross_representation),
        (12, "divergence replacements", None, replacements),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = limit.map_or(true, |l| elapsed <= l);
        let pass = o.pass && in_time;
        if !pass {
            failed += 1;
        }
        let budget = limit.map(|l| format!(" / {}s", l.as_secs())).unwrap_or_default();
        println!(
            "criterion {id:>2} {}: {name}: {} [{:.2}s{budget}]",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
