use std::collections::BTreeMap;

use num_complex::Complex64;

use parton::analytic::{dirichlet_l, product_l, LMethod, MaassExpansion, ProductMethod};
use parton::coeffs::{convolution_coeffs, CoefficientStream};
use parton::dirichlet::{character, characters_mod};
use parton::parton::{decompose, hecke_apply, parseval_check, parton_mellin, reconstruct, HeckeVariant};
use parton::pmellin::mellin_transform;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn tau_states_reassemble_and_transform() {
    let tau = CoefficientStream::tau(100);
    let mut states = BTreeMap::new();
    for p in [2u64, 3, 5, 7] {
        states.insert(p, decompose(&tau, p, 8, false).unwrap());
    }
    for n in 1..=2000u64 {
        let fits = parton::arith::factorize(n).iter().all(|&(p, e)| states.contains_key(&p) && e <= 8);
        if fits {
            let want = tau.coefficient(n).unwrap();
            let got = reconstruct(&states, n).unwrap();
            assert!((got - want).norm() <= 1e-12 * want.norm().max(1.0), "n={n}");
        }
    }
    // the state as a Schwartz function has the same Mellin transform as its coefficient sum
    let st = &states[&3];
    let f = st.to_schwartz().unwrap();
    for ell in 0..3 {
        for s in [c(6.5, 0.0), c(7.0, 1.3), c(9.0, -4.0)] {
            let a = mellin_transform(&f, s, ell).unwrap();
            let b = parton_mellin(st, s, ell).unwrap();
            assert!((a - b).norm() <= 1e-11 * b.norm().max(1.0), "ell={ell} s={s}");
        }
    }
}

#[test]
fn dirichlet_stream_is_the_divisor_convolution() {
    for nu in characters_mod(7).into_iter().filter(|n| !n.is_principal()) {
        let stream = CoefficientStream::product_dirichlet(&nu, 3000).unwrap();
        let a = convolution_coeffs(&nu, 3000).unwrap();
        for n in 1..=3000u64 {
            let b = stream.coefficient(n).unwrap();
            assert!((a[n as usize] - b).norm() < 1e-9, "{} n={n}", nu.descriptor());
        }
        for p in [2u64, 3, 5, 13] {
            let st = decompose(&stream, p, 10, true).unwrap();
            assert!(hecke_apply(&st, HeckeVariant::II).unwrap().residual < 1e-12);
            let r = parseval_check(&st, &st, 64).unwrap();
            assert!(r.residual < 1e-9 * r.rhs.norm().max(1.0), "p={p} {r:?}");
        }
    }
}

#[test]
fn product_l_factors() {
    let nu = character(5, 1).unwrap();
    for s in [2.0, 3.0] {
        let z = c(s, 0.0);
        let a = dirichlet_l(z, &nu, LMethod::DirectSeries { terms: 200_000 }).unwrap().value;
        let b = dirichlet_l(z, &nu.conjugate(), LMethod::DirectSeries { terms: 200_000 }).unwrap().value;
        let p = product_l(z, &nu, &ProductMethod::Convolution { terms: 200_000 }).unwrap().value;
        assert!((a * b - p).norm() < 1e-9, "s={s}");
    }
}

#[test]
fn maass_fourier_modes_carry_the_convolution() {
    let nu = character(5, 2).unwrap();
    let e = MaassExpansion::new(0.8, &nu, 40, false).unwrap();
    let a = convolution_coeffs(&nu, 40).unwrap();
    for n in 1..=8usize {
        let got = e.fourier_coefficient(n as i64, 512);
        assert!((got - e.terms[n]).norm() < 1e-12);
        assert_eq!(e.terms[n].norm() == 0.0, a[n].norm() == 0.0);
    }
}
