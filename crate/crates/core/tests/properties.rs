use num_complex::Complex64;
use num_traits::One;
use proptest::prelude::*;

use parton::coeffs::{chebyshev_u, chebyshev_u_trig, CoefficientStream};
use parton::dirichlet::characters_mod;
use parton::padic::{Ball, PadicNumber, PrincipalPart};
use parton::pmellin::mellin_transform;
use parton::wavelets::{kozyrev_wavelet, Measure, SchwartzFunction, WaveletIndex};

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11])
}

fn fraction() -> impl Strategy<Value = (i64, i64)> {
    (-5000i64..5000, 1i64..500)
}

fn padic(p: u64, (n, d): (i64, i64)) -> PadicNumber {
    PadicNumber::from_fraction(n, d, p, 40).unwrap()
}

proptest! {
    #[test]
    fn ultrametric(p in prime(), a in fraction(), b in fraction()) {
        let (x, y) = (padic(p, a), padic(p, b));
        match x.add(&y) {
            Ok(s) => prop_assert!(s.norm() <= x.norm().max(y.norm())),
            Err(parton::Error::Cancellation) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn norm_is_multiplicative(p in prime(), a in fraction(), b in fraction()) {
        prop_assume!(a.0 != 0 && b.0 != 0);
        let (x, y) = (padic(p, a), padic(p, b));
        prop_assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
    }

    #[test]
    fn fractional_part_is_additive_mod_one(p in prime(), a in fraction(), b in fraction()) {
        let (x, y) = (padic(p, a), padic(p, b));
        let s = match x.add(&y) {
            Ok(s) => s,
            Err(_) => return Ok(()),
        };
        let lhs = s.fractional_part().unwrap();
        let mut rhs = x.fractional_part().unwrap() + y.fractional_part().unwrap();
        if rhs >= num_rational::BigRational::one() {
            rhs -= num_rational::BigRational::one();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_round_trip(p in prime(), a in fraction()) {
        let x = padic(p, a);
        let back = PadicNumber::parse(&x.format(), p, 40).unwrap();
        prop_assert_eq!(back.digits(), x.digits());
        prop_assert_eq!(back.valuation(), x.valuation());
    }

    #[test]
    fn inverse_times_self_is_one(p in prime(), a in fraction()) {
        prop_assume!(a.0 != 0);
        let x = padic(p, a);
        let one = x.mul(&x.inv().unwrap()).unwrap();
        prop_assert_eq!(one.valuation(), Some(0));
        prop_assert!(one.sub(&PadicNumber::from_i64(1, p, 40).unwrap()).map(|d| d.is_zero()).unwrap_or(true));
    }

    #[test]
    fn character_is_multiplicative(n in prop::sample::select(vec![5u64, 7, 8, 9, 12, 15, 16, 21]), a in 0i64..500, b in 0i64..500) {
        for nu in characters_mod(n) {
            let lhs = nu.value(a * b);
            let rhs = nu.value(a) * nu.value(b);
            prop_assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn stream_is_multiplicative(m in 1u64..300, n in 1u64..300) {
        prop_assume!(num_integer::gcd(m, n) == 1);
        let tau = CoefficientStream::tau(1000);
        prop_assert_eq!(tau.coefficient_exact(m * n).unwrap(), tau.coefficient_exact(m).unwrap() * tau.coefficient_exact(n).unwrap());
        for nu in characters_mod(7).into_iter().skip(1) {
            let s = CoefficientStream::product_dirichlet(&nu, 1000).unwrap();
            let lhs = s.coefficient(m * n).unwrap();
            let rhs = s.coefficient(m).unwrap() * s.coefficient(n).unwrap();
            prop_assert!((lhs - rhs).norm() < 1e-9 * rhs.norm().max(1.0));
        }
    }

    #[test]
    fn chebyshev_recursion_matches_trig(n in 0u32..200, theta in 0.01f64..3.13) {
        let a = chebyshev_u(n, theta.cos());
        let b = chebyshev_u_trig(n, theta);
        prop_assert!((a - b).abs() < 1e-10 * (n as f64 + 1.0));
    }

    #[test]
    fn refinement_preserves_integrals(p in prime(), n in -2i32..3, re in -2.0f64..2.0, s in 0.2f64..3.0) {
        let f = kozyrev_wavelet(p, &WaveletIndex::mother(n)).unwrap()
            .add(&SchwartzFunction::radial(p, n + 1, Complex64::new(re, 0.5), 0.0)).unwrap();
        let g = f.refine();
        for ell in 0..p as u32 {
            let a = f.integrate_weighted(Measure::Multiplicative, Complex64::new(s, 0.0), Some(ell)).unwrap();
            let b = g.integrate_weighted(Measure::Multiplicative, Complex64::new(s, 0.0), Some(ell)).unwrap();
            prop_assert!((a - b).norm() < 1e-14 * a.norm().max(1.0));
        }
        let a = f.integrate(Measure::Additive, 0.0).unwrap();
        let b = g.integrate(Measure::Additive, 0.0).unwrap();
        prop_assert!((a - b).norm() < 1e-14 * a.norm().max(1.0));
    }

    #[test]
    fn dilation_scaling_law(p in prime(), n in -2i32..3, k in -2i32..3, s in 0.3f64..2.0, t in -3.0f64..3.0) {
        let f = kozyrev_wavelet(p, &WaveletIndex::mother(n)).unwrap();
        let g = f.dilate(k);
        let s = Complex64::new(s, t);
        for ell in 0..p as u32 {
            let a = mellin_transform(&g, s, ell).unwrap();
            let b = mellin_transform(&f, s, ell).unwrap() * ((s * k as f64) * (p as f64).ln()).exp();
            prop_assert!((a - b).norm() < 1e-12 * b.norm().max(1.0));
        }
        let a = g.integrate(Measure::Additive, 0.0).unwrap();
        let b = f.integrate(Measure::Additive, 0.0).unwrap() * (p as f64).powi(k);
        prop_assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn ball_children_partition(p in prime(), r in -3i32..4, k in 0u128..50) {
        let key = PrincipalPart::from_parts(k % (p as u128).pow(2), 2, p);
        let b = Ball::new(p, r, key);
        let total: f64 = b.children().map(|c| c.measure()).sum();
        prop_assert!((total - b.measure()).abs() < 1e-12 * b.measure());
        prop_assert!(b.children().all(|c| b.contains_ball(&c)));
        prop_assert_eq!(b.children().count() as u64, p);
    }
}
