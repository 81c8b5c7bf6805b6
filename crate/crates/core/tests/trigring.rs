use std::f64::consts::{PI, TAU};

use diskcp::trigring::{eval_f64, eval_num, PiPoly, Rational, TrigPoly};
use proptest::prelude::*;

mod common;
use common::trigpoly;

fn close(a: f64, b: f64, scale: f64) -> bool {
    (a - b).abs() <= 1e-9 * scale.max(1.0)
}

fn magnitude(f: &TrigPoly, theta: f64) -> f64 {
    f.terms()
        .map(|(k, c)| (c.eval_f64(PI) * theta.powi(k.theta_pow as i32)).abs())
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in trigpoly(), b in trigpoly(), c in trigpoly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &TrigPoly::one(), a.clone());
    }

    #[test]
    fn product_matches_pointwise_product(a in trigpoly(), b in trigpoly(), theta in 0.1f64..6.2) {
        let p = eval_f64(&(&a * &b), theta, PI);
        let q = eval_f64(&a, theta, PI) * eval_f64(&b, theta, PI);
        prop_assert!(close(p, q, magnitude(&a, theta) * magnitude(&b, theta)));
    }

    #[test]
    fn derivative_undoes_integration(a in trigpoly()) {
        prop_assert_eq!(a.integrate0().derivative(), a.clone());
        let at_zero = eval_f64(&a.integrate0(), 0.0, PI);
        prop_assert!(at_zero.abs() < 1e-12);
    }

    #[test]
    fn convolution_is_symmetric_and_bilinear(a in trigpoly(), b in trigpoly(), c in trigpoly()) {
        prop_assert_eq!(a.convolve(&b), b.convolve(&a));
        prop_assert_eq!(a.convolve(&(&b + &c)), &a.convolve(&b) + &a.convolve(&c));
        let two = Rational::from_integer(2.into());
        prop_assert_eq!(a.scale_rational(&two).convolve(&b), a.convolve(&b).scale_rational(&two));
    }

    #[test]
    fn reflection_matches_evaluation(a in trigpoly(), theta in 0.0f64..TAU) {
        let r = a.reflect();
        let got = eval_num(&r, theta);
        let want = eval_num(&a, TAU - theta);
        prop_assert!(close(got, want, magnitude(&a, TAU)), "{} vs {}", got, want);
        prop_assert_eq!(r.reflect(), a);
    }

    #[test]
    fn json_round_trip(a in trigpoly()) {
        prop_assert_eq!(TrigPoly::from_json(&a.to_json()).unwrap(), a);
    }
}

#[test]
fn exact_integral_at_two_pi() {
    // ∫₀^{2π} sin²(φ/2) dφ = π
    let f = TrigPoly::sin_half(1).pow(2);
    assert_eq!(f.integrate0().eval_at_pi_multiple(2), PiPoly::pi());
}

#[test]
fn singular_integration_matches_quadrature() {
    use diskcp::quadrature::integrate;
    use diskcp::recursion::LTable;
    use diskcp::trigring::integrate_singular;

    let table = LTable::shared();
    for n in 2..=4usize {
        let l: Vec<_> = (0..n).map(|k| table.get(k).unwrap()).collect();
        let j = (0..n).fold(TrigPoly::zero(), |acc, k| &acc + &l[k].convolve(&l[n - 1 - k]));
        let p = 2 * n as i32 + 1;
        let g = integrate_singular(&j, p as u32).unwrap();
        for theta in [0.5, PI, 5.5] {
            let inner = integrate(
                |phi| eval_num(&j, phi) / (phi / 2.0).sin().powi(p),
                0.0,
                theta,
                0.0,
                1e-12,
            )
            .unwrap();
            let want = (theta / 2.0).sin().powi(p) * inner.value;
            let got = eval_num(&g, theta);
            assert!((got - want).abs() <= 1e-9 * want.abs().max(1e-3), "n = {n}, θ = {theta}: {got} vs {want}");
        }
    }
}
