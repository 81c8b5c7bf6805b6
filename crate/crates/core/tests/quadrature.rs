use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

use diskcp::quadrature::{
    adaptive_integrate, nodes, triangle_factor, triangle_factor_by_difference, LnmTable, BASE_NODES,
};
use diskcp::recursion::{l1, LTable};
use diskcp::trigring::{eval_num, pipoly_to_f64};
use proptest::prelude::*;

fn table() -> &'static LnmTable {
    static T: OnceLock<LnmTable> = OnceLock::new();
    T.get_or_init(LnmTable::new)
}

#[test]
fn integrator_matches_exact_integrals() {
    let v = adaptive_integrate(|x| (x / 2.0).sin().powi(2), 0.0, TAU, 1e-12).unwrap();
    assert!((v - PI).abs() < 1e-12);
    let f = l1();
    let exact = pipoly_to_f64(&f.integrate0().eval_at_pi_multiple(2));
    let v = adaptive_integrate(|x| eval_num(&f, x), 0.0, TAU, 1e-12).unwrap();
    assert!((v - exact).abs() < 1e-11, "{v} vs {exact}");
}

#[test]
fn diagonal_matches_exact_functions() {
    let exact = LTable::shared().get(3).unwrap();
    for i in 0..32 {
        let theta = 0.05 + (TAU - 0.1) * i as f64 / 31.0;
        let got = table().eval_l(3, 3, theta).unwrap();
        assert!((got - eval_num(&exact, theta)).abs() <= 1e-8, "θ = {theta}");
    }
}

#[test]
fn impossible_counts_are_exact_zeros() {
    assert!(table().b_proxy(2, 3).unwrap().is_zero());
    assert!(table().b_proxy(4, 0).unwrap().is_zero());
    assert_eq!(table().eval_b(1, 1, 2.5).unwrap(), 1.0);
}

#[test]
fn single_vertex_cases_at_half_turn() {
    // closed forms known at θ = π: L_{3,1}(π) = π/2, L_{4,1}(π) = 32/45
    assert!((table().eval_l(3, 1, PI).unwrap() - PI / 2.0).abs() <= 1e-7);
    assert!((table().eval_l(4, 1, PI).unwrap() - 32.0 / 45.0).abs() <= 1e-7);
}

#[test]
fn off_diagonal_values_are_probabilities() {
    for n in 2..=5 {
        for m in 1..n {
            let proxy = table().b_proxy(n, m).unwrap();
            for i in 1..64 {
                let b = proxy.eval(TAU * i as f64 / 64.0);
                assert!((-1e-9..=1.0 + 1e-9).contains(&b), "B_{n},{m} = {b}");
            }
        }
    }
}

#[test]
fn disk_hull_size_probabilities() {
    let p2 = PI * PI;
    let p4 = p2 * p2;
    let want = [
        (4, 3, 35.0 / (12.0 * p2)),
        (5, 4, 65.0 / (12.0 * p2)),
        (5, 3, 15.0 / (16.0 * p2)),
        (6, 5, (3120.0 * p2 - 17017.0) / (288.0 * p4)),
        (6, 4, (7200.0 * p2 + 57057.0) / (3840.0 * p4)),
        (6, 3, 1001.0 / (320.0 * p4)),
    ];
    for (n, m, w) in want {
        let got = table().p_disk_nm(n, m).unwrap();
        assert!((got - w).abs() <= 1e-7, "P^{n},{m} = {got}, want {w}");
    }
}

#[test]
fn disk_partition_of_unity() {
    for n in [4, 5, 6] {
        let total: f64 = (3..=n).map(|m| table().p_disk_nm(n, m).unwrap()).sum();
        assert!((total - 1.0).abs() <= 1e-6, "n = {n}: {total}");
        assert_eq!(table().p_disk_nm(n, 2).unwrap(), 0.0);
    }
}

#[test]
fn diagonal_coherence() {
    for n in [4, 5, 6] {
        let exact = LTable::shared().p_disk_exact(n).unwrap().to_f64();
        assert!((table().p_disk_nm(n, n).unwrap() - exact).abs() <= 1e-6);
    }
}

#[test]
fn segment_partition_of_unity() {
    let b2 = table().eval_b(2, 2, PI).unwrap() + table().eval_b(2, 1, PI).unwrap();
    assert!((b2 - 1.0).abs() <= 1e-7);
    let b33 = table().eval_b(3, 3, PI).unwrap();
    assert!((b33 - (1.0 - 26.0 / (3.0 * PI * PI))).abs() <= 1e-9);
    for n in 2..=5 {
        for i in 0..16 {
            let theta = TAU * (i as f64 + 0.5) / 16.0;
            let total: f64 = (1..=n).map(|m| table().eval_b(n, m, theta).unwrap()).sum();
            assert!((total - 1.0).abs() <= 1e-6, "n = {n}, θ = {theta}: {total}");
        }
    }
}

#[test]
fn interpolants_reproduce_their_samples() {
    let exact = LTable::shared().b_evaluator(4).unwrap();
    let proxy = table().b_proxy(4, 4).unwrap();
    for x in nodes(BASE_NODES) {
        assert!((proxy.eval(x) - exact.eval(x)).abs() < 1e-13);
    }
    assert!(proxy.error_estimate() < 1e-9);
}

proptest! {
    #[test]
    fn triangle_factor_forms_agree(phi in 0.0f64..TAU, frac in 0.0f64..1.0) {
        let eta = phi * frac;
        prop_assert!((triangle_factor(phi, eta) - triangle_factor_by_difference(phi, eta)).abs() <= 1e-14);
        prop_assert!(triangle_factor(phi, eta) >= 0.0);
    }
}
