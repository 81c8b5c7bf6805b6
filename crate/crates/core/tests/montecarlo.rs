use std::f64::consts::PI;

use diskcp::geometry::{barany_bipointed_triangle, buchta_bipointed_triangle, valtr_square, valtr_triangle};
use diskcp::montecarlo::{
    disk_hull_size_frequencies, estimate, model_equivalence_test, phi_gamma_density_test, EventSpec,
};
use diskcp::quadrature::LnmTable;
use diskcp::recursion::LTable;
use num_traits::ToPrimitive;

const T: u64 = 1_000_000;

#[test]
fn runs_are_reproducible() {
    let spec = EventSpec::BsegCp(4, 2.0);
    let a = estimate(&spec, 50_000, 42, 5).unwrap();
    let b = estimate(&spec, 50_000, 42, 5).unwrap();
    assert_eq!(a, b);
    let c = estimate(&spec, 50_000, 43, 5).unwrap();
    assert_ne!(a.successes, c.successes);
}

#[test]
fn worker_count_does_not_bias() {
    let spec = EventSpec::DiskCp(5);
    let a = estimate(&spec, T, 1, 1).unwrap();
    let b = estimate(&spec, T, 1, 7).unwrap();
    assert!(a.z_score(&b).abs() <= 4.0, "{a:?} {b:?}");
}

#[test]
fn agrees_with_exact_disk_and_segment_values() {
    let table = LTable::shared();
    for n in [4, 5, 6] {
        let exact = table.p_disk_exact(n).unwrap().to_f64();
        let e = estimate(&EventSpec::DiskCp(n), T, 10 + n as u64, 8).unwrap();
        assert!(e.agrees_with(exact, 4.0), "n = {n}: {e:?} vs {exact}");
    }
    for n in [2, 3, 4] {
        let exact = table.eval_b(n, PI).unwrap();
        let e = estimate(&EventSpec::BsegCp(n, PI), T, 20 + n as u64, 8).unwrap();
        assert!(e.agrees_with(exact, 4.0), "n = {n}: {e:?} vs {exact}");
    }
}

#[test]
fn agrees_with_polygon_baselines() {
    let sq = valtr_square(4).to_f64().unwrap();
    assert!(estimate(&EventSpec::SquareCp(4), T, 3, 8).unwrap().agrees_with(sq, 4.0));
    let tri = valtr_triangle(5).to_f64().unwrap();
    assert!(estimate(&EventSpec::TriangleCp(5), T, 4, 8).unwrap().agrees_with(tri, 4.0));
    let bp = barany_bipointed_triangle(3).to_f64().unwrap();
    assert!(estimate(&EventSpec::TriangleBipointed(3), T, 5, 8).unwrap().agrees_with(bp, 4.0));
    for m in 1..=4 {
        let want = buchta_bipointed_triangle(4, m).to_f64().unwrap();
        let e = estimate(&EventSpec::TriangleBipointedM(4, m), T, 6, 8).unwrap();
        assert!(e.agrees_with(want, 4.0), "m = {m}: {e:?} vs {want}");
    }
}

#[test]
fn single_vertex_segment_value_away_from_half_turn() {
    let want = LnmTable::new().eval_b(3, 1, 4.0).unwrap();
    let e = estimate(&EventSpec::BsegCpm(3, 1, 4.0), 2 * T, 2, 8).unwrap();
    assert!(e.agrees_with(want, 4.0), "{e:?} vs {want}");
}

#[test]
fn hull_size_law() {
    let table = LnmTable::new();
    for n in [4, 5, 6] {
        let freq = disk_hull_size_frequencies(n, T, 30 + n as u64, 8).unwrap();
        let total: f64 = freq.iter().map(|e| e.mean).sum();
        assert!((total - 1.0).abs() < 1e-12);
        for (m, e) in freq.iter().enumerate().skip(3) {
            let want = table.p_disk_nm(n, m).unwrap();
            assert!(e.agrees_with(want, 4.0), "P^{n},{m}: {e:?} vs {want}");
        }
        assert_eq!(freq[0].successes + freq[1].successes + freq[2].successes, 0);
    }
}

#[test]
fn boundary_point_model_matches_disk_model() {
    for n in [4, 6] {
        let r = model_equivalence_test(n, T, 50 + n as u64).unwrap();
        assert!(r.z.abs() <= 4.0, "n = {n}: {r:?}");
    }
    let r = model_equivalence_test(3, 10_000, 1).unwrap();
    assert_eq!((r.disk.mean, r.boundary.mean, r.z), (1.0, 1.0, 0.0));
    assert!(model_equivalence_test(2, 100, 1).is_err());
}

#[test]
fn phi_gamma_law() {
    let r = phi_gamma_density_test(2, PI, 10_000, 10, 1).unwrap();
    assert!((r.normalization - 1.0).abs() < 1e-8, "{r:?}");
    let r = phi_gamma_density_test(3, PI, T, 20, 3).unwrap();
    assert!(r.p_value > 0.001, "{r:?}");
    assert!(r.support_ok);
    let r = phi_gamma_density_test(5, 4.5, 200_000, 12, 9).unwrap();
    assert!(r.p_value > 0.001 && r.support_ok && (r.normalization - 1.0).abs() < 1e-8, "{r:?}");
}
