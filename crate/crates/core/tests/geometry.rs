use std::f64::consts::{PI, TAU};

use diskcp::geometry::{
    barany_bipointed_triangle, buchta_bipointed_triangle, compositions, convex_position,
    family_geometry, hull_vertex_count, hull_vertices, sample_disk, sample_segment,
    sample_segment_counting, sample_triangle, valtr_square, valtr_triangle, Point, SegmentSpec,
};
use diskcp::recursion::LTable;
use diskcp::trigring::Rational;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn points() -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..12)
        .prop_map(|v| v.into_iter().map(|(x, y)| Point::new(x, y)).collect())
}

proptest! {
    #[test]
    fn hull_size_ignores_rigid_motions(pts in points(), a in 0.0f64..TAU, dx in -5.0f64..5.0, dy in -5.0f64..5.0) {
        let (s, c) = a.sin_cos();
        let moved: Vec<Point> = pts.iter().map(|p| Point::new(c * p.x - s * p.y + dx, s * p.x + c * p.y + dy)).collect();
        prop_assert_eq!(hull_vertex_count(&pts), hull_vertex_count(&moved));
    }

    #[test]
    fn full_hull_means_convex_position(pts in points()) {
        prop_assert_eq!(hull_vertex_count(&pts) == pts.len(), convex_position(&pts));
        let v = hull_vertices(&pts);
        prop_assert!(v.len() <= pts.len());
        prop_assert!(v.iter().all(|&i| i < pts.len()));
    }
}

#[test]
fn bipointed_triangle_laws() {
    for n in 1..=10usize {
        let total = (1..=n).fold(Rational::zero(), |acc, m| acc + buchta_bipointed_triangle(n, m));
        assert_eq!(total, ratio(1, 1), "n = {n}");
        assert_eq!(buchta_bipointed_triangle(n, n), barany_bipointed_triangle(n as u32));
    }
    assert_eq!(barany_bipointed_triangle(2), ratio(1, 3));
    assert_eq!(compositions(5, 2).len(), 4);
}

#[test]
fn square_and_triangle_values() {
    assert_eq!(valtr_square(4), ratio(25, 36));
    assert_eq!(valtr_triangle(4), ratio(2, 3));
    assert_eq!(valtr_square(3), ratio(1, 1));
    assert_eq!(valtr_triangle(5), ratio(11, 36));
}

#[test]
fn four_point_ordering() {
    let disk = LTable::shared().p_disk_exact(4).unwrap().to_f64();
    let tri = valtr_triangle(4).to_f64().unwrap();
    let sq = valtr_square(4).to_f64().unwrap();
    assert!(tri < sq && sq < disk, "{tri} {sq} {disk}");
}

#[test]
fn samplers() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 200_000;
    let r2: f64 = (0..n).map(|_| {
        let p = sample_disk(1.0, &mut rng);
        p.x * p.x + p.y * p.y
    }).sum::<f64>() / n as f64;
    assert!((r2 - 0.5).abs() < 4.0 * (1.0 / 12.0 / n as f64).sqrt(), "{r2}");

    let half = SegmentSpec::new(PI, 1.0).unwrap();
    let draws: u64 = (0..n).map(|_| sample_segment_counting(&half, &mut rng).1).sum();
    let accept = n as f64 / draws as f64;
    assert!((accept - PI / 4.0).abs() < 0.005, "{accept}");

    for theta in [0.3, PI, 5.9] {
        let seg = SegmentSpec::new(theta, 2.0).unwrap();
        assert!((0..20_000).all(|_| seg.contains(sample_segment(&seg, &mut rng))));
    }
    assert!((0..20_000).all(|_| {
        let p = sample_triangle(&mut rng);
        p.x >= 0.0 && p.y >= 0.0 && p.x + p.y <= 1.0
    }));
}

#[test]
fn family_area_grows_with_angle() {
    for theta in [0.5, PI, 6.0] {
        let ratios: Vec<f64> = (1..=50)
            .map(|k| family_geometry(theta, theta * k as f64 / 50.0).unwrap().area_ratio)
            .collect();
        assert!(ratios.windows(2).all(|w| w[0] < w[1]));
        assert!((ratios[49] - 1.0).abs() < 1e-14);
    }
}

#[test]
fn nested_member_holds_its_share_of_points() {
    let seg = SegmentSpec::new(PI, 1.0).unwrap();
    let want = family_geometry(PI, PI / 2.0).unwrap().area_ratio;
    assert!((want - 0.36338).abs() < 1e-5);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 200_000;
    let inside = (0..n).filter(|_| seg.family_through(sample_segment(&seg, &mut rng)).0 <= PI / 2.0).count();
    let got = inside as f64 / n as f64;
    let se = (want * (1.0 - want) / n as f64).sqrt();
    assert!((got - want).abs() < 4.0 * se, "{got} vs {want}");
}
