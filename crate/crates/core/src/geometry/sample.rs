//! Uniform samplers. Each takes the caller's generator.

use std::f64::consts::TAU;

use rand::Rng;

use super::{Point, SegmentSpec};

/// Vertices of the triangle used by [`sample_triangle`].
pub const TRIANGLE: [Point; 3] = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)];

/// Uniform in the disk of radius `r` about the origin.
pub fn sample_disk<R: Rng + ?Sized>(r: f64, rng: &mut R) -> Point {
    let rho = r * rng.random::<f64>().sqrt();
    let (s, c) = (TAU * rng.random::<f64>()).sin_cos();
    Point::new(rho * c, rho * s)
}

/// Uniform on the circle of radius `r` about the origin.
pub fn sample_circle<R: Rng + ?Sized>(r: f64, rng: &mut R) -> Point {
    let (s, c) = (TAU * rng.random::<f64>()).sin_cos();
    Point::new(r * c, r * s)
}

/// Uniform in the segment, by rejection from its bounding box.
pub fn sample_segment<R: Rng + ?Sized>(spec: &SegmentSpec, rng: &mut R) -> Point {
    sample_segment_counting(spec, rng).0
}

/// As [`sample_segment`], also returning the number of box draws used.
pub fn sample_segment_counting<R: Rng + ?Sized>(spec: &SegmentSpec, rng: &mut R) -> (Point, u64) {
    let (x0, x1, ymax) = spec.bounding_box();
    let r2 = spec.radius() * spec.radius();
    let mut draws = 0;
    loop {
        draws += 1;
        let x = x0 + (x1 - x0) * rng.random::<f64>();
        let y = ymax * (2.0 * rng.random::<f64>() - 1.0);
        if x * x + y * y <= r2 {
            return (Point::new(x, y), draws);
        }
    }
}

/// Uniform in [`TRIANGLE`].
pub fn sample_triangle<R: Rng + ?Sized>(rng: &mut R) -> Point {
    let (u, v) = (rng.random::<f64>(), rng.random::<f64>());
    if u + v > 1.0 {
        Point::new(1.0 - u, 1.0 - v)
    } else {
        Point::new(u, v)
    }
}

/// Uniform in the unit square.
pub fn sample_square<R: Rng + ?Sized>(rng: &mut R) -> Point {
    Point::new(rng.random(), rng.random())
}
