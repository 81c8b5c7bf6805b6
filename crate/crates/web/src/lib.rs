//! Browser bindings: the curve `B_n(θ)`, a random bi-pointed segment sample
//! with its hull, and exact `P_D^n`.

use std::f64::consts::TAU;

use diskcp::geometry::{hull_vertices, sample_segment, Point, SegmentSpec};
use diskcp::recursion::LTable;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wasm_bindgen::prelude::*;

/// `B_n` at `samples` evenly spaced angles strictly inside `(0, 2π)`,
/// as `[θ₀, B₀, θ₁, B₁, …]`.
#[wasm_bindgen]
pub fn b_curve(n: usize, samples: usize) -> Result<Vec<f64>, String> {
    let table = LTable::shared();
    let mut out = Vec::with_capacity(2 * samples);
    for i in 0..samples {
        let theta = TAU * (i as f64 + 0.5) / samples as f64;
        out.push(theta);
        out.push(table.eval_b(n, theta).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

/// The chord ends and `n` uniform points in the unit-radius segment of
/// angle `θ`, as `[x, y, …]` with the chord ends first.
#[wasm_bindgen]
pub fn segment_sample(n: usize, theta: f64, seed: u32) -> Result<Vec<f64>, String> {
    let seg = SegmentSpec::new(theta, 1.0).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.into());
    let pts = seg
        .endpoints()
        .into_iter()
        .chain((0..n).map(|_| sample_segment(&seg, &mut rng)));
    Ok(pts.flat_map(|p| [p.x, p.y]).collect())
}

/// Hull vertex indices, counter-clockwise, of points given as `[x, y, …]`.
#[wasm_bindgen]
pub fn hull(coords: &[f64]) -> Vec<u32> {
    let pts: Vec<Point> = coords.chunks_exact(2).map(|c| Point::new(c[0], c[1])).collect();
    hull_vertices(&pts).into_iter().map(|i| i as u32).collect()
}

/// Exact `P_D^n` and its decimal, e.g. `1 - 35/(12*pi^2) = 0.7044798810`.
#[wasm_bindgen]
pub fn p_disk(n: usize, digits: usize) -> Result<String, String> {
    let p = LTable::shared().p_disk_exact(n).map_err(|e| e.to_string())?;
    let c = p.one_minus();
    let exact = if c.is_zero() { "1".to_string() } else { format!("1 - {c}") };
    Ok(format!("{exact} = {}", p.to_decimal(digits)))
}
