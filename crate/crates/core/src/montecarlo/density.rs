//! The joint law of `(Φ, Γ)`: `Φ` is the angle of the smallest member of
//! the segment family (all members share the chord) that holds every sample
//! point, `Γ` the angular position on its arc of the point that touches it.

use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::{check_run, run_workers};
use crate::geometry::{sample_segment, SegmentSpec};
use crate::quadrature::{integrate, theta_minus_sin};
use crate::Error;

/// Density of `(Φ, Γ)` for `n` points in the segment of angle `θ`, zero
/// off the support `0 < φ ≤ θ, |γ| ≤ φ/2`.
pub fn phi_gamma_density(n: usize, theta: f64, phi: f64, gamma: f64) -> f64 {
    if !(phi > 0.0 && phi <= theta && gamma.abs() <= phi / 2.0) {
        return 0.0;
    }
    radial_factor(n, theta, phi) * arc_factor(phi, gamma)
}

fn radial_factor(n: usize, theta: f64, phi: f64) -> f64 {
    let n32 = n as i32;
    let st = (theta / 2.0).sin();
    let sp = (phi / 2.0).sin();
    n as f64 * (st * st / theta_minus_sin(theta)).powi(n32) * theta_minus_sin(phi).powi(n32 - 1)
        / sp.powi(2 * n32 + 1)
}

/// `cos γ − cos(φ/2)` without cancellation.
fn arc_factor(phi: f64, gamma: f64) -> f64 {
    let h = phi / 2.0;
    2.0 * ((h + gamma) / 2.0).sin() * ((h - gamma) / 2.0).sin()
}

/// Mass of the cell `φ ∈ [a, b]`, `2γ/φ ∈ [v0, v1]`.
fn cell_mass(n: usize, theta: f64, (a, b): (f64, f64), (v0, v1): (f64, f64)) -> Result<f64, Error> {
    let inner = |phi: f64| -> f64 {
        let arc = integrate(|g| arc_factor(phi, g), v0 * phi / 2.0, v1 * phi / 2.0, 0.0, 1e-12)
            .map(|r| r.value)
            .unwrap_or(f64::NAN);
        radial_factor(n, theta, phi) * arc
    };
    let r = integrate(inner, a, b, 1e-14, 1e-10)?;
    if r.value.is_nan() {
        return Err(Error::ToleranceNotMet("inner arc integral failed".into()));
    }
    Ok(r.value)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PhiGammaReport {
    /// Integral of the density over its support.
    pub normalization: f64,
    pub chi_square: f64,
    pub dof: usize,
    pub p_value: f64,
    /// Every sampled pair had `|Γ| ≤ Φ/2 ≤ θ/2`.
    pub support_ok: bool,
    pub trials: u64,
}

/// Samples `(Φ, Γ)` from `trials` draws of `n` points in the segment of
/// angle `θ` and compares the histogram over `bins × bins` cells in
/// `(φ, 2γ/φ)` with the density. Cells expecting fewer than five counts are
/// pooled with their neighbours in row order.
pub fn phi_gamma_density_test(
    n: usize,
    theta: f64,
    trials: u64,
    bins: usize,
    seed: u64,
) -> Result<PhiGammaReport, Error> {
    if n == 0 || bins == 0 {
        return Err(Error::Domain("need n >= 1 and at least one bin".into()));
    }
    check_run(trials, super::DEFAULT_WORKERS)?;
    let seg = SegmentSpec::new(theta, 1.0)?;

    let normalization = integrate(
        |phi| {
            let arc = integrate(|g| arc_factor(phi, g), -phi / 2.0, phi / 2.0, 0.0, 1e-13)
                .map(|r| r.value)
                .unwrap_or(f64::NAN);
            radial_factor(n, theta, phi) * arc
        },
        0.0,
        theta,
        0.0,
        1e-12,
    )?
    .value;

    let cells = bins * bins;
    let (hist, outside) = run_workers(
        trials,
        seed,
        super::DEFAULT_WORKERS,
        || (vec![0u64; cells], 0u64),
        |rng, (hist, outside)| {
            let (mut big_phi, mut big_gamma) = (0.0f64, 0.0f64);
            for _ in 0..n {
                let (phi, gamma) = seg.family_through(sample_segment(&seg, rng));
                if phi > big_phi {
                    (big_phi, big_gamma) = (phi, gamma);
                }
            }
            let slack = 1e-12;
            if big_gamma.abs() > big_phi / 2.0 + slack || big_phi > theta + slack {
                *outside += 1;
            }
            let i = ((big_phi / theta * bins as f64) as usize).min(bins - 1);
            let v = 2.0 * big_gamma / big_phi;
            let j = (((v + 1.0) / 2.0 * bins as f64).max(0.0) as usize).min(bins - 1);
            hist[i * bins + j] += 1;
        },
        |a, b| {
            a.0.iter_mut().zip(b.0).for_each(|(x, y)| *x += y);
            a.1 += b.1;
        },
    );

    let edge = |k: usize, lo: f64, hi: f64| lo + (hi - lo) * k as f64 / bins as f64;
    let mut expected = Vec::with_capacity(cells);
    for i in 0..bins {
        for j in 0..bins {
            let m = cell_mass(
                n,
                theta,
                (edge(i, 0.0, theta), edge(i + 1, 0.0, theta)),
                (edge(j, -1.0, 1.0), edge(j + 1, -1.0, 1.0)),
            )?;
            expected.push(m * trials as f64);
        }
    }

    let mut groups: Vec<(f64, f64)> = Vec::new();
    let (mut o, mut e) = (0.0, 0.0);
    for (h, x) in hist.iter().zip(&expected) {
        o += *h as f64;
        e += x;
        if e >= 5.0 {
            groups.push((o, e));
            (o, e) = (0.0, 0.0);
        }
    }
    match groups.last_mut() {
        Some(last) => {
            last.0 += o;
            last.1 += e;
        }
        None => groups.push((o, e)),
    }
    let chi_square: f64 = groups.iter().map(|(o, e)| (o - e).powi(2) / e).sum();
    let dof = groups.len().saturating_sub(1).max(1);
    let p_value = ChiSquared::new(dof as f64)
        .map_err(|e| Error::Domain(e.to_string()))?
        .sf(chi_square);

    Ok(PhiGammaReport {
        normalization,
        chi_square,
        dof,
        p_value,
        support_ok: outside == 0,
        trials,
    })
}
