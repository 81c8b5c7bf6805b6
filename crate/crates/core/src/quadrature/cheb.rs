//! Chebyshev interpolants on `[0, 2π]`.

use std::f64::consts::{PI, TAU};

use crate::Error;

/// Nodes of the default interpolant.
pub const BASE_NODES: usize = 65;
/// Nodes sampled in total; the base nodes are every third of these.
pub const FINE_NODES: usize = 3 * BASE_NODES;

/// Interpolant `Σ c_j T_j(x)` with `x = θ/π − 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChebProxy {
    coeffs: Vec<f64>,
    error: f64,
}

/// The `count` first-kind Chebyshev points mapped to `[0, 2π]`, in the
/// order `cos((2k+1)π/(2·count))` for `k = 0..count`, i.e. descending.
pub fn nodes(count: usize) -> Vec<f64> {
    (0..count)
        .map(|k| {
            let x = ((2 * k + 1) as f64 * PI / (2 * count) as f64).cos();
            PI * (x + 1.0)
        })
        .collect()
}

/// Coefficients of the interpolant through values at [`nodes`]`(len)`.
fn fit(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    (0..n)
        .map(|j| {
            let s: f64 = values
                .iter()
                .enumerate()
                .map(|(k, v)| v * (j as f64 * (2 * k + 1) as f64 * PI / (2 * n) as f64).cos())
                .sum();
            let c = 2.0 * s / n as f64;
            if j == 0 {
                c / 2.0
            } else {
                c
            }
        })
        .collect()
}

fn clenshaw(coeffs: &[f64], x: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for c in coeffs.iter().skip(1).rev() {
        let b0 = 2.0 * x * b1 - b2 + c;
        b2 = b1;
        b1 = b0;
    }
    coeffs.first().copied().unwrap_or(0.0) + x * b1 - b2
}

impl ChebProxy {
    pub fn zero() -> Self {
        Self {
            coeffs: Vec::new(),
            error: 0.0,
        }
    }

    pub fn constant(c: f64) -> Self {
        Self {
            coeffs: vec![c],
            error: 0.0,
        }
    }

    /// Interpolates samples taken at [`nodes`]`(FINE_NODES)`. The degree-64
    /// interpolant through every third sample is kept when it reproduces the
    /// others to `tol`; otherwise the full degree-194 interpolant is used and
    /// its error is estimated from the trailing coefficients.
    pub fn from_fine_samples(values: &[f64], tol: f64) -> Result<Self, Error> {
        assert_eq!(values.len(), FINE_NODES);
        let base: Vec<f64> = values.iter().skip(1).step_by(3).copied().collect();
        let coarse = Self {
            coeffs: fit(&base),
            error: 0.0,
        };
        let fine_x = nodes(FINE_NODES);
        let gap = fine_x
            .iter()
            .zip(values)
            .map(|(x, v)| (coarse.eval(*x) - v).abs())
            .fold(0.0, f64::max);
        if gap <= tol {
            return Ok(Self {
                error: gap,
                ..coarse
            });
        }
        let coeffs = fit(values);
        let tail: f64 = coeffs[coeffs.len() - 16..].iter().map(|c| c.abs()).sum();
        let error = tail.max(f64::EPSILON * coeffs[0].abs());
        if error > tol {
            return Err(Error::ToleranceNotMet(format!(
                "Chebyshev interpolant error {error:e} exceeds {tol:e}"
            )));
        }
        Ok(Self { coeffs, error })
    }

    /// Samples `f` at the fine nodes and interpolates.
    pub fn build(f: impl Fn(f64) -> f64 + Sync + Send, tol: f64) -> Result<Self, Error> {
        let values = crate::par_map(&nodes(FINE_NODES), |&x| f(x));
        Self::from_fine_samples(&values, tol)
    }

    pub fn eval(&self, theta: f64) -> f64 {
        clenshaw(&self.coeffs, theta / PI - 1.0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Estimated sup-norm error recorded at construction.
    pub fn error_estimate(&self) -> f64 {
        self.error
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0.0)
    }

    pub fn domain(&self) -> (f64, f64) {
        (0.0, TAU)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_nodes_nest_in_fine_nodes() {
        let fine = nodes(FINE_NODES);
        for (k, x) in nodes(BASE_NODES).iter().enumerate() {
            assert!((fine[3 * k + 1] - x).abs() < 1e-13);
        }
    }

    #[test]
    fn reproduces_samples() {
        let f = |t: f64| (t / 2.0).sin().powi(3) + t.cos();
        let p = ChebProxy::build(f, 1e-13).unwrap();
        assert_eq!(p.degree(), BASE_NODES - 1);
        for x in nodes(BASE_NODES) {
            // a few ulps of rounding from the 65-term cosine sums
            assert!((p.eval(x) - f(x)).abs() < 128.0 * f64::EPSILON);
        }
        for i in 0..50 {
            let x = TAU * i as f64 / 49.0;
            assert!((p.eval(x) - f(x)).abs() < 1e-13);
        }
    }

    #[test]
    fn refines_or_gives_up() {
        // a kink needs the fine interpolant and still misses a tight target
        let kink = |t: f64| (t - 3.0).abs();
        assert!(matches!(ChebProxy::build(kink, 1e-10), Err(Error::ToleranceNotMet(_))));
        let p = ChebProxy::build(|t: f64| (20.0 * t).sin(), 1e-12).unwrap();
        assert_eq!(p.degree(), FINE_NODES - 1);
        assert!((p.eval(1.0) - 20f64.sin()).abs() < 1e-12);
    }
}
