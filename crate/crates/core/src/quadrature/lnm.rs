//! `L_{n,m}` off the diagonal by numerical integration of the two-index
//! recursion, stored as Chebyshev interpolants of the bounded `B_{n,m}`.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};
use std::sync::{Arc, Mutex};

use super::cheb::{nodes, ChebProxy, FINE_NODES};
use super::gk::integrate;
use crate::recursion::LTable;
use crate::Error;

/// Sup-error target for each stored interpolant.
pub const DEFAULT_PROXY_TOL: f64 = 1e-9;

const INNER_REL_TOL: f64 = 1e-12;
const OUTER_REL_TOL: f64 = 1e-11;

/// `θ − sin θ` without cancellation for small `θ`.
pub fn theta_minus_sin(theta: f64) -> f64 {
    if theta.abs() < 0.5 {
        // θ³/3! − θ⁵/5! + ...
        let t2 = theta * theta;
        let mut term = theta * t2 / 6.0;
        let mut sum = 0.0;
        for k in 1..12 {
            sum += term;
            term *= -t2 / ((2 * k + 2) * (2 * k + 3)) as f64;
        }
        sum
    } else {
        theta - theta.sin()
    }
}

/// `w_n(θ) = (θ − sin θ)^n sin(θ/2) / n!`.
pub fn weight_f64(n: usize, theta: f64) -> f64 {
    let mut w = (theta / 2.0).sin();
    let d = theta_minus_sin(theta);
    for k in 1..=n {
        w *= d / k as f64;
    }
    w
}

/// `4 sin((φ−η)/2) sin(φ/2) sin(η/2)`: the triangle term, free of
/// cancellation.
pub fn triangle_factor(phi: f64, eta: f64) -> f64 {
    4.0 * ((phi - eta) / 2.0).sin() * (phi / 2.0).sin() * (eta / 2.0).sin()
}

/// `sin η + sin(φ − η) − sin φ`, the same quantity written as a difference.
pub fn triangle_factor_by_difference(phi: f64, eta: f64) -> f64 {
    eta.sin() + (phi - eta).sin() - phi.sin()
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn check_angle(theta: f64) -> Result<(), Error> {
    if theta > 0.0 && theta < TAU {
        Ok(())
    } else {
        Err(Error::Domain(format!("angle {theta} is outside (0, 2π)")))
    }
}

/// Interpolants of `B_{n,m}` on `[0, 2π]`, filled on demand. Diagonal
/// entries are sampled from the exact `B_n`; the rest come from the
/// recursion over lower levels.
pub struct LnmTable {
    exact: &'static LTable,
    tol: f64,
    entries: Mutex<HashMap<(usize, usize), Arc<ChebProxy>>>,
}

impl Default for LnmTable {
    fn default() -> Self {
        Self::new()
    }
}

impl LnmTable {
    pub fn new() -> Self {
        Self::with_tolerance(LTable::shared(), DEFAULT_PROXY_TOL)
    }

    pub fn with_tolerance(exact: &'static LTable, tol: f64) -> Self {
        Self {
            exact,
            tol,
            entries: Mutex::new(HashMap::new()),
        }
    }

    /// Interpolant of `B_{n,m}`; exact zero when `m > n` or `m = 0 < n`.
    pub fn b_proxy(&self, n: usize, m: usize) -> Result<Arc<ChebProxy>, Error> {
        if m > n || (m == 0 && n > 0) {
            return Ok(Arc::new(ChebProxy::zero()));
        }
        if n <= 1 {
            return Ok(Arc::new(ChebProxy::constant(1.0)));
        }
        if let Some(p) = self.entries.lock().unwrap().get(&(n, m)) {
            return Ok(p.clone());
        }
        let proxy = if m == n {
            let exact = self.exact.b_evaluator(n)?;
            ChebProxy::build(|t| exact.eval(t), self.tol)?
        } else {
            let values = self.sample_off_diagonal(n, m)?;
            ChebProxy::from_fine_samples(&values, self.tol)?
        };
        let proxy = Arc::new(proxy);
        self.entries.lock().unwrap().insert((n, m), proxy.clone());
        Ok(proxy)
    }

    /// `B_{n,m}(θ)` for `0 < θ < 2π`.
    pub fn eval_b(&self, n: usize, m: usize, theta: f64) -> Result<f64, Error> {
        check_angle(theta)?;
        Ok(self.b_proxy(n, m)?.eval(theta))
    }

    /// `L_{n,m}(θ) = B_{n,m}(θ) w_n(θ)`.
    pub fn eval_l(&self, n: usize, m: usize, theta: f64) -> Result<f64, Error> {
        check_angle(theta)?;
        Ok(self.b_proxy(n, m)?.eval(theta) * weight_f64(n, theta))
    }

    /// Interpolants for every `(k, l)` with `k < n`, indexed `[k][l]`.
    fn lower_levels(&self, n: usize) -> Result<Vec<Vec<Arc<ChebProxy>>>, Error> {
        (0..n)
            .map(|k| (0..=k).map(|l| self.b_proxy(k, l)).collect())
            .collect()
    }

    /// `B_{n,m}` at the fine nodes from
    /// `B_{n,m}(θ) = 2 n! sin(θ/2)^{2n} / (θ − sin θ)^n ∫₀^θ H(φ) / sin(φ/2)^{2n+1} dφ`.
    fn sample_off_diagonal(&self, n: usize, m: usize) -> Result<Vec<f64>, Error> {
        let lower = self.lower_levels(n)?;
        // (n1, m1, n2, m2, n3) with n1 + n2 + n3 = n − 1, m1 + m2 = m − 1
        let mut tuples = Vec::new();
        for n3 in 0..n {
            for n1 in 0..n - n3 {
                let n2 = n - 1 - n3 - n1;
                for m1 in 0..m {
                    let m2 = m - 1 - m1;
                    let live = |k: usize, l: usize| l <= k && !lower[k][l].is_zero();
                    if live(n1, m1) && live(n2, m2) {
                        tuples.push((n1, m1, n2, m2, n3));
                    }
                }
            }
        }
        let ell = |k: usize, l: usize, x: f64| lower[k][l].eval(x) * weight_f64(k, x);
        let inner = |phi: f64, eta: f64| -> f64 {
            let tri = triangle_factor(phi, eta);
            let mut cache_a = vec![None; n * n];
            let mut cache_b = vec![None; n * n];
            let mut sum = 0.0;
            for &(n1, m1, n2, m2, n3) in &tuples {
                let a = *cache_a[n1 * n + m1].get_or_insert_with(|| ell(n1, m1, eta));
                let b = *cache_b[n2 * n + m2].get_or_insert_with(|| ell(n2, m2, phi - eta));
                sum += tri.powi(n3 as i32) / factorial_f64(n3) * a * b;
            }
            sum
        };
        // the integrand is symmetric under η ↔ φ − η
        let h = |phi: f64| -> Result<f64, Error> {
            let r = integrate(|eta| inner(phi, eta), 0.0, phi / 2.0, 0.0, INNER_REL_TOL)?;
            Ok(2.0 * r.value)
        };
        let p = 2 * n as i32 + 1;
        let g = |phi: f64| -> Result<f64, Error> { Ok(h(phi)? / (phi / 2.0).sin().powi(p)) };

        let mut xs = nodes(FINE_NODES);
        xs.reverse();
        let panels: Vec<(f64, f64)> = xs
            .iter()
            .enumerate()
            .map(|(j, &x)| (if j == 0 { 0.0 } else { xs[j - 1] }, x))
            .collect();
        let pieces = crate::par_map(&panels, |&(a, b)| -> Result<f64, Error> {
            // errors raised inside the integrand surface after the fact
            let failure = Mutex::new(None);
            let r = integrate(
                |phi| {
                    g(phi).unwrap_or_else(|e| {
                        failure.lock().unwrap().get_or_insert(e);
                        0.0
                    })
                },
                a,
                b,
                0.0,
                OUTER_REL_TOL,
            )?;
            match failure.into_inner().unwrap() {
                Some(e) => Err(e),
                None => Ok(r.value),
            }
        });
        let nf = factorial_f64(n);
        let mut cum = 0.0;
        let mut out = vec![0.0; FINE_NODES];
        for (j, piece) in pieces.into_iter().enumerate() {
            cum += piece?;
            let x = xs[j];
            let b = 2.0 * nf * (x / 2.0).sin().powi(2 * n as i32) / theta_minus_sin(x).powi(n as i32) * cum;
            // xs is ascending; nodes() order is descending
            out[FINE_NODES - 1 - j] = b;
        }
        Ok(out)
    }

    /// `P_D^{n,m}`, the probability that exactly `m` of `n` uniform points in
    /// a disk are hull vertices:
    /// `(n−2)!/(2^{n−2} π^{n−1}) ∫₀^{2π} Σ L_{k,m₁}(φ) L_{n−2−k,m−2−m₁}(2π−φ) dφ`.
    pub fn p_disk_nm(&self, n: usize, m: usize) -> Result<f64, Error> {
        if n < 2 || m > n {
            return Err(Error::Domain(format!("need 2 <= n and m <= n, got n = {n}, m = {m}")));
        }
        if m < 2 {
            return Ok(0.0);
        }
        let top = n - 2;
        let lower: Vec<Vec<Arc<ChebProxy>>> = (0..=top)
            .map(|k| (0..=k).map(|l| self.b_proxy(k, l)).collect())
            .collect::<Result<_, _>>()?;
        let mut pairs = Vec::new();
        for k in 0..=top {
            for m1 in 0..=(m - 2).min(k) {
                let m2 = m - 2 - m1;
                if m2 <= top - k && !lower[k][m1].is_zero() && !lower[top - k][m2].is_zero() {
                    pairs.push((k, m1, top - k, m2));
                }
            }
        }
        let integrand = |phi: f64| -> f64 {
            let psi = TAU - phi;
            pairs
                .iter()
                .map(|&(k, m1, j, m2)| {
                    lower[k][m1].eval(phi) * weight_f64(k, phi) * lower[j][m2].eval(psi) * weight_f64(j, psi)
                })
                .sum()
        };
        let r = integrate(integrand, 0.0, TAU, 1e-13, 1e-12)?;
        let pre = factorial_f64(top) / (2f64.powi(top as i32) * PI.powi(n as i32 - 1));
        Ok(pre * r.value)
    }

    /// Largest recorded error estimate among stored interpolants.
    pub fn max_error_estimate(&self) -> f64 {
        self.entries
            .lock()
            .unwrap()
            .values()
            .map(|p| p.error_estimate())
            .fold(0.0, f64::max)
    }
}
