//! The exact diagonal recursion: `L_n`, `B_n(θ)` and `P_D^n`.
//!
//! `L_n(θ) = B_n(θ)·(θ − sin θ)^n·sin(θ/2)/n!` where `B_n(θ)` is the
//! probability that `n` uniform points in a circular segment of arc angle
//! `θ`, together with the two chord endpoints, are in convex position.

mod piratio;

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::trigring::{
    big_div_f64, factorial, integrate_singular, pipoly_to_f64, taylor, Anchor, PiPoly, Rational,
    TrigEvaluator, TrigPoly, SERIES_SWITCH,
};
use crate::Error;

pub use piratio::PiRatio;

/// Default cap on the number of terms in any intermediate polynomial.
pub const DEFAULT_TERM_BUDGET: usize = 1_000_000;

/// Series orders kept past the leading term in the endpoint expansions.
const ENDPOINT_SERIES_ORDERS: usize = 24;

/// `L_0 = sin(θ/2)`.
pub fn l0() -> TrigPoly {
    TrigPoly::sin_half(1)
}

/// `L_1 = sin(θ/2)(θ − sin θ)`.
pub fn l1() -> TrigPoly {
    &TrigPoly::sin_half(1) * &(&TrigPoly::theta() - &TrigPoly::sin_half(2))
}

/// `w_n(θ) = (θ − sin θ)^n sin(θ/2) / n!`, so that `L_n = B_n · w_n`.
pub fn weight(n: usize) -> TrigPoly {
    let base = &TrigPoly::theta() - &TrigPoly::sin_half(2);
    let f = &base.pow(n as u32) * &TrigPoly::sin_half(1);
    f.scale_rational(&Rational::new(BigInt::one(), factorial(n as u32)))
}

/// One step of the recursion from `L_0..L_{n-1}`.
fn next_level(lower: &[Arc<TrigPoly>], budget: usize) -> Result<TrigPoly, Error> {
    let n = lower.len();
    match n {
        0 => return Ok(l0()),
        1 => return Ok(l1()),
        _ => {}
    }
    // convolution is symmetric: pair k with n-1-k
    let ks: Vec<usize> = (0..n).filter(|&k| k <= n - 1 - k).collect();
    let parts = crate::par_map(&ks, |&k| {
        let c = lower[k].convolve(&lower[n - 1 - k]);
        (k, c)
    });
    let mut j = TrigPoly::zero();
    let two = Rational::from_integer(2.into());
    for (k, c) in &parts {
        if *k == n - 1 - k {
            j.add_scaled(c, &Rational::one());
        } else {
            j.add_scaled(c, &two);
        }
    }
    j.check_budget(budget)?;
    let g = integrate_singular(&j, 2 * n as u32 + 1)?;
    let l = g.scale_rational(&two);
    l.check_budget(budget)?;
    Ok(l)
}

/// Memoized exact `L_n`. Writers are serialized; finished levels are shared
/// read-only.
pub struct LTable {
    budget: usize,
    levels: Mutex<Vec<Arc<TrigPoly>>>,
    evaluators: Mutex<HashMap<usize, Arc<BEvaluator>>>,
}

impl Default for LTable {
    fn default() -> Self {
        Self::with_budget(DEFAULT_TERM_BUDGET)
    }
}

impl LTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_budget(budget: usize) -> Self {
        Self {
            budget,
            levels: Mutex::new(Vec::new()),
            evaluators: Mutex::new(HashMap::new()),
        }
    }

    /// Process-wide table with the default budget.
    pub fn shared() -> &'static LTable {
        static TABLE: OnceLock<LTable> = OnceLock::new();
        TABLE.get_or_init(LTable::new)
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Highest index computed so far.
    pub fn max_computed(&self) -> Option<usize> {
        self.levels.lock().unwrap().len().checked_sub(1)
    }

    /// `L_n`, computing and storing any missing lower levels first.
    pub fn get(&self, n: usize) -> Result<Arc<TrigPoly>, Error> {
        let mut levels = self.levels.lock().unwrap();
        while levels.len() <= n {
            let next = next_level(&levels, self.budget)?;
            levels.push(Arc::new(next));
        }
        Ok(levels[n].clone())
    }

    /// Runs the recursion step for level `n` again from the stored lower
    /// levels, without consulting the stored `L_n`.
    pub fn recompute(&self, n: usize) -> Result<TrigPoly, Error> {
        if n > 0 {
            self.get(n - 1)?;
        }
        let levels = self.levels.lock().unwrap();
        next_level(&levels[..n], self.budget)
    }

    pub fn b_evaluator(&self, n: usize) -> Result<Arc<BEvaluator>, Error> {
        if let Some(e) = self.evaluators.lock().unwrap().get(&n) {
            return Ok(e.clone());
        }
        let l = self.get(n)?;
        let e = Arc::new(BEvaluator::new(n, &l)?);
        self.evaluators.lock().unwrap().insert(n, e.clone());
        Ok(e)
    }

    /// `B_n(θ)` for `0 < θ < 2π`.
    pub fn eval_b(&self, n: usize, theta: f64) -> Result<f64, Error> {
        check_angle(theta)?;
        if n <= 1 {
            return Ok(1.0);
        }
        Ok(self.b_evaluator(n)?.eval(theta))
    }

    /// `lim_{θ→0} B_n(θ)` read off the series of `L_n`, checked against
    /// `12^n / ((n+1)(2n+1)!)`.
    pub fn limit_zero(&self, n: usize) -> Result<Rational, Error> {
        let got = if n == 0 {
            Rational::one()
        } else {
            self.b_evaluator(n)?.zero_limit.clone()
        };
        let want = zero_limit_formula(n);
        if got != want {
            return Err(Error::LimitMismatch(format!(
                "B_{n}(0+) is {got} from the series but {want} from the closed form"
            )));
        }
        Ok(got)
    }

    /// `B_n(π)` exactly.
    pub fn b_at_pi(&self, n: usize) -> Result<PiRatio, Error> {
        let l = self.get(n)?;
        let v = l.eval_at_pi_multiple(1);
        Ok(PiRatio::new(
            v.scale(&Rational::from_integer(factorial(n as u32))),
            Rational::one(),
            n as u32,
        ))
    }

    /// `P_D^n` exactly, from
    /// `(n−2)!/(2^{n−2} π^{n−1}) ∫₀^{2π} Σ_k L_k(φ) L_{n−2−k}(2π − φ) dφ`.
    pub fn p_disk_exact(&self, n: usize) -> Result<PiRatio, Error> {
        if n < 2 {
            return Err(Error::Domain(format!("disk probability needs n >= 2, got {n}")));
        }
        let top = n - 2;
        self.get(top)?;
        let levels: Vec<Arc<TrigPoly>> = (0..=top).map(|k| self.get(k)).collect::<Result<_, _>>()?;
        // the integral is symmetric under k ↔ n−2−k
        let ks: Vec<usize> = (0..=top).filter(|&k| k <= top - k).collect();
        let parts = crate::par_map(&ks, |&k| {
            let prod = &*levels[k] * &levels[top - k].reflect();
            let v = prod.integrate0().eval_at_pi_multiple(2);
            if k == top - k {
                v
            } else {
                v.scale(&Rational::from_integer(2.into()))
            }
        });
        let mut total = PiPoly::zero();
        for p in &parts {
            total += p;
        }
        let num = total.scale(&Rational::from_integer(factorial(top as u32)));
        let den = Rational::from_integer(BigInt::from(2).pow(top as u32));
        Ok(PiRatio::new(num, den, n as u32 - 1))
    }

    /// `B_{n−1}(t)`, which tends to `P_D^n` as `t ↑ 2π`.
    pub fn p_disk_via_limit(&self, n: usize, t: f64) -> Result<f64, Error> {
        if n < 2 {
            return Err(Error::Domain(format!("disk probability needs n >= 2, got {n}")));
        }
        self.eval_b(n - 1, t)
    }
}

/// `12^n / ((n+1)(2n+1)!)`.
pub fn zero_limit_formula(n: usize) -> Rational {
    Rational::new(
        BigInt::from(12).pow(n as u32),
        BigInt::from(n + 1) * factorial(2 * n as u32 + 1),
    )
}

fn check_angle(theta: f64) -> Result<(), Error> {
    if theta > 0.0 && theta < TAU {
        Ok(())
    } else {
        Err(Error::Domain(format!("angle {theta} is outside (0, 2π)")))
    }
}

/// `B_n = L_n / w_n` prepared for evaluation. Both sides vanish at the
/// endpoints, so near them the quotient of the two Taylor series is used.
#[derive(Debug)]
pub struct BEvaluator {
    n: usize,
    l: TrigEvaluator,
    w: TrigEvaluator,
    near_zero: Vec<f64>,
    near_two_pi: Vec<f64>,
    zero_limit: Rational,
}

impl BEvaluator {
    fn new(n: usize, l: &TrigPoly) -> Result<Self, Error> {
        let w = weight(n);
        let v0 = 3 * n + 1;
        let order = v0 + ENDPOINT_SERIES_ORDERS;
        let a = taylor(l, Anchor::Zero, order);
        let b = taylor(&w, Anchor::Zero, order);
        for i in 0..v0 {
            if !a.coeff(i).is_zero() {
                return Err(Error::LimitMismatch(format!(
                    "L_{n} has a θ^{i} term below the order of its weight"
                )));
            }
        }
        let b: Vec<Rational> = (v0..=order)
            .map(|i| b.coeff(i).as_rational().expect("weight series is π-free"))
            .collect();
        let a: Vec<PiPoly> = (v0..=order).map(|i| a.coeff(i)).collect();
        let q = divide_series_exact(&a, &b);
        let zero_limit = q[0].as_rational().ok_or_else(|| {
            Error::LimitMismatch(format!("B_{n}(0+) = {} is not rational", q[0]))
        })?;
        let near_zero = q.iter().map(pipoly_to_f64).collect();

        let order = 1 + ENDPOINT_SERIES_ORDERS;
        let a = taylor(l, Anchor::TwoPi, order).coeffs_f64();
        let b = taylor(&w, Anchor::TwoPi, order).coeffs_f64();
        let pad = |mut v: Vec<f64>| {
            v.resize(order + 1, 0.0);
            v
        };
        let near_two_pi = divide_series_f64(&pad(a)[1..], &pad(b)[1..]);

        Ok(Self {
            n,
            l: TrigEvaluator::new(l),
            w: TrigEvaluator::new(&w),
            near_zero,
            near_two_pi,
            zero_limit,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let horner = |c: &[f64], x: f64| c.iter().rev().fold(0.0, |acc, ci| acc * x + ci);
        if theta < SERIES_SWITCH {
            horner(&self.near_zero, theta)
        } else if TAU - theta < SERIES_SWITCH {
            horner(&self.near_two_pi, TAU - theta)
        } else {
            big_div_f64(&self.l.eval_big(theta), &self.w.eval_big(theta))
        }
    }
}

/// `a / b` for power series with `b[0] ≠ 0` rational.
fn divide_series_exact(a: &[PiPoly], b: &[Rational]) -> Vec<PiPoly> {
    let inv = Rational::one() / &b[0];
    let mut q: Vec<PiPoly> = Vec::with_capacity(a.len());
    for j in 0..a.len() {
        let mut acc = a[j].clone();
        for i in 1..=j.min(b.len() - 1) {
            acc.add_scaled(&q[j - i], &-&b[i]);
        }
        q.push(acc.scale(&inv));
    }
    q
}

fn divide_series_f64(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut q: Vec<f64> = Vec::with_capacity(a.len());
    for j in 0..a.len() {
        let mut acc = a[j];
        for i in 1..=j.min(b.len() - 1) {
            acc -= q[j - i] * b[i];
        }
        q.push(acc / b[0]);
    }
    q
}
