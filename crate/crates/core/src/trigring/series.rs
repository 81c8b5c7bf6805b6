//! Truncated Taylor expansions of trig polynomials at `θ = 0` and `θ = 2π`.

use num_bigint::BigInt;
use num_traits::One;

use super::{PiPoly, Rational, TrigKind, TrigPoly};

/// Expansion point. At `Zero` the local variable is `θ`; at `TwoPi` it is
/// `ε = 2π − θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Anchor {
    Zero,
    TwoPi,
}

/// `Σ_{i ≤ order} coeffs[i] · x^i` in the anchor's local variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    pub anchor: Anchor,
    pub order: usize,
    coeffs: Vec<PiPoly>,
}

impl PowerSeries {
    pub fn coeffs(&self) -> &[PiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> PiPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Index of the first nonzero coefficient, if any within the order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Evaluates with coefficients reduced to `f64` at the true value of π.
    pub fn eval(&self, x: f64) -> f64 {
        let c = self.coeffs_f64();
        c.iter().rev().fold(0.0, |acc, ci| acc * x + ci)
    }

    /// Coefficients as `f64`, each evaluated at π in high precision first so
    /// that π-polynomial cancellations do not leak into the series.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(super::eval::pipoly_to_f64).collect()
    }
}

/// `θ^a kind(mθ/2)` expanded at 0 up to `θ^order`, accumulated into `out`.
fn expand_monomial(a: u32, m: u32, kind: TrigKind, c: &PiPoly, order: usize, out: &mut [PiPoly]) {
    let a = a as usize;
    if a > order {
        return;
    }
    if m == 0 {
        out[a] += c;
        return;
    }
    // k^i / i! with k = m/2
    let k = Rational::new(BigInt::from(m), BigInt::from(2));
    let mut term = Rational::one();
    for i in 0..=(order - a) {
        if i > 0 {
            term = term * &k / Rational::from_integer(BigInt::from(i));
        }
        let sign_and_parity = match kind {
            TrigKind::Sin if i % 2 == 1 => Some((i / 2) % 2 == 0),
            TrigKind::Cos if i % 2 == 0 => Some((i / 2) % 2 == 0),
            _ => None,
        };
        if let Some(positive) = sign_and_parity {
            let s = if positive { term.clone() } else { -term.clone() };
            out[a + i].add_scaled(c, &s);
        }
    }
}

/// Exact truncated expansion of `f` at the anchor.
pub fn taylor(f: &TrigPoly, anchor: Anchor, order: usize) -> PowerSeries {
    let local;
    let g = match anchor {
        Anchor::Zero => f,
        Anchor::TwoPi => {
            local = f.reflect();
            &local
        }
    };
    let mut coeffs = vec![PiPoly::zero(); order + 1];
    for (k, c) in g.terms() {
        expand_monomial(k.theta_pow, k.freq, k.kind, c, order, &mut coeffs);
    }
    while coeffs.last().is_some_and(PiPoly::is_zero) && coeffs.len() > 1 {
        coeffs.pop();
    }
    if coeffs.len() == 1 && coeffs[0].is_zero() {
        coeffs.clear();
    }
    PowerSeries {
        anchor,
        order,
        coeffs,
    }
}

/// Order of vanishing of a nonzero `f` at the anchor.
pub fn valuation(f: &TrigPoly, anchor: Anchor) -> Option<usize> {
    if f.is_zero() {
        return None;
    }
    let mut order = 16;
    loop {
        if let Some(v) = taylor(f, anchor, order).valuation() {
            return Some(v);
        }
        // A nonzero trig polynomial is analytic and not identically zero.
        order *= 2;
        if order > 4096 {
            return None;
        }
    }
}
