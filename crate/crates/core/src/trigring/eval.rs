//! Numeric evaluation of exact trig polynomials.
//!
//! Deep recursion levels produce polynomials whose terms are many orders of
//! magnitude larger than their sum (the `θ`-expansion of `L_n` starts at
//! `θ^{3n+1}`). Direct evaluation therefore runs in 320-bit floating point;
//! below `|θ| = 0.1` the exact Taylor expansion is used instead.

use std::cell::RefCell;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word, WORD_BIT_SIZE};

use super::series::{taylor, valuation, Anchor};
use super::{PiPoly, Rational, TrigKind, TrigPoly};

pub(crate) const PREC: usize = 320;
const RM: RoundingMode = RoundingMode::ToEven;

/// Below this `|θ|` evaluation goes through the series at 0.
pub const SERIES_SWITCH: f64 = 0.1;

/// Extra series orders kept beyond the order of vanishing.
const SERIES_EXTRA_ORDERS: usize = 24;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

pub(crate) fn big_pi() -> BigFloat {
    with_consts(|cc| cc.pi(PREC, RM))
}

pub(crate) fn big_from_f64(x: f64) -> BigFloat {
    BigFloat::from_f64(x, PREC)
}

pub(crate) fn big_from_rational(r: &Rational) -> BigFloat {
    with_consts(|cc| {
        let n = BigFloat::parse(&r.numer().to_string(), Radix::Dec, PREC, RM, cc);
        let d = BigFloat::parse(&r.denom().to_string(), Radix::Dec, PREC, RM, cc);
        n.div(&d, PREC, RM)
    })
}

pub(crate) fn big_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, exp, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    // value = 0.m × 2^exp with the top bit of the last word set
    let mut acc = 0.0f64;
    let mut scale = 1.0f64;
    for w in words.iter().rev().take(128 / WORD_BIT_SIZE + 1) {
        scale *= 2f64.powi(-(WORD_BIT_SIZE as i32));
        acc += (*w as f64) * scale;
    }
    let v = ldexp(acc, exp);
    match sign {
        Sign::Neg => -v,
        Sign::Pos => v,
    }
}

/// Exact rational value of a finite big float.
pub(crate) fn big_to_rational(x: &BigFloat) -> Rational {
    use num_bigint::{BigInt, BigUint};
    if x.is_zero() {
        return Rational::from_integer(BigInt::from(0));
    }
    let (words, _, sign, exp, _) = x.as_raw_parts().expect("finite big float");
    let mut digits = Vec::with_capacity(words.len() * WORD_BIT_SIZE / 32);
    for w in words {
        // words are u32 on 32-bit targets
        #[allow(clippy::unnecessary_cast)]
        let w = *w as u64;
        digits.push(w as u32);
        if WORD_BIT_SIZE == 64 {
            digits.push((w >> 32) as u32);
        }
    }
    let m = BigInt::from(BigUint::new(digits));
    let shift = exp as i64 - (words.len() * WORD_BIT_SIZE) as i64;
    let mut r = Rational::from_integer(m);
    let two = Rational::from_integer(BigInt::from(2));
    r = if shift >= 0 {
        r * num_traits::pow(two, shift as usize)
    } else {
        r / num_traits::pow(two, (-shift) as usize)
    };
    match sign {
        Sign::Neg => -r,
        Sign::Pos => r,
    }
}

/// π to the working precision, as an exact rational.
pub(crate) fn pi_rational() -> Rational {
    big_to_rational(&big_pi())
}

pub(crate) fn big_div_f64(a: &BigFloat, b: &BigFloat) -> f64 {
    big_to_f64(&a.div(b, PREC, RM))
}

fn ldexp(x: f64, e: i32) -> f64 {
    // Split so intermediate powers stay finite.
    let mut x = x;
    let mut e = e;
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e)
}

fn big_pipoly(p: &PiPoly, pi: &BigFloat) -> BigFloat {
    let mut acc = BigFloat::from_word(0 as Word, PREC);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(pi, PREC, RM).add(&big_from_rational(c), PREC, RM);
    }
    acc
}

/// A `π`-polynomial reduced to `f64` through high-precision arithmetic.
pub fn pipoly_to_f64(p: &PiPoly) -> f64 {
    if let Some(r) = p.as_rational() {
        return super::pipoly::rational_to_f64(&r);
    }
    big_to_f64(&big_pipoly(p, &big_pi()))
}

/// A trig polynomial prepared for repeated numeric evaluation: coefficients
/// converted once to 320-bit floats, plus the Taylor coefficients at 0.
#[derive(Clone, Debug)]
pub struct TrigEvaluator {
    terms: Vec<(u32, u32, TrigKind, BigFloat)>,
    max_freq: u32,
    max_pow: u32,
    series0: Vec<f64>,
}

impl TrigEvaluator {
    pub fn new(f: &TrigPoly) -> Self {
        let pi = big_pi();
        let terms = f
            .terms()
            .map(|(k, c)| (k.theta_pow, k.freq, k.kind, big_pipoly(c, &pi)))
            .collect();
        let series0 = match valuation(f, Anchor::Zero) {
            Some(v) => taylor(f, Anchor::Zero, v + SERIES_EXTRA_ORDERS).coeffs_f64(),
            None => Vec::new(),
        };
        Self {
            terms,
            max_freq: f.max_freq(),
            max_pow: f.max_theta_pow(),
            series0,
        }
    }

    /// Value at `theta`, series-routed near 0.
    pub fn eval(&self, theta: f64) -> f64 {
        if theta.abs() < SERIES_SWITCH {
            self.series0
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * theta + c)
        } else {
            big_to_f64(&self.eval_big(theta))
        }
    }

    /// Direct 320-bit evaluation.
    pub fn eval_big(&self, theta: f64) -> BigFloat {
        let t = big_from_f64(theta);
        let half = t.div(&BigFloat::from_word(2, PREC), PREC, RM);
        let (s1, c1) = with_consts(|cc| (half.sin(PREC, RM, cc), half.cos(PREC, RM, cc)));
        // cos(mx), sin(mx) by the angle-addition recurrence
        let mut cos_m = vec![BigFloat::from_word(1, PREC)];
        let mut sin_m = vec![BigFloat::from_word(0, PREC)];
        for m in 1..=self.max_freq as usize {
            let c = cos_m[m - 1]
                .mul(&c1, PREC, RM)
                .sub(&sin_m[m - 1].mul(&s1, PREC, RM), PREC, RM);
            let s = sin_m[m - 1]
                .mul(&c1, PREC, RM)
                .add(&cos_m[m - 1].mul(&s1, PREC, RM), PREC, RM);
            cos_m.push(c);
            sin_m.push(s);
        }
        let mut pows = vec![BigFloat::from_word(1, PREC)];
        for a in 1..=self.max_pow as usize {
            let next = pows[a - 1].mul(&t, PREC, RM);
            pows.push(next);
        }
        let mut acc = BigFloat::from_word(0, PREC);
        for (a, m, kind, c) in &self.terms {
            let trig = match kind {
                TrigKind::Cos => &cos_m[*m as usize],
                TrigKind::Sin => &sin_m[*m as usize],
            };
            let term = c.mul(&pows[*a as usize], PREC, RM).mul(trig, PREC, RM);
            acc = acc.add(&term, PREC, RM);
        }
        acc
    }
}

/// Numeric value of `f` at `theta`; see [`TrigEvaluator`] for the routing.
pub fn eval_num(f: &TrigPoly, theta: f64) -> f64 {
    TrigEvaluator::new(f).eval(theta)
}

/// Plain `f64` evaluation with a caller-supplied value for π. No cancellation
/// guard: intended for quick looks and for checking the careful path.
pub fn eval_f64(f: &TrigPoly, theta: f64, pi: f64) -> f64 {
    f.terms()
        .map(|(k, c)| {
            let arg = k.freq as f64 * theta / 2.0;
            let trig = match k.kind {
                TrigKind::Cos => arg.cos(),
                TrigKind::Sin => arg.sin(),
            };
            c.eval_f64(pi) * theta.powi(k.theta_pow as i32) * trig
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn simple_values() {
        assert!((eval_num(&TrigPoly::sin_half(1), PI) - 1.0).abs() < 1e-15);
        let f = &TrigPoly::theta() - &TrigPoly::sin_half(2);
        assert!((eval_num(&f, 2.0 * PI) - 2.0 * PI).abs() < 1e-14);
    }

    #[test]
    fn pi_polynomials() {
        let p = PiPoly::from_coeffs(vec![
            Rational::from_integer((-473473).into()),
            Rational::from_integer(0.into()),
            Rational::from_integer(146400.into()),
        ]);
        let want = 146400.0 * PI * PI - 473473.0;
        assert!((pipoly_to_f64(&p) - want).abs() < 1e-9);
    }

    #[test]
    fn rational_of_big() {
        let r = big_to_rational(&big_from_f64(-3.25));
        assert_eq!(r, Rational::new((-13).into(), 4.into()));
        let pi = pi_rational();
        assert!((super::super::rational_to_f64(&pi) - PI).abs() < 1e-15);
    }

    #[test]
    fn big_round_trip() {
        for x in [1.0, -3.25, 1e-300, 6.02e23, 0.1] {
            assert_eq!(big_to_f64(&big_from_f64(x)), x);
        }
    }
}
