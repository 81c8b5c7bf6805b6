//! Exact computer algebra over `ℚ[π][θ, sin(θ/2), cos(θ/2)]`.
//!
//! Every intermediate of the disk recursion lives here: [`TrigPoly`] values
//! are closed under products, antiderivatives from 0, convolution on
//! `[0, φ]`, reflection `θ ↦ 2π − θ`, and the singular integration that
//! produces each new level.

mod eval;
mod format;
mod pipoly;
mod series;
mod singular;
mod trigpoly;

use num_bigint::BigInt;
use num_traits::One;

pub use eval::{eval_f64, eval_num, pipoly_to_f64, TrigEvaluator, SERIES_SWITCH};
pub(crate) use eval::{big_div_f64, pi_rational};
pub(crate) use format::pipoly_latex;
pub use pipoly::{rational_to_f64, PiPoly};
pub use series::{taylor, valuation, Anchor, PowerSeries};
pub use singular::{integrate_singular, SingularForm};
pub use trigpoly::{TermKey, TrigKind, TrigPoly};

/// Exact rational number, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
