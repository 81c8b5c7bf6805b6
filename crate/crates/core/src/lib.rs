//! Probability that `n` uniform random points in a disk are in convex
//! position, computed exactly through a recursion over bi-pointed circular
//! segments and cross-checked numerically and by simulation.
//!
//! * [`trigring`]: exact trig-polynomial algebra the recursion lives in.
//! * [`recursion`]: the exact functions `L_n`, `B_n(θ)` and `P_D^n`.
//! * [`quadrature`]: adaptive integration and the numeric two-index
//!   recursion for `L_{n,m}` and `P_D^{n,m}`.
//! * [`geometry`]: segment geometry, samplers, hull predicates and the
//!   closed-form triangle/square baselines.
//! * [`montecarlo`]: seeded parallel estimation and statistical checks.

mod error;
pub mod geometry;
pub mod montecarlo;
pub mod quadrature;
pub mod recursion;
pub mod trigring;

pub use error::Error;

/// Maps `f` over `items`, on the rayon pool when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}
