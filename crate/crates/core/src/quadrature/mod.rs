//! Numerical side of the recursion: adaptive integration, Chebyshev
//! interpolants, and the two-index functions `L_{n,m}`, `B_{n,m}` and
//! `P_D^{n,m}` that have no closed form in the exact ring.

mod cheb;
mod gk;
mod lnm;

pub use cheb::{nodes, ChebProxy, BASE_NODES, FINE_NODES};
pub use gk::{adaptive_integrate, integrate, Integral, MAX_INTERVALS};
pub use lnm::{
    theta_minus_sin, triangle_factor, triangle_factor_by_difference, weight_f64, LnmTable,
    DEFAULT_PROXY_TOL,
};
