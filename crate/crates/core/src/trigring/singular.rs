//! Singular integration `sin(θ/2)^p ∫₀^θ J(φ) / sin(φ/2)^p dφ`.
//!
//! `J` is rewritten over `(φ, s, c) = (φ, sin(φ/2), cos(φ/2))` with the
//! `c`-degree reduced to at most one, divided by `s^p`, and every negative
//! power of `s` is removed by integration by parts, from the highest pole
//! down. Two identities drive the reduction (with `d/dφ` throughout):
//!
//! ```text
//! d(s^{1-l})     = ((1-l)/2) c s^{-l}
//! d(c s^{1-l})   = -((l-1)/2) s^{-l} + ((l-2)/2) s^{2-l}
//! ```
//!
//! Whatever is left at `l = 1` would integrate to logarithms or
//! polylogarithms; for the inputs produced by the recursion it cancels
//! exactly, and anything else is rejected.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::series::{taylor, Anchor};
use super::{PiPoly, Rational, TrigKind, TrigPoly};
use crate::Error;

/// Key `(φ power, s power, c power)` with `c power ∈ {0, 1}`.
type ScKey = (u32, i32, u8);

/// Polynomial in `φ, s^{±1}, c` with `c`-degree ≤ 1.
#[derive(Clone, Debug, Default)]
struct ScPoly {
    terms: HashMap<ScKey, PiPoly>,
}

impl ScPoly {
    fn add(&mut self, key: ScKey, c: &PiPoly, s: &Rational) {
        if c.is_zero() || s.is_zero() {
            return;
        }
        self.terms.entry(key).or_default().add_scaled(c, s);
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }
}

/// `cos(mx)` and `sin(mx)` as `Σ r · s^i c^j` with `j ≤ 1`, for all
/// `m ≤ max`.
fn multiple_angle_table(max: u32) -> Vec<[Vec<(i32, u8, Rational)>; 2]> {
    type Form = BTreeMap<(i32, u8), Rational>;
    fn times_c(f: &Form) -> Form {
        let mut out = Form::new();
        for (&(i, j), r) in f {
            if j == 0 {
                *out.entry((i, 1)).or_insert_with(Rational::zero) += r;
            } else {
                // c² = 1 − s²
                *out.entry((i, 0)).or_insert_with(Rational::zero) += r;
                *out.entry((i + 2, 0)).or_insert_with(Rational::zero) -= r;
            }
        }
        out
    }
    fn times_s(f: &Form) -> Form {
        f.iter().map(|(&(i, j), r)| ((i + 1, j), r.clone())).collect()
    }
    fn combine(a: Form, b: Form, sign: i32) -> Form {
        let mut out = a;
        for (k, r) in b {
            let e = out.entry(k).or_insert_with(Rational::zero);
            if sign > 0 {
                *e += r;
            } else {
                *e -= r;
            }
        }
        out.retain(|_, r| !r.is_zero());
        out
    }
    let flatten = |f: &Form| {
        f.iter()
            .map(|(&(i, j), r)| (i, j, r.clone()))
            .collect::<Vec<_>>()
    };
    let mut cos = Form::from([((0, 0), Rational::one())]);
    let mut sin = Form::new();
    let mut table = Vec::with_capacity(max as usize + 1);
    for _ in 0..=max {
        table.push([flatten(&cos), flatten(&sin)]);
        // cos((m+1)x) = cos(mx) c − sin(mx) s ; sin((m+1)x) = sin(mx) c + cos(mx) s
        let next_cos = combine(times_c(&cos), times_s(&sin), -1);
        let next_sin = combine(times_c(&sin), times_s(&cos), 1);
        cos = next_cos;
        sin = next_sin;
    }
    table
}

fn to_sc(f: &TrigPoly) -> ScPoly {
    let table = multiple_angle_table(f.max_freq());
    let mut out = ScPoly::default();
    for (k, c) in f.terms() {
        let form = &table[k.freq as usize][match k.kind {
            TrigKind::Cos => 0,
            TrigKind::Sin => 1,
        }];
        for (i, j, r) in form {
            out.add((k.theta_pow, *i, *j), c, r);
        }
    }
    out.prune();
    out
}

/// Converts an `ScPoly` with non-negative `s` powers back to the trig basis.
fn from_sc(f: &ScPoly) -> TrigPoly {
    let max_i = f.terms.keys().map(|k| k.1).max().unwrap_or(0);
    assert!(f.terms.keys().all(|k| k.1 >= 0), "negative s power");
    let s = TrigPoly::sin_half(1);
    let mut s_pows = vec![TrigPoly::one()];
    for i in 1..=max_i.max(0) as usize {
        let next = &s_pows[i - 1] * &s;
        s_pows.push(next);
    }
    let c = TrigPoly::cos_half(1);
    let mut out = TrigPoly::zero();
    let mut keys: Vec<_> = f.terms.keys().copied().collect();
    keys.sort_unstable();
    for key in keys {
        let (a, i, j) = key;
        let coeff = &f.terms[&key];
        let mut basis = s_pows[i as usize].clone();
        if j == 1 {
            basis = &basis * &c;
        }
        let theta = TrigPoly::term(coeff.clone(), a, 0, TrigKind::Cos);
        out.add_scaled(&(&theta * &basis), &Rational::one());
    }
    out
}

/// `J / s^p` split into a regular part and pole parts.
///
/// `singular[l] = (Q0, Q1)` stands for `(Q0(θ) + cos(θ/2) Q1(θ)) / sin(θ/2)^l`
/// where `Q0`, `Q1` are polynomials in θ. `log_coeff` is the coefficient of
/// the bare `cos(θ/2)/sin(θ/2)` term, the only term whose antiderivative is a
/// pure logarithm; it is filled in by [`SingularForm::reduce`].
#[derive(Clone, Debug, Default)]
pub struct SingularForm {
    pub regular: TrigPoly,
    pub singular: BTreeMap<u32, (TrigPoly, TrigPoly)>,
    pub log_coeff: PiPoly,
}

impl SingularForm {
    pub fn decompose(j: &TrigPoly, p: u32) -> Self {
        let sc = to_sc(j);
        let mut regular = ScPoly::default();
        let mut singular: BTreeMap<u32, (TrigPoly, TrigPoly)> = BTreeMap::new();
        for (&(a, i, jc), c) in &sc.terms {
            let e = i - p as i32;
            if e >= 0 {
                regular.add((a, e, jc), c, &Rational::one());
            } else {
                let entry = singular.entry((-e) as u32).or_default();
                let q = TrigPoly::term(c.clone(), a, 0, TrigKind::Cos);
                if jc == 0 {
                    entry.0 = &entry.0 + &q;
                } else {
                    entry.1 = &entry.1 + &q;
                }
            }
        }
        singular.retain(|_, (q0, q1)| !(q0.is_zero() && q1.is_zero()));
        SingularForm {
            regular: from_sc(&regular),
            singular,
            log_coeff: PiPoly::zero(),
        }
    }

    /// Integrates by parts down to `l = 1`. Returns the antiderivative pieces
    /// with poles and the residual integrand at `l = 1`.
    ///
    /// Every step lands strictly below its own level and the `s^0` target of
    /// the second identity has coefficient zero at `l = 2`, so no new regular
    /// integrand is ever produced.
    fn reduce(&mut self) -> (ScPoly, ScPoly) {
        let mut pending = ScPoly::default();
        for (&l, (q0, q1)) in &self.singular {
            for (k, c) in q0.terms() {
                pending.add((k.theta_pow, -(l as i32), 0), c, &Rational::one());
            }
            for (k, c) in q1.terms() {
                pending.add((k.theta_pow, -(l as i32), 1), c, &Rational::one());
            }
        }
        let mut anti = ScPoly::default();
        let max_l = self.singular.keys().copied().max().unwrap_or(0) as i32;
        for l in (2..=max_l).rev() {
            let level: Vec<(ScKey, PiPoly)> = pending
                .terms
                .iter()
                .filter(|(k, c)| k.1 == -l && !c.is_zero())
                .map(|(k, c)| (*k, c.clone()))
                .collect();
            for ((a, _, jc), kappa) in level {
                pending.terms.remove(&(a, -l, jc));
                let lr = Rational::from_integer(BigInt::from(l));
                let one = Rational::one();
                if jc == 1 {
                    // ∫ φ^a c s^{-l} = (2/(1-l)) φ^a s^{1-l} − (2a/(1-l)) ∫ φ^{a-1} s^{1-l}
                    let f = Rational::from_integer(BigInt::from(2)) / (&one - &lr);
                    anti.add((a, 1 - l, 0), &kappa, &f);
                    if a > 0 {
                        let g = -(&f * Rational::from_integer(BigInt::from(a)));
                        pending.add((a - 1, 1 - l, 0), &kappa, &g);
                    }
                } else {
                    // ∫ φ^a s^{-l} = −(2/(l-1)) φ^a c s^{1-l}
                    //               + (2a/(l-1)) ∫ φ^{a-1} c s^{1-l}
                    //               + ((l-2)/(l-1)) ∫ φ^a s^{2-l}
                    let lm1 = &lr - &one;
                    let f = Rational::from_integer(BigInt::from(2)) / &lm1;
                    anti.add((a, 1 - l, 1), &kappa, &-f.clone());
                    if a > 0 {
                        let g = &f * Rational::from_integer(BigInt::from(a));
                        pending.add((a - 1, 1 - l, 1), &kappa, &g);
                    }
                    if l > 2 {
                        let h = (&lr - Rational::from_integer(BigInt::from(2))) / &lm1;
                        pending.add((a, 2 - l, 0), &kappa, &h);
                    }
                }
            }
        }
        pending.prune();
        anti.prune();
        self.log_coeff = pending
            .terms
            .get(&(0, -1, 1))
            .cloned()
            .unwrap_or_default();
        (anti, pending)
    }
}

/// `G(θ) = sin(θ/2)^p ∫₀^θ J(φ) / sin(φ/2)^p dφ`, exactly.
///
/// Fails with [`Error::Singularity`] when `J` does not vanish to order `p`
/// at zero (the integral diverges) or when a logarithmic remainder survives
/// the reduction (the result would leave the ring).
pub fn integrate_singular(j: &TrigPoly, p: u32) -> Result<TrigPoly, Error> {
    if j.is_zero() {
        return Ok(TrigPoly::zero());
    }
    let head = taylor(j, Anchor::Zero, p.saturating_sub(1) as usize);
    if let Some(v) = head.valuation() {
        return Err(Error::Singularity(format!(
            "integrand vanishes only to order {v} at 0, need {p}"
        )));
    }
    let mut form = SingularForm::decompose(j, p);
    let (anti, residual) = form.reduce();
    if !form.log_coeff.is_zero() {
        return Err(Error::Singularity(format!(
            "logarithmic term cos/sin with coefficient {}",
            form.log_coeff
        )));
    }
    if !residual.terms.is_empty() {
        return Err(Error::Singularity(format!(
            "{} first-order pole terms survive the reduction",
            residual.terms.len()
        )));
    }

    let regular_anti = form.regular.integrate0();

    let s_p = TrigPoly::sin_half(1).pow(p);

    // Antiderivative pieces with poles, multiplied through by s^p.
    let mut anti_times_sp = ScPoly::default();
    let mut max_pole = 0;
    for (&(a, i, jc), c) in &anti.terms {
        max_pole = max_pole.max(-i);
        anti_times_sp.add((a, i + p as i32, jc), c, &Rational::one());
    }

    // Limit of the pole pieces at 0: multiply by s^K, expand, read θ^K.
    let limit = if anti.terms.is_empty() {
        PiPoly::zero()
    } else {
        let k = max_pole as u32;
        let mut shifted = ScPoly::default();
        for (&(a, i, jc), c) in &anti.terms {
            shifted.add((a, i + k as i32, jc), c, &Rational::one());
        }
        let n = from_sc(&shifted);
        let series = taylor(&n, Anchor::Zero, k as usize);
        if let Some(v) = series.valuation() {
            if v < k as usize {
                return Err(Error::Singularity(format!(
                    "antiderivative diverges at 0 like θ^-{}",
                    k as usize - v
                )));
            }
        }
        // s^K ~ (θ/2)^K
        let two_k = Rational::from_integer(BigInt::one() << k);
        series.coeff(k as usize).scale(&two_k)
    };

    let mut g = from_sc(&anti_times_sp);
    g = &g + &(&s_p * &regular_anti);
    g = &g - &s_p.scale(&limit);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiple_angles_reduce() {
        // cos(2x) = 1 − 2s², sin(2x) = 2sc
        let t = multiple_angle_table(2);
        let as_set = |v: &Vec<(i32, u8, Rational)>| {
            let mut v = v.clone();
            v.sort_by_key(|a| (a.0, a.1));
            v
        };
        let r = |n: i64| Rational::from_integer(BigInt::from(n));
        assert_eq!(as_set(&t[2][0]), vec![(0, 0, r(1)), (2, 0, r(-2))]);
        assert_eq!(as_set(&t[2][1]), vec![(1, 1, r(2))]);
    }

    #[test]
    fn sc_round_trip() {
        let f = &(&TrigPoly::theta() * &TrigPoly::sin_half(5)) + &TrigPoly::cos_half(4);
        assert_eq!(from_sc(&to_sc(&f)), f);
    }

    #[test]
    fn first_recursion_step() {
        let l0 = TrigPoly::sin_half(1);
        let j = l0.convolve(&l0);
        let g = integrate_singular(&j, 3).unwrap();
        let l1 = &l0 * &(&TrigPoly::theta() - &TrigPoly::sin_half(2));
        assert_eq!(g, l1.scale_rational(&Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn zero_and_divergent_inputs() {
        assert!(integrate_singular(&TrigPoly::zero(), 5).unwrap().is_zero());
        assert!(matches!(
            integrate_singular(&TrigPoly::one(), 1),
            Err(Error::Singularity(_))
        ));
    }
}
