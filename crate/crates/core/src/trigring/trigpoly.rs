//! Exact trigonometric polynomials in the half-angle basis.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{binomial, PiPoly, Rational};
use crate::Error;

/// Which half-angle function a term carries.
///
/// `Cos` orders before `Sin`, which fixes the serialization key order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TrigKind {
    Cos,
    Sin,
}

/// `θ^theta_pow · kind(freq · θ / 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub theta_pow: u32,
    pub freq: u32,
    pub kind: TrigKind,
}

impl TermKey {
    pub const fn new(theta_pow: u32, freq: u32, kind: TrigKind) -> Self {
        Self {
            theta_pow,
            freq,
            kind,
        }
    }

    /// `θ^a`, i.e. the `cos(0)` term.
    pub const fn power(theta_pow: u32) -> Self {
        Self::new(theta_pow, 0, TrigKind::Cos)
    }
}

/// An element of `ℚ[π][θ, sin(θ/2), cos(θ/2)]`, written canonically as a
/// finite sum of `c · θ^a · sin(mθ/2)` and `c · θ^a · cos(mθ/2)` with
/// `c ∈ ℚ[π]`.
///
/// Canonical form: no zero coefficients and no `sin(0)` keys, so two values
/// are equal as functions iff their term maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TrigPoly {
    terms: BTreeMap<TermKey, PiPoly>,
}

/// Product-to-sum expansion of `k1(m1 x) · k2(m2 x)`; each entry carries an
/// implicit factor 1/2.
fn trig_product(m1: u32, k1: TrigKind, m2: u32, k2: TrigKind) -> [(i32, u32, TrigKind); 2] {
    use TrigKind::*;
    let sum = m1 + m2;
    let d = m1 as i64 - m2 as i64;
    let ad = d.unsigned_abs() as u32;
    // sin(d) with the sign of d folded in.
    let sin_d_sign = if d < 0 { -1 } else { 1 };
    match (k1, k2) {
        (Sin, Sin) => [(1, ad, Cos), (-1, sum, Cos)],
        (Sin, Cos) => [(1, sum, Sin), (sin_d_sign, ad, Sin)],
        (Cos, Sin) => [(1, sum, Sin), (-sin_d_sign, ad, Sin)],
        (Cos, Cos) => [(1, ad, Cos), (1, sum, Cos)],
    }
}

impl TrigPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(PiPoly::one())
    }

    pub fn constant(c: PiPoly) -> Self {
        Self::term(c, 0, 0, TrigKind::Cos)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(PiPoly::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(PiPoly::from_ratio(num, den))
    }

    /// `c · θ^a · kind(mθ/2)`, canonicalized.
    pub fn term(c: PiPoly, theta_pow: u32, freq: u32, kind: TrigKind) -> Self {
        let mut out = Self::zero();
        out.add_term(TermKey::new(theta_pow, freq, kind), &c);
        out
    }

    /// `θ`.
    pub fn theta() -> Self {
        Self::theta_pow(1)
    }

    pub fn theta_pow(a: u32) -> Self {
        Self::term(PiPoly::one(), a, 0, TrigKind::Cos)
    }

    /// `sin(mθ/2)`.
    pub fn sin_half(m: u32) -> Self {
        Self::term(PiPoly::one(), 0, m, TrigKind::Sin)
    }

    /// `cos(mθ/2)`.
    pub fn cos_half(m: u32) -> Self {
        Self::term(PiPoly::one(), 0, m, TrigKind::Cos)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (TermKey, PiPoly)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &PiPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &TermKey) -> Option<&PiPoly> {
        self.terms.get(key)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_theta_pow(&self) -> u32 {
        self.terms.keys().map(|k| k.theta_pow).max().unwrap_or(0)
    }

    pub fn max_freq(&self) -> u32 {
        self.terms.keys().map(|k| k.freq).max().unwrap_or(0)
    }

    /// True when no coefficient involves π.
    pub fn is_pi_free(&self) -> bool {
        self.terms.values().all(|c| c.degree() == Some(0))
    }

    /// Fails with [`Error::TermBudgetExceeded`] if the canonical form has more
    /// than `budget` terms.
    pub fn check_budget(&self, budget: usize) -> Result<(), Error> {
        if self.len() > budget {
            Err(Error::TermBudgetExceeded {
                terms: self.len(),
                budget,
            })
        } else {
            Ok(())
        }
    }

    /// Adds `c · key` in place, keeping the form canonical.
    pub fn add_term(&mut self, key: TermKey, c: &PiPoly) {
        if c.is_zero() || (key.kind == TrigKind::Sin && key.freq == 0) {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    fn add_term_scaled(&mut self, key: TermKey, c: &PiPoly, s: &Rational) {
        if c.is_zero() || s.is_zero() || (key.kind == TrigKind::Sin && key.freq == 0) {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                existing.add_scaled(c, s);
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.scale(s));
            }
        }
    }

    /// Adds `s · other` in place.
    pub fn add_scaled(&mut self, other: &TrigPoly, s: &Rational) {
        for (k, c) in &other.terms {
            self.add_term_scaled(*k, c, s);
        }
    }

    pub fn scale(&self, c: &PiPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `F(θ) = ∫₀^θ f(φ) dφ`, so `F(0) = 0`.
    pub fn integrate0(&self) -> Self {
        let mut out = Acc::default();
        for (k, c) in &self.terms {
            integrate_monomial(k.theta_pow, k.freq, k.kind, &Rational::one(), &mut |key, s| {
                out.add(key, c, &s)
            });
        }
        out.finish()
    }

    /// Exact derivative in θ.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            if k.theta_pow > 0 {
                let a = Rational::from_integer(BigInt::from(k.theta_pow));
                out.add_term_scaled(TermKey::new(k.theta_pow - 1, k.freq, k.kind), c, &a);
            }
            if k.freq > 0 {
                let half = Rational::new(BigInt::from(k.freq), BigInt::from(2));
                let (kind, s) = match k.kind {
                    TrigKind::Sin => (TrigKind::Cos, half),
                    TrigKind::Cos => (TrigKind::Sin, -half),
                };
                out.add_term_scaled(TermKey::new(k.theta_pow, k.freq, kind), c, &s);
            }
        }
        out
    }

    /// `g(θ) = f(2π − θ)`.
    pub fn reflect(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            // sin(mπ − x) = −(−1)^m sin x, cos(mπ − x) = (−1)^m cos x.
            let parity = if k.freq % 2 == 0 { 1 } else { -1 };
            let trig_sign = match k.kind {
                TrigKind::Sin => -parity,
                TrigKind::Cos => parity,
            };
            let a = k.theta_pow;
            for j in 0..=a {
                // (2π − θ)^a = Σ_j C(a, j) (2π)^{a−j} (−θ)^j
                let mut s = binomial(a, j) * (BigInt::one() << (a - j));
                if (j % 2 == 1) != (trig_sign < 0) {
                    s = -s;
                }
                let pi_part = c.shift((a - j) as usize);
                out.add_term_scaled(
                    TermKey::new(j, k.freq, k.kind),
                    &pi_part,
                    &Rational::from_integer(s),
                );
            }
        }
        out
    }

    /// Exact value at `θ = r·π` for a non-negative integer `r`.
    pub fn eval_at_pi_multiple(&self, r: u32) -> PiPoly {
        let mut out = PiPoly::zero();
        for (k, c) in &self.terms {
            // kind(m r π / 2)
            let q = (k.freq as u64 * r as u64) % 4;
            let t: i64 = match (k.kind, q) {
                (TrigKind::Sin, 1) => 1,
                (TrigKind::Sin, 3) => -1,
                (TrigKind::Sin, _) => 0,
                (TrigKind::Cos, 0) => 1,
                (TrigKind::Cos, 2) => -1,
                (TrigKind::Cos, _) => 0,
            };
            if t == 0 {
                continue;
            }
            let scale = Rational::from_integer(BigInt::from(t) * BigInt::from(r).pow(k.theta_pow));
            out.add_scaled(&c.shift(k.theta_pow as usize), &scale);
        }
        out
    }

    /// `h(φ) = ∫₀^φ f(η) g(φ − η) dη`, exact.
    pub fn convolve(&self, g: &TrigPoly) -> TrigPoly {
        let mut acc = Acc::default();
        for (kf, cf) in &self.terms {
            for (kg, cg) in &g.terms {
                let kernel = convolution_kernel(*kf, *kg);
                let c = cf * cg;
                for (key, kc) in &kernel.terms {
                    // Kernel coefficients are rational.
                    acc.add(*key, &c, &kc.coeff(0));
                }
            }
        }
        acc.finish()
    }
}

/// Unordered accumulator used by the heavier operations; converted to the
/// canonical ordered map once at the end.
#[derive(Default)]
struct Acc {
    map: HashMap<TermKey, PiPoly>,
}

impl Acc {
    fn add(&mut self, key: TermKey, c: &PiPoly, s: &Rational) {
        if key.kind == TrigKind::Sin && key.freq == 0 {
            return;
        }
        self.map.entry(key).or_default().add_scaled(c, s);
    }

    fn finish(self) -> TrigPoly {
        TrigPoly {
            terms: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Emits `scale · ∫₀^θ φ^a kind(mφ/2) dφ` as `(key, coefficient)` pairs.
fn integrate_monomial(
    a: u32,
    m: u32,
    kind: TrigKind,
    scale: &Rational,
    emit: &mut impl FnMut(TermKey, Rational),
) {
    if m == 0 {
        debug_assert_eq!(kind, TrigKind::Cos);
        emit(
            TermKey::power(a + 1),
            scale / Rational::from_integer(BigInt::from(a + 1)),
        );
        return;
    }
    // k = m/2, so 1/k = 2/m.
    let inv_k = Rational::new(BigInt::from(2), BigInt::from(m));
    let s = scale * &inv_k;
    match kind {
        // ∫ φ^a sin = −θ^a cos/k + [a = 0]/k + (a/k) ∫ φ^{a−1} cos
        TrigKind::Sin => {
            emit(TermKey::new(a, m, TrigKind::Cos), -s.clone());
            if a == 0 {
                emit(TermKey::power(0), s);
            } else {
                let next = &s * Rational::from_integer(BigInt::from(a));
                integrate_monomial(a - 1, m, TrigKind::Cos, &next, emit);
            }
        }
        // ∫ φ^a cos = θ^a sin/k − (a/k) ∫ φ^{a−1} sin
        TrigKind::Cos => {
            emit(TermKey::new(a, m, TrigKind::Sin), s.clone());
            if a > 0 {
                let next = -(&s * Rational::from_integer(BigInt::from(a)));
                integrate_monomial(a - 1, m, TrigKind::Sin, &next, emit);
            }
        }
    }
}

type KernelCache = RwLock<HashMap<(TermKey, TermKey), Arc<TrigPoly>>>;

fn kernel_cache() -> &'static KernelCache {
    static CACHE: OnceLock<KernelCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Convolution of two unit monomials, memoized process-wide. The result only
/// depends on the two keys, and the same pairs recur across every level of
/// the recursion.
fn convolution_kernel(kf: TermKey, kg: TermKey) -> Arc<TrigPoly> {
    if let Some(k) = kernel_cache().read().unwrap().get(&(kf, kg)) {
        return Arc::clone(k);
    }
    let k = Arc::new(compute_kernel(kf, kg));
    kernel_cache()
        .write()
        .unwrap()
        .insert((kf, kg), Arc::clone(&k));
    k
}

/// `∫₀^φ η^a k1(m1 η/2) (φ−η)^b k2(m2 (φ−η)/2) dη`.
///
/// Splits the second factor as `Σ P_i(φ) Q_i(η)` (binomial expansion and
/// angle subtraction), then `Σ P_i(φ) · ∫₀^φ f(η) Q_i(η) dη`. Equal
/// frequencies reduce to the Beta integral automatically through the
/// `m = 0` branch of the monomial integrator.
fn compute_kernel(kf: TermKey, kg: TermKey) -> TrigPoly {
    let f = TrigPoly::term(PiPoly::one(), kf.theta_pow, kf.freq, kf.kind);
    let b = kg.theta_pow;
    let m = kg.freq;
    // (trig in φ, trig in η, sign) for kind(A − B)
    let splits: Vec<(TrigKind, TrigKind, i32)> = match (kg.kind, m) {
        (TrigKind::Cos, 0) => vec![(TrigKind::Cos, TrigKind::Cos, 1)],
        (TrigKind::Sin, _) => vec![
            (TrigKind::Sin, TrigKind::Cos, 1),
            (TrigKind::Cos, TrigKind::Sin, -1),
        ],
        (TrigKind::Cos, _) => vec![
            (TrigKind::Cos, TrigKind::Cos, 1),
            (TrigKind::Sin, TrigKind::Sin, 1),
        ],
    };
    let mut out = Acc::default();
    for j in 0..=b {
        let mut binom = binomial(b, j);
        if j % 2 == 1 {
            binom = -binom;
        }
        for &(kp, kq, sign) in &splits {
            let q = TrigPoly::term(PiPoly::one(), j, m, kq);
            let inner = (&f * &q).integrate0();
            let p = TrigPoly::term(PiPoly::one(), b - j, m, kp);
            let prod = &p * &inner;
            let s = Rational::from_integer(&binom * BigInt::from(sign));
            for (key, c) in &prod.terms {
                out.add(*key, c, &s);
            }
        }
    }
    out.finish()
}

impl Add for &TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        TrigPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: &TrigPoly) -> TrigPoly {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let neg_half = -half.clone();
        let mut out = Acc::default();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let c = c1 * c2;
                let a = k1.theta_pow + k2.theta_pow;
                if k1.freq == 0 {
                    out.add(TermKey::new(a, k2.freq, k2.kind), &c, &Rational::one());
                    continue;
                }
                if k2.freq == 0 {
                    out.add(TermKey::new(a, k1.freq, k1.kind), &c, &Rational::one());
                    continue;
                }
                for (sign, m, kind) in trig_product(k1.freq, k1.kind, k2.freq, k2.kind) {
                    let s = if sign > 0 { &half } else { &neg_half };
                    out.add(TermKey::new(a, m, kind), &c, s);
                }
            }
        }
        out.finish()
    }
}

impl Add for TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: TrigPoly) -> TrigPoly {
        &self + &rhs
    }
}

impl Sub for TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: TrigPoly) -> TrigPoly {
        &self - &rhs
    }
}

impl Mul for TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: TrigPoly) -> TrigPoly {
        &self * &rhs
    }
}

impl Neg for TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        -&self
    }
}

impl Zero for TrigPoly {
    fn zero() -> Self {
        TrigPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l0() -> TrigPoly {
        TrigPoly::sin_half(1)
    }

    fn l1() -> TrigPoly {
        &l0() * &(&TrigPoly::theta() - &TrigPoly::sin_half(2))
    }

    #[test]
    fn additive_identity_and_inverse() {
        let f = l1();
        assert_eq!(&f + &TrigPoly::zero(), f);
        assert_eq!(&l0() + &l0(), TrigPoly::sin_half(1).scale(&PiPoly::from_int(2)));
        assert!((&l0() + &(-&l0())).is_zero());
    }

    #[test]
    fn half_angle_square() {
        let s2 = &l0() * &l0();
        let expect = &TrigPoly::from_ratio(1, 2) - &TrigPoly::cos_half(2).scale_rational(&Rational::new(1.into(), 2.into()));
        assert_eq!(s2, expect);
        assert_eq!(&l1() * &TrigPoly::one(), l1());
    }

    #[test]
    fn sin_zero_is_dropped() {
        let t = TrigPoly::term(PiPoly::one(), 3, 0, TrigKind::Sin);
        assert!(t.is_zero());
        // sin(x)cos(x) - sin(x)cos(x) style cancellations land at canonical zero
        let p = &TrigPoly::sin_half(3) * &TrigPoly::cos_half(3);
        assert_eq!(p, TrigPoly::sin_half(6).scale_rational(&Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn integrate_basics() {
        // ∫₀^θ sin(φ/2) = 2 − 2cos(θ/2)
        let got = l0().integrate0();
        let expect = &TrigPoly::from_int(2) - &TrigPoly::cos_half(1).scale(&PiPoly::from_int(2));
        assert_eq!(got, expect);
        assert_eq!(TrigPoly::one().integrate0(), TrigPoly::theta());
        // ∫₀^θ φ cos(φ/2) = 2θ sin(θ/2) + 4cos(θ/2) − 4
        let f = &TrigPoly::theta() * &TrigPoly::cos_half(1);
        let expect = TrigPoly::term(PiPoly::from_int(2), 1, 1, TrigKind::Sin)
            + TrigPoly::cos_half(1).scale(&PiPoly::from_int(4))
            - TrigPoly::from_int(4);
        assert_eq!(f.integrate0(), expect);
        assert_eq!(expect.derivative(), f);
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(l0().reflect(), l0());
        let two_pi = TrigPoly::constant(PiPoly::pi().scale(&Rational::from_integer(2.into())));
        assert_eq!(TrigPoly::theta().reflect(), &two_pi - &TrigPoly::theta());
        assert_eq!(TrigPoly::cos_half(1).reflect(), -&TrigPoly::cos_half(1));
    }

    #[test]
    fn convolve_examples() {
        // sin(φ/2) − (φ/2)cos(φ/2)
        let expect = &l0() - &TrigPoly::term(PiPoly::from_ratio(1, 2), 1, 1, TrigKind::Cos);
        assert_eq!(l0().convolve(&l0()), expect);
        assert!(l1().convolve(&TrigPoly::zero()).is_zero());
        assert_eq!(TrigPoly::one().convolve(&TrigPoly::one()), TrigPoly::theta());
    }

    #[test]
    fn exact_values_at_pi() {
        // L_1(π) = π, L_1(2π) = 0
        assert_eq!(l1().eval_at_pi_multiple(1), PiPoly::pi());
        assert!(l1().eval_at_pi_multiple(2).is_zero());
        assert_eq!(TrigPoly::cos_half(3).eval_at_pi_multiple(2), PiPoly::from_int(-1));
    }
}
