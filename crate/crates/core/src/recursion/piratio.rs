//! Exact values of the form `N(π) / (d · π^k)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::trigring::{pi_rational, pipoly_latex, rational_to_f64, PiPoly, Rational};

/// `numerator / (denom_constant · π^denom_pi_power)` in lowest terms: the
/// numerator has integer coefficients with no common factor shared with the
/// positive integer `denom_constant`, and no power of π divides both sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiRatio {
    numerator: PiPoly,
    denom_constant: BigInt,
    denom_pi_power: u32,
}

impl PiRatio {
    pub fn new(numerator: PiPoly, denom_constant: Rational, denom_pi_power: u32) -> Self {
        assert!(!denom_constant.is_zero(), "zero denominator");
        if numerator.is_zero() {
            return Self::zero();
        }
        // cancel common powers of π
        let low = numerator.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        let cancel = low.min(denom_pi_power as usize);
        let numerator = PiPoly::from_coeffs(numerator.coeffs()[cancel..].to_vec());
        let k = denom_pi_power - cancel as u32;

        // N/(p/q) = N·q/p, then clear the numerator's denominators
        let mut num = numerator.scale(&Rational::from_integer(denom_constant.denom().clone()));
        let mut den = denom_constant.numer().clone();
        let lcm = num
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        num = num.scale(&Rational::from_integer(lcm.clone()));
        den *= lcm;
        let content = num
            .coeffs()
            .iter()
            .fold(den.abs(), |acc, c| acc.gcd(c.numer()));
        let mut scale = Rational::new(BigInt::one(), content.clone());
        den /= content;
        if den.is_negative() {
            den = -den;
            scale = -scale;
        }
        Self {
            numerator: num.scale(&scale),
            denom_constant: den,
            denom_pi_power: k,
        }
    }

    pub fn zero() -> Self {
        Self {
            numerator: PiPoly::zero(),
            denom_constant: BigInt::one(),
            denom_pi_power: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_pipoly(PiPoly::one())
    }

    pub fn from_pipoly(p: PiPoly) -> Self {
        Self::new(p, Rational::one(), 0)
    }

    /// `num / (den · π^k)` with integer parts, for writing down known values.
    pub fn from_parts(num: &[i64], den: i64, k: u32) -> Self {
        let coeffs = num.iter().map(|&c| Rational::from_integer(c.into())).collect();
        Self::new(PiPoly::from_coeffs(coeffs), Rational::from_integer(den.into()), k)
    }

    pub fn numerator(&self) -> &PiPoly {
        &self.numerator
    }

    pub fn denom_constant(&self) -> &BigInt {
        &self.denom_constant
    }

    pub fn denom_pi_power(&self) -> u32 {
        self.denom_pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn one_minus(&self) -> Self {
        &Self::one() - self
    }

    /// Rational approximation with π replaced by a 320-bit value.
    fn approx(&self) -> Rational {
        let pi = pi_rational();
        let mut num = Rational::zero();
        for c in self.numerator.coeffs().iter().rev() {
            num = num * &pi + c;
        }
        let den = Rational::from_integer(self.denom_constant.clone())
            * num_traits::pow(pi, self.denom_pi_power as usize);
        num / den
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.approx())
    }

    /// Fixed-point decimal with `digits` places after the point, correctly
    /// rounded for `digits` up to about 80.
    pub fn to_decimal(&self, digits: usize) -> String {
        let v = self.approx();
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scaled = (v.abs() * Rational::from_integer(scale.clone())).round().to_integer();
        let (int, frac) = scaled.div_rem(&scale);
        let sign = if v.is_negative() && !scaled.is_zero() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
        }
    }

    pub fn to_latex(&self) -> String {
        let num = pipoly_latex(&self.numerator);
        let den = match (self.denom_constant.is_one(), self.denom_pi_power) {
            (true, 0) => return num,
            (true, 1) => "\\pi".to_string(),
            (true, k) => format!("\\pi^{{{k}}}"),
            (false, 0) => self.denom_constant.to_string(),
            (false, 1) => format!("{}\\pi", self.denom_constant),
            (false, k) => format!("{}\\pi^{{{k}}}", self.denom_constant),
        };
        format!("\\frac{{{num}}}{{{den}}}")
    }
}

impl fmt::Display for PiRatio {
    /// `35/(12*pi^2)` or `(146400*pi^2 - 473473)/(11520*pi^4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = match (self.denom_constant.is_one(), self.denom_pi_power) {
            (true, 0) => return write!(f, "{}", self.numerator),
            (true, 1) => "pi".to_string(),
            (true, k) => format!("pi^{k}"),
            (false, 0) => self.denom_constant.to_string(),
            (false, 1) => format!("({}*pi)", self.denom_constant),
            (false, k) => format!("({}*pi^{k})", self.denom_constant),
        };
        if self.numerator.term_count() == 1 {
            write!(f, "{}/{den}", self.numerator)
        } else {
            write!(f, "({})/{den}", self.numerator)
        }
    }
}

impl Add for &PiRatio {
    type Output = PiRatio;
    fn add(self, rhs: &PiRatio) -> PiRatio {
        let k = self.denom_pi_power.max(rhs.denom_pi_power);
        let d1 = Rational::from_integer(self.denom_constant.clone());
        let d2 = Rational::from_integer(rhs.denom_constant.clone());
        let a = self
            .numerator
            .shift((k - self.denom_pi_power) as usize)
            .scale(&d2);
        let b = rhs
            .numerator
            .shift((k - rhs.denom_pi_power) as usize)
            .scale(&d1);
        PiRatio::new(&a + &b, d1 * d2, k)
    }
}

impl Neg for &PiRatio {
    type Output = PiRatio;
    fn neg(self) -> PiRatio {
        PiRatio {
            numerator: -&self.numerator,
            ..self.clone()
        }
    }
}

impl Sub for &PiRatio {
    type Output = PiRatio;
    fn sub(self, rhs: &PiRatio) -> PiRatio {
        self + &(-rhs)
    }
}
