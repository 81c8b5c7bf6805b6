//! Text, LaTeX and JSON renderings of [`TrigPoly`].

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{PiPoly, Rational, TermKey, TrigKind, TrigPoly};
use crate::Error;

fn trig_arg_text(m: u32) -> String {
    match m {
        1 => "theta/2".to_string(),
        2 => "theta".to_string(),
        m if m % 2 == 0 => format!("{}*theta", m / 2),
        m => format!("{}*theta/2", m),
    }
}

fn trig_arg_latex(m: u32) -> String {
    match m {
        1 => "\\frac{\\theta}{2}".to_string(),
        2 => "\\theta".to_string(),
        m if m % 2 == 0 => format!("{}\\theta", m / 2),
        m => format!("\\frac{{{}\\theta}}{{2}}", m),
    }
}

/// Splits a coefficient into sign and magnitude when it is a single
/// monomial; multi-term π-polynomials keep their own signs.
fn split_sign(c: &PiPoly) -> (bool, PiPoly) {
    if c.term_count() == 1 {
        let k = c.degree().unwrap();
        let r = c.coeff(k);
        if r.is_negative() {
            return (true, -c);
        }
    }
    (false, c.clone())
}

impl TrigPoly {
    /// Canonical text grammar: `p/q` rationals, `pi`, explicit `*` and `^`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms().enumerate() {
            let (neg, mag) = split_sign(c);
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors: Vec<String> = Vec::new();
            let unit = mag.as_rational().is_some_and(|r| r.is_one());
            if !unit {
                if mag.term_count() > 1 {
                    factors.push(format!("({})", mag));
                } else {
                    factors.push(mag.to_string());
                }
            }
            match k.theta_pow {
                0 => {}
                1 => factors.push("theta".into()),
                a => factors.push(format!("theta^{a}")),
            }
            if k.freq > 0 {
                let name = match k.kind {
                    TrigKind::Sin => "sin",
                    TrigKind::Cos => "cos",
                };
                factors.push(format!("{name}({})", trig_arg_text(k.freq)));
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms().enumerate() {
            let (neg, mag) = split_sign(c);
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let unit = mag.as_rational().is_some_and(|r| r.is_one());
            let bare = k.theta_pow == 0 && k.freq == 0;
            if !unit || bare {
                if mag.term_count() > 1 {
                    let _ = write!(out, "\\left({}\\right)", pipoly_latex(&mag));
                } else {
                    out.push_str(&pipoly_latex(&mag));
                }
            }
            match k.theta_pow {
                0 => {}
                1 => out.push_str("\\theta"),
                a => {
                    let _ = write!(out, "\\theta^{{{a}}}");
                }
            }
            if k.freq > 0 {
                let name = match k.kind {
                    TrigKind::Sin => "\\sin",
                    TrigKind::Cos => "\\cos",
                };
                let _ = write!(out, "{name}\\left({}\\right)", trig_arg_latex(k.freq));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TrigPolyJson::from(self)).expect("trig polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let doc: TrigPolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        doc.try_into()
    }
}

fn rational_latex(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

pub(crate) fn pipoly_latex(p: &PiPoly) -> String {
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        } else if c.is_negative() {
            out.push('-');
        }
        first = false;
        let mag = c.abs();
        if k == 0 || !mag.is_one() {
            out.push_str(&rational_latex(&mag));
        }
        match k {
            0 => {}
            1 => out.push_str("\\pi"),
            k => {
                let _ = write!(out, "\\pi^{{{k}}}");
            }
        }
    }
    out
}

/// Wire form: `{"terms":[{"thetaPow":a,"freq":m,"kind":"sin","coeff":["p/q",...]}]}`.
#[derive(Serialize, Deserialize)]
struct TrigPolyJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct TermJson {
    theta_pow: u32,
    freq: u32,
    kind: KindJson,
    coeff: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindJson {
    Sin,
    Cos,
}

impl From<&TrigPoly> for TrigPolyJson {
    fn from(f: &TrigPoly) -> Self {
        // BTreeMap order is (thetaPow, freq, kind) already.
        let terms = f
            .terms()
            .map(|(k, c)| TermJson {
                theta_pow: k.theta_pow,
                freq: k.freq,
                kind: match k.kind {
                    TrigKind::Sin => KindJson::Sin,
                    TrigKind::Cos => KindJson::Cos,
                },
                coeff: c
                    .coeffs()
                    .iter()
                    .map(|r| format!("{}/{}", r.numer(), r.denom()))
                    .collect(),
            })
            .collect();
        TrigPolyJson { terms }
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl TryFrom<TrigPolyJson> for TrigPoly {
    type Error = Error;
    fn try_from(doc: TrigPolyJson) -> Result<Self, Error> {
        let mut out = TrigPoly::zero();
        for t in doc.terms {
            let coeffs = t
                .coeff
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>, _>>()?;
            let kind = match t.kind {
                KindJson::Sin => TrigKind::Sin,
                KindJson::Cos => TrigKind::Cos,
            };
            out.add_term(
                TermKey::new(t.theta_pow, t.freq, kind),
                &PiPoly::from_coeffs(coeffs),
            );
        }
        Ok(out)
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l1() -> TrigPoly {
        &TrigPoly::sin_half(1) * &(&TrigPoly::theta() - &TrigPoly::sin_half(2))
    }

    #[test]
    fn text_form() {
        assert_eq!(
            l1().to_text(),
            "-1/2*cos(theta/2) + 1/2*cos(3*theta/2) + theta*sin(theta/2)"
        );
        assert_eq!(TrigPoly::zero().to_text(), "0");
    }

    #[test]
    fn json_shape_and_round_trip() {
        let f = l1().reflect();
        let s = f.to_json();
        assert!(s.starts_with("{\"terms\":[{\"thetaPow\":0,\"freq\":1,\"kind\":\"cos\",\"coeff\":["));
        assert_eq!(TrigPoly::from_json(&s).unwrap(), f);
        assert!(TrigPoly::from_json("{\"terms\":[{\"thetaPow\":0,\"freq\":1,\"kind\":\"sin\",\"coeff\":[\"1/0\"]}]}").is_err());
    }

    #[test]
    fn latex_form() {
        assert_eq!(
            TrigPoly::sin_half(3).scale(&PiPoly::from_ratio(-1, 2)).to_latex(),
            "-\\frac{1}{2}\\sin\\left(\\frac{3\\theta}{2}\\right)"
        );
    }
}
