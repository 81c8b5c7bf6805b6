//! Shared fixtures: published closed forms of `L_0..L_5`, built from ring
//! operations, and random trig polynomials.

#![allow(dead_code)]

use diskcp::trigring::{PiPoly, Rational, TermKey, TrigKind, TrigPoly};
use proptest::prelude::*;

fn s() -> TrigPoly {
    TrigPoly::sin_half(1)
}

fn sin() -> TrigPoly {
    TrigPoly::sin_half(2)
}

fn t(a: u32) -> TrigPoly {
    TrigPoly::theta_pow(a)
}

fn c(n: i64) -> TrigPoly {
    TrigPoly::from_int(n)
}

/// Sum of `coefficient × product` terms.
fn poly(terms: &[(i64, TrigPoly)]) -> TrigPoly {
    terms
        .iter()
        .fold(TrigPoly::zero(), |acc, (k, f)| &acc + &(&c(*k) * f))
}

pub fn printed(n: usize) -> TrigPoly {
    let s = s();
    let pre = |d: i64| s.scale_rational(&Rational::new(1.into(), d.into()));
    match n {
        0 => s,
        1 => &s * &(&t(1) - &sin()),
        2 => {
            let inner = poly(&[(3, t(2)), (1, sin().pow(2)), (-16, s.pow(2))]);
            &pre(6) * &inner
        }
        3 => {
            let inner = poly(&[
                (2, &s.pow(4) * &sin()),
                (9, t(3)),
                (27, &s.pow(2) * &t(1)),
                (7, &s.pow(2) * &sin()),
                (105, &sin() - &t(1)),
            ]);
            &pre(54) * &inner
        }
        4 => {
            let inner = poly(&[
                (160, s.pow(6)),
                (48, s.pow(8)),
                (60, s.pow(4)),
                (540, t(4)),
                (-13725, t(2)),
                (-7200, &sin() * &t(1)),
                (83700, s.pow(2)),
            ]);
            &pre(12960) * &inner
        }
        5 => {
            let inner = poly(&[
                (40500, &sin() * &t(2)),
                (-584, &s.pow(4) * &sin()),
                (12000, &s.pow(4) * &t(1)),
                (-272, &s.pow(6) * &sin()),
                (-549000, t(3)),
                (-2745000, &s.pow(2) * &t(1)),
                (44270, &s.pow(2) * &sin()),
                (7102095, &t(1) - &sin()),
                (-64, &s.pow(8) * &sin()),
                (10800, t(5)),
            ]);
            &pre(1296000) * &inner
        }
        _ => unreachable!(),
    }
}

pub fn pipoly() -> impl Strategy<Value = PiPoly> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..=2).prop_map(|cs| {
        PiPoly::from_coeffs(
            cs.into_iter()
                .map(|(n, d)| Rational::new(n.into(), d.into()))
                .collect(),
        )
    })
}

pub fn trigpoly() -> impl Strategy<Value = TrigPoly> {
    let term = (0u32..=3, 0u32..=4, any::<bool>(), pipoly()).prop_map(|(a, m, sin, c)| {
        let kind = if sin { TrigKind::Sin } else { TrigKind::Cos };
        (TermKey::new(a, m, kind), c)
    });
    prop::collection::vec(term, 0..=4).prop_map(TrigPoly::from_terms)
}
