//! Known exact convex-position probabilities for the square, the triangle
//! and the triangle with two of its vertices added to the sample.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::trigring::{binomial, factorial, Rational};

/// Largest `n` accepted by [`buchta_bipointed_triangle`] and [`compositions`].
pub const MAX_COMPOSITION_N: usize = 20;

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `(C(2n−2, n−1)/n!)²`: `n` uniform points in a parallelogram are in
/// convex position.
pub fn valtr_square(n: u32) -> Rational {
    assert!(n >= 1);
    let r = Rational::new(binomial(2 * n - 2, n - 1), factorial(n));
    &r * &r
}

/// `2^n (3n−3)! / ((n−1)!³ (2n)!)`: the same for a triangle.
pub fn valtr_triangle(n: u32) -> Rational {
    assert!(n >= 1);
    let f = factorial(n - 1);
    Rational::new(
        BigInt::from(2).pow(n) * factorial(3 * n - 3),
        &f * &f * &f * factorial(2 * n),
    )
}

/// `2^n / (n!(n+1)!)`: `n` uniform points in triangle `ABC` together with
/// `A` and `B` are in convex position.
pub fn barany_bipointed_triangle(n: u32) -> Rational {
    Rational::new(BigInt::from(2).pow(n), factorial(n) * factorial(n + 1))
}

/// Probability that exactly `m` of the `n` points lie on the hull of
/// `{A, B, z₁..z_n}`: `Σ_{C ∈ Comp(n,m)} 2^m Π C_i / (S_i (1 + S_i))` with
/// `S_i` the partial sums.
pub fn buchta_bipointed_triangle(n: usize, m: usize) -> Rational {
    assert!(n <= MAX_COMPOSITION_N, "compositions of n > {MAX_COMPOSITION_N} are not enumerated");
    if m == 0 || m > n {
        return Rational::zero();
    }
    // tail(s, k): sum over ways to finish from partial sum s with k parts left
    fn tail(s: usize, k: usize, n: usize, memo: &mut HashMap<(usize, usize), Rational>) -> Rational {
        if k == 0 {
            return if s == n { Rational::one() } else { Rational::zero() };
        }
        if let Some(v) = memo.get(&(s, k)) {
            return v.clone();
        }
        let mut acc = Rational::zero();
        for c in 1..=(n - s).saturating_sub(k - 1) {
            let t = s + c;
            acc += Rational::new(c.into(), (t * (t + 1)).into()) * tail(t, k - 1, n, memo);
        }
        memo.insert((s, k), acc.clone());
        acc
    }
    int(BigInt::from(2).pow(m as u32)) * tail(0, m, n, &mut HashMap::new())
}

/// All compositions of `n` into `m` positive parts.
pub fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    assert!(n <= MAX_COMPOSITION_N);
    fn go(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for c in 1..=left.saturating_sub(parts - 1) {
            cur.push(c);
            go(left - c, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        go(n, m, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(valtr_square(4), q(25, 36));
        assert_eq!(valtr_triangle(4), q(2, 3));
        assert_eq!(valtr_square(3), Rational::one());
        assert_eq!(buchta_bipointed_triangle(2, 2), q(1, 3));
        assert_eq!(barany_bipointed_triangle(2), q(1, 3));
        assert_eq!(buchta_bipointed_triangle(2, 1), q(2, 3));
    }

    #[test]
    fn composition_listing() {
        assert!(compositions(2, 3).is_empty());
        let mut c = compositions(4, 2);
        c.sort();
        assert_eq!(c, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
    }
}
