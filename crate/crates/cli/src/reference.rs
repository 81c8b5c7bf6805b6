//! Published closed forms the report checks against.

use diskcp::recursion::PiRatio;
use diskcp::trigring::Rational;

/// `P_D^n` for `2 ≤ n ≤ 8`.
pub fn disk(n: usize) -> Option<PiRatio> {
    let complement = match n {
        2 | 3 => return Some(PiRatio::one()),
        4 => PiRatio::from_parts(&[35], 12, 2),
        5 => PiRatio::from_parts(&[305], 48, 2),
        6 => PiRatio::from_parts(&[-473473, 0, 146400], 11520, 4),
        7 => PiRatio::from_parts(&[-2900611, 0, 512400], 23040, 4),
        8 => PiRatio::from_parts(&[62664108221, 0, -18670881600, 0, 1721664000], 48384000, 6),
        _ => return None,
    };
    Some(complement.one_minus())
}

/// `B_n(π)` for `2 ≤ n ≤ 6`.
pub fn half_disk(n: usize) -> Option<PiRatio> {
    let complement = match n {
        2 => PiRatio::from_parts(&[16], 3, 2),
        3 => PiRatio::from_parts(&[26], 3, 2),
        4 => PiRatio::from_parts(&[-83968, 0, 13725], 540, 4),
        5 => PiRatio::from_parts(&[-97091, 0, 12200], 240, 4),
        6 => PiRatio::from_parts(&[30749622272, 0, -4885982325, 0, 201757500], 2268000, 6),
        _ => return None,
    };
    Some(complement.one_minus())
}

/// `P(exactly m of n disk points are hull vertices)` for `4 ≤ n ≤ 6`.
pub fn disk_hull_size(n: usize, m: usize) -> Option<PiRatio> {
    Some(match (n, m) {
        (4, 3) => PiRatio::from_parts(&[35], 12, 2),
        (5, 4) => PiRatio::from_parts(&[65], 12, 2),
        (5, 3) => PiRatio::from_parts(&[15], 16, 2),
        (6, 5) => PiRatio::from_parts(&[-17017, 0, 3120], 288, 4),
        (6, 4) => PiRatio::from_parts(&[57057, 0, 7200], 3840, 4),
        (6, 3) => PiRatio::from_parts(&[1001], 320, 4),
        (n, m) if m == n => disk(n)?,
        _ => return None,
    })
}

/// `lim_{θ→0} B_n(θ) = 12^n / ((n+1)(2n+1)!)`.
pub fn zero_limit(n: usize) -> Rational {
    diskcp::recursion::zero_limit_formula(n)
}
