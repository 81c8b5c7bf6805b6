//! Events the simulator can estimate, with a small text grammar:
//! `DISK_CP(4)`, `bseg-cpm(3, 1, pi)`, `TRIANGLE_BIPOINTED_M(5,2)`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EventSpec {
    /// `n` points in a disk are in convex position.
    DiskCp(usize),
    /// Exactly `m` of `n` points in a disk are hull vertices.
    DiskCpm(usize, usize),
    /// `n` points in a segment of angle `θ` plus the chord ends are in
    /// convex position.
    BsegCp(usize, f64),
    /// Exactly `m` of those `n` points are hull vertices.
    BsegCpm(usize, usize, f64),
    /// One point on the circle and `n − 1` in the disk are in convex position.
    DiskModelB(usize),
    TriangleCp(usize),
    SquareCp(usize),
    /// `n` points in triangle `ABC` together with `A` and `B` are in convex
    /// position.
    TriangleBipointed(usize),
    /// Exactly `m` of those `n` points are hull vertices.
    TriangleBipointedM(usize, usize),
}

impl EventSpec {
    pub fn validate(&self) -> Result<(), Error> {
        let bad = |why: &str| Err(Error::Domain(format!("{self}: {why}")));
        match *self {
            EventSpec::DiskCp(n)
            | EventSpec::TriangleCp(n)
            | EventSpec::SquareCp(n)
            | EventSpec::DiskModelB(n)
                if n == 0 =>
            {
                bad("needs at least one point")
            }
            EventSpec::DiskCpm(n, m) if m == 0 || m > n => bad("need 1 <= m <= n"),
            EventSpec::BsegCpm(n, m, _) | EventSpec::TriangleBipointedM(n, m) if m > n => {
                bad("need m <= n")
            }
            EventSpec::BsegCp(_, t) | EventSpec::BsegCpm(_, _, t) if !(t > 0.0 && t < TAU) => {
                bad("angle must lie in (0, 2π)")
            }
            _ => Ok(()),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            EventSpec::DiskCp(_) => "DISK_CP",
            EventSpec::DiskCpm(..) => "DISK_CPM",
            EventSpec::BsegCp(..) => "BSEG_CP",
            EventSpec::BsegCpm(..) => "BSEG_CPM",
            EventSpec::DiskModelB(_) => "DISK_MODEL_B",
            EventSpec::TriangleCp(_) => "TRIANGLE_CP",
            EventSpec::SquareCp(_) => "SQUARE_CP",
            EventSpec::TriangleBipointed(_) => "TRIANGLE_BIPOINTED",
            EventSpec::TriangleBipointedM(..) => "TRIANGLE_BIPOINTED_M",
        }
    }
}

impl fmt::Display for EventSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match *self {
            EventSpec::DiskCp(n)
            | EventSpec::DiskModelB(n)
            | EventSpec::TriangleCp(n)
            | EventSpec::SquareCp(n)
            | EventSpec::TriangleBipointed(n) => write!(f, "{name}({n})"),
            EventSpec::DiskCpm(n, m) | EventSpec::TriangleBipointedM(n, m) => {
                write!(f, "{name}({n}, {m})")
            }
            EventSpec::BsegCp(n, t) => write!(f, "{name}({n}, {t})"),
            EventSpec::BsegCpm(n, m, t) => write!(f, "{name}({n}, {m}, {t})"),
        }
    }
}

/// Reads `2.5`, `pi` or `k*pi`.
pub fn parse_angle(s: &str) -> Option<f64> {
    let s = s.trim().to_ascii_lowercase();
    if s == "pi" {
        return Some(PI);
    }
    if let Some(k) = s.strip_suffix("*pi") {
        return k.trim().parse::<f64>().ok().map(|k| k * PI);
    }
    s.parse().ok()
}

impl FromStr for EventSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("cannot read event {s:?}"));
        let (head, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let name = head.trim().to_ascii_uppercase().replace('-', "_");
        let int = |i: usize| -> Result<usize, Error> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let angle = |i: usize| -> Result<f64, Error> {
            args.get(i).and_then(|a| parse_angle(a)).ok_or_else(bad)
        };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        let spec = match name.as_str() {
            "DISK_CP" => arity(1).and(int(0).map(EventSpec::DiskCp)),
            "DISK_CPM" => arity(2).and_then(|_| Ok(EventSpec::DiskCpm(int(0)?, int(1)?))),
            "BSEG_CP" => arity(2).and_then(|_| Ok(EventSpec::BsegCp(int(0)?, angle(1)?))),
            "BSEG_CPM" => {
                arity(3).and_then(|_| Ok(EventSpec::BsegCpm(int(0)?, int(1)?, angle(2)?)))
            }
            "DISK_MODEL_B" => arity(1).and(int(0).map(EventSpec::DiskModelB)),
            "TRIANGLE_CP" => arity(1).and(int(0).map(EventSpec::TriangleCp)),
            "SQUARE_CP" => arity(1).and(int(0).map(EventSpec::SquareCp)),
            "TRIANGLE_BIPOINTED" => arity(1).and(int(0).map(EventSpec::TriangleBipointed)),
            "TRIANGLE_BIPOINTED_M" => {
                arity(2).and_then(|_| Ok(EventSpec::TriangleBipointedM(int(0)?, int(1)?)))
            }
            _ => Err(bad()),
        }?;
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!("DISK_CP(4)".parse::<EventSpec>().unwrap(), EventSpec::DiskCp(4));
        assert_eq!("disk-cpm( 5 , 3 )".parse::<EventSpec>().unwrap(), EventSpec::DiskCpm(5, 3));
        assert_eq!("BSEG_CP(3, pi)".parse::<EventSpec>().unwrap(), EventSpec::BsegCp(3, PI));
        assert_eq!(
            "bseg_cpm(3,1,0.5*pi)".parse::<EventSpec>().unwrap(),
            EventSpec::BsegCpm(3, 1, PI / 2.0)
        );
        for bad in ["DISK_CP", "DISK_CP(4, 2)", "CUBE_CP(3)", "BSEG_CP(2, 7)", "DISK_CPM(3, 4)"] {
            assert!(bad.parse::<EventSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for e in [
            EventSpec::DiskCp(7),
            EventSpec::BsegCpm(4, 2, 2.5),
            EventSpec::TriangleBipointedM(6, 3),
        ] {
            assert_eq!(e.to_string().parse::<EventSpec>().unwrap(), e);
        }
    }
}
