//! Circular segments, the family of segments sharing a chord, uniform
//! samplers, hull predicates, and closed-form baselines for triangles and
//! squares.
//!
//! Frame: a segment of arc angle `θ` and radius `R` is the part of the disk
//! `|z| ≤ R` with `x ≥ R cos(θ/2)`. Its chord is vertical with endpoints
//! `w₁ = R e^{−iθ/2}` and `w₂ = R e^{iθ/2}`; the arc is on the right.

mod baselines;
mod hull;
mod sample;

use std::f64::consts::TAU;

use crate::quadrature::theta_minus_sin;
use crate::Error;

pub use baselines::{
    barany_bipointed_triangle, buchta_bipointed_triangle, compositions, valtr_square,
    valtr_triangle, MAX_COMPOSITION_N,
};
pub use hull::{convex_position, hull_vertex_count, hull_vertices};
pub use sample::{
    sample_circle, sample_disk, sample_segment, sample_segment_counting, sample_square,
    sample_triangle, TRIANGLE,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// `|SEG(θ, R)| = R²(θ − sin θ)/2`.
pub fn segment_area(theta: f64, radius: f64) -> Result<f64, Error> {
    let valid = theta > 0.0 && theta <= TAU && radius > 0.0;
    if !valid {
        return Err(Error::Domain(format!("no segment with θ = {theta}, R = {radius}")));
    }
    Ok(radius * radius * theta_minus_sin(theta) / 2.0)
}

/// `R_θ = sqrt(2/(θ − sin θ))`, the radius giving a segment of area 1.
pub fn unit_area_radius(theta: f64) -> f64 {
    (2.0 / theta_minus_sin(theta)).sqrt()
}

/// `L_θ = 2 R_θ sin(θ/2)`, the chord of the unit-area segment.
pub fn unit_area_chord(theta: f64) -> f64 {
    2.0 * unit_area_radius(theta) * (theta / 2.0).sin()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SegmentSpec {
    theta: f64,
    radius: f64,
}

impl SegmentSpec {
    pub fn new(theta: f64, radius: f64) -> Result<Self, Error> {
        segment_area(theta, radius)?;
        Ok(Self { theta, radius })
    }

    /// The segment of angle `θ` with area 1.
    pub fn unit_area(theta: f64) -> Result<Self, Error> {
        Self::new(theta, unit_area_radius(theta))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn area(&self) -> f64 {
        self.radius * self.radius * theta_minus_sin(self.theta) / 2.0
    }

    /// `x`-coordinate of the chord, `R cos(θ/2)`.
    pub fn chord_x(&self) -> f64 {
        self.radius * (self.theta / 2.0).cos()
    }

    pub fn half_chord(&self) -> f64 {
        self.radius * (self.theta / 2.0).sin()
    }

    pub fn chord_length(&self) -> f64 {
        2.0 * self.half_chord()
    }

    /// `[w₁, w₂]`, the ends of the chord.
    pub fn endpoints(&self) -> [Point; 2] {
        let (x, h) = (self.chord_x(), self.half_chord());
        [Point::new(x, -h), Point::new(x, h)]
    }

    /// `[x_min, x_max] × [−y_max, y_max]` enclosing the segment.
    pub fn bounding_box(&self) -> (f64, f64, f64) {
        let y = if self.theta >= std::f64::consts::PI {
            self.radius
        } else {
            self.half_chord()
        };
        (self.chord_x(), self.radius, y)
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.chord_x() && p.x * p.x + p.y * p.y <= self.radius * self.radius
    }

    /// Angle `φ` of the family member whose arc passes through `p`, and the
    /// angular position `γ` of `p` on that arc measured from the arc's
    /// midpoint. Members share this segment's chord; `φ = θ` is the segment
    /// itself and smaller `φ` are flatter.
    pub fn family_through(&self, p: Point) -> (f64, f64) {
        let h = self.half_chord();
        let d = p.x - self.chord_x();
        // centre (x_c − h·u, 0) with u = cot(φ/2)
        let u = (h * h - d * d - p.y * p.y) / (2.0 * d * h);
        let phi = 2.0 * 1f64.atan2(u);
        let centre = self.chord_x() - h * u;
        let gamma = p.y.atan2(p.x - centre);
        (phi, gamma)
    }
}

/// Centre offset, radius and relative area of the member `φ` of the family
/// of segments sharing the chord of the unit-area segment of angle `θ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyMember {
    pub center: f64,
    pub radius: f64,
    pub area_ratio: f64,
}

pub fn family_geometry(theta: f64, phi: f64) -> Result<FamilyMember, Error> {
    if !(phi > 0.0 && phi <= theta && theta < TAU) {
        return Err(Error::Domain(format!("need 0 < φ ≤ θ < 2π, got φ = {phi}, θ = {theta}")));
    }
    let (st, sp) = ((theta / 2.0).sin(), (phi / 2.0).sin());
    let cot = |x: f64| x.cos() / x.sin();
    Ok(FamilyMember {
        center: unit_area_chord(theta) / 2.0 * (cot(theta / 2.0) - cot(phi / 2.0)),
        radius: unit_area_radius(theta) * st / sp,
        area_ratio: (st / sp).powi(2) * theta_minus_sin(phi) / theta_minus_sin(theta),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn areas() {
        assert!((segment_area(TAU, 2.0).unwrap() - 4.0 * PI).abs() < 1e-14);
        assert!((segment_area(PI, 1.0).unwrap() - PI / 2.0).abs() < 1e-15);
        for theta in [0.01, 1.0, PI, 6.0] {
            let r = unit_area_radius(theta);
            assert!((segment_area(theta, r).unwrap() - 1.0).abs() < 1e-13);
        }
        assert!(segment_area(0.0, 1.0).is_err());
    }

    #[test]
    fn family_members() {
        let top = family_geometry(2.0, 2.0).unwrap();
        assert!(top.center.abs() < 1e-15);
        assert!((top.radius - unit_area_radius(2.0)).abs() < 1e-15);
        assert!((top.area_ratio - 1.0).abs() < 1e-15);
        let half = family_geometry(PI, PI / 2.0).unwrap();
        assert!((half.area_ratio - 2.0 * (PI / 2.0 - 1.0) / PI).abs() < 1e-14);
        assert!(family_geometry(1.0, 1.5).is_err());
    }

    #[test]
    fn point_on_member_arc_recovers_member() {
        let spec = SegmentSpec::unit_area(4.0).unwrap();
        let m = family_geometry(4.0, 2.5).unwrap();
        for gamma in [-1.2, 0.0, 0.7] {
            let p = Point::new(m.center + m.radius * f64::cos(gamma), m.radius * f64::sin(gamma));
            let (phi, g) = spec.family_through(p);
            assert!((phi - 2.5).abs() < 1e-12 && (g - gamma).abs() < 1e-12);
        }
    }
}
