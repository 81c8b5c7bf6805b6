use std::f64::consts::PI;

use diskcp_web::{b_curve, hull, p_disk, segment_sample};

#[test]
fn curve_is_a_probability_in_the_right_places() {
    let c = b_curve(3, 64).unwrap();
    assert_eq!(c.len(), 128);
    for xy in c.chunks(2) {
        assert!(xy[0] > 0.0 && xy[0] < 2.0 * PI);
        assert!((0.0..=1.0).contains(&xy[1]));
    }
    assert!(b_curve(3, 4).unwrap()[1] < b_curve(3, 4).unwrap()[7]);
}

#[test]
fn sample_keeps_chord_ends_on_the_hull() {
    let pts = segment_sample(12, 2.5, 7).unwrap();
    assert_eq!(pts.len(), 28);
    assert_eq!(pts, segment_sample(12, 2.5, 7).unwrap());
    let h = hull(&pts);
    assert!(h.contains(&0) && h.contains(&1));
    assert!(segment_sample(3, 7.0, 1).is_err());
}

#[test]
fn exact_disk_text() {
    assert_eq!(p_disk(4, 10).unwrap(), "1 - 35/(12*pi^2) = 0.7044798810");
    assert!(p_disk(1, 10).unwrap_err().contains("DomainError"));
}
