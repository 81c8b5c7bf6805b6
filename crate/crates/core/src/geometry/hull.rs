//! Convex hull vertices with exact-sign orientation tests.

use robust::{orient2d, Coord};

use super::Point;

fn turn(a: Point, b: Point, c: Point) -> f64 {
    orient2d(Coord { x: a.x, y: a.y }, Coord { x: b.x, y: b.y }, Coord { x: c.x, y: c.y })
}

/// Indices of the strict hull vertices in counter-clockwise order. Points in
/// the relative interior of a hull edge are not vertices.
pub fn hull_vertices(points: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| {
        let (p, q) = (points[i], points[j]);
        p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
    });
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() <= 2 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    // lower chain, then upper chain
    for pass in 0..2 {
        let start = hull.len();
        let order: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(idx.iter())
        } else {
            Box::new(idx.iter().rev())
        };
        for &i in order {
            while hull.len() >= start + 2
                && turn(points[hull[hull.len() - 2]], points[hull[hull.len() - 1]], points[i]) <= 0.0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// Number of points that are vertices of the convex hull.
pub fn hull_vertex_count(points: &[Point]) -> usize {
    hull_vertices(points).len()
}

/// Whether every point is a hull vertex.
pub fn convex_position(points: &[Point]) -> bool {
    hull_vertex_count(points) == points.len()
}
