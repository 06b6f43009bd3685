//! Integer convex hulls and exact diameters.

pub type Point = (i64, i64);

fn cross(o: Point, a: Point, b: Point) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Counter-clockwise hull without collinear points (monotone chain).
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(pts.len() + 1);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

pub fn dist_sq(a: Point, b: Point) -> u128 {
    let dx = (a.0 - b.0).unsigned_abs() as u128;
    let dy = (a.1 - b.1).unsigned_abs() as u128;
    dx * dx + dy * dy
}

/// Largest squared distance between two of `points`.
pub fn diameter_sq(points: &[Point]) -> u128 {
    let hull = convex_hull(points);
    let mut best = 0;
    for (k, &a) in hull.iter().enumerate() {
        for &b in &hull[k + 1..] {
            best = best.max(dist_sq(a, b));
        }
    }
    best
}
