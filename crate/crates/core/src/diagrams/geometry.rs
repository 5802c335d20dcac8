//! Planar segments and circular arcs, with the intersection tests the taffy
//! verifier needs. Coordinates are y-up.

use std::f64::consts::{PI, TAU};

pub const EPS: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Half turn about `c`.
    pub fn rotated_about(self, c: Point) -> Point {
        Point::new(2.0 * c.x - self.x, 2.0 * c.y - self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    Segment {
        from: Point,
        to: Point,
    },
    /// Points `center + radius·(cos θ, sin θ)` for θ from `start` to
    /// `start + sweep`; a negative sweep runs clockwise.
    Arc {
        center: Point,
        radius: f64,
        start: f64,
        sweep: f64,
    },
}

impl Piece {
    pub fn start(&self) -> Point {
        match *self {
            Piece::Segment { from, .. } => from,
            Piece::Arc {
                center,
                radius,
                start,
                ..
            } => on_circle(center, radius, start),
        }
    }

    pub fn end(&self) -> Point {
        match *self {
            Piece::Segment { to, .. } => to,
            Piece::Arc {
                center,
                radius,
                start,
                sweep,
            } => on_circle(center, radius, start + sweep),
        }
    }

    pub fn rotated_about(&self, c: Point) -> Piece {
        match *self {
            Piece::Segment { from, to } => Piece::Segment {
                from: from.rotated_about(c),
                to: to.rotated_about(c),
            },
            Piece::Arc {
                center,
                radius,
                start,
                sweep,
            } => Piece::Arc {
                center: center.rotated_about(c),
                radius,
                start: start + PI,
                sweep,
            },
        }
    }

    /// Transversal crossings with the vertical line `x = line_x`.
    pub fn crossings_with_vertical(&self, line_x: f64) -> usize {
        match *self {
            Piece::Segment { from, to } => {
                usize::from((from.x - line_x) * (to.x - line_x) < 0.0)
            }
            Piece::Arc {
                center,
                radius,
                start,
                sweep,
            } => {
                let c = (line_x - center.x) / radius;
                if c.abs() >= 1.0 {
                    return 0;
                }
                let a = c.acos();
                [a, -a]
                    .into_iter()
                    .filter(|&theta| angle_strictly_inside(theta, start, sweep))
                    .count()
            }
        }
    }

    /// Least distance from `p` to any point of the piece.
    pub fn distance_to(&self, p: Point) -> f64 {
        match *self {
            Piece::Segment { from, to } => {
                let (dx, dy) = (to.x - from.x, to.y - from.y);
                let len2 = dx * dx + dy * dy;
                let t = if len2 == 0.0 {
                    0.0
                } else {
                    (((p.x - from.x) * dx + (p.y - from.y) * dy) / len2).clamp(0.0, 1.0)
                };
                p.dist(Point::new(from.x + t * dx, from.y + t * dy))
            }
            Piece::Arc {
                center,
                radius,
                start,
                sweep,
            } => {
                let d = p.dist(center);
                let theta = (p.y - center.y).atan2(p.x - center.x);
                if d > 0.0 && angle_inside(theta, start, sweep) {
                    (d - radius).abs()
                } else {
                    p.dist(self.start()).min(p.dist(self.end()))
                }
            }
        }
    }

    /// Every common point of two pieces (a sample point when they overlap).
    pub fn intersections(&self, other: &Piece) -> Vec<Point> {
        match (*self, *other) {
            (Piece::Segment { from: a, to: b }, Piece::Segment { from: c, to: d }) => {
                segment_segment(a, b, c, d)
            }
            (Piece::Segment { from, to }, arc @ Piece::Arc { .. })
            | (arc @ Piece::Arc { .. }, Piece::Segment { from, to }) => segment_arc(from, to, &arc),
            (a @ Piece::Arc { .. }, b @ Piece::Arc { .. }) => arc_arc(&a, &b),
        }
    }
}

fn on_circle(c: Point, r: f64, theta: f64) -> Point {
    Point::new(c.x + r * theta.cos(), c.y + r * theta.sin())
}

// Offset of `theta` along the sweep direction, in [0, TAU).
fn sweep_offset(theta: f64, start: f64, sweep: f64) -> f64 {
    let raw = if sweep >= 0.0 { theta - start } else { start - theta };
    raw.rem_euclid(TAU)
}

fn angle_inside(theta: f64, start: f64, sweep: f64) -> bool {
    let off = sweep_offset(theta, start, sweep);
    off <= sweep.abs() + EPS || off >= TAU - EPS
}

fn angle_strictly_inside(theta: f64, start: f64, sweep: f64) -> bool {
    let off = sweep_offset(theta, start, sweep);
    off > EPS && off < sweep.abs() - EPS
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

fn segment_segment(a: Point, b: Point, c: Point, d: Point) -> Vec<Point> {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    let scale = (a.dist(b) * c.dist(d)).max(1.0);
    let tol = EPS * scale;
    if d1.abs() <= tol && d2.abs() <= tol {
        // collinear: report the shared points, if any
        let on = |p: Point, s: Point, e: Point| {
            p.x >= s.x.min(e.x) - EPS
                && p.x <= s.x.max(e.x) + EPS
                && p.y >= s.y.min(e.y) - EPS
                && p.y <= s.y.max(e.y) + EPS
        };
        return [a, b, c, d]
            .into_iter()
            .enumerate()
            .filter(|&(i, p)| if i < 2 { on(p, c, d) } else { on(p, a, b) })
            .map(|(_, p)| p)
            .collect();
    }
    let straddles = |x: f64, y: f64| (x > tol && y < -tol) || (x < -tol && y > tol);
    let touches = |x: f64| x.abs() <= tol;
    let hit = (straddles(d1, d2) || touches(d1) || touches(d2))
        && (straddles(d3, d4) || touches(d3) || touches(d4));
    if !hit {
        return Vec::new();
    }
    let t = d1 / (d1 - d2);
    vec![Point::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))]
}

fn segment_arc(from: Point, to: Point, arc: &Piece) -> Vec<Point> {
    let Piece::Arc {
        center,
        radius,
        start,
        sweep,
    } = *arc
    else {
        unreachable!()
    };
    let (dx, dy) = (to.x - from.x, to.y - from.y);
    let (fx, fy) = (from.x - center.x, from.y - center.y);
    let a = dx * dx + dy * dy;
    let b = 2.0 * (fx * dx + fy * dy);
    let c = fx * fx + fy * fy - radius * radius;
    let disc = b * b - 4.0 * a * c;
    if a == 0.0 || disc < -EPS * radius * radius {
        return Vec::new();
    }
    let root = disc.max(0.0).sqrt();
    let mut out = Vec::new();
    for t in [(-b - root) / (2.0 * a), (-b + root) / (2.0 * a)] {
        if (-EPS..=1.0 + EPS).contains(&t) {
            let p = Point::new(from.x + t * dx, from.y + t * dy);
            let theta = (p.y - center.y).atan2(p.x - center.x);
            if angle_inside(theta, start, sweep) && !out.iter().any(|q: &Point| q.dist(p) < EPS) {
                out.push(p);
            }
        }
    }
    out
}

fn arc_arc(a: &Piece, b: &Piece) -> Vec<Point> {
    let (
        Piece::Arc {
            center: c1,
            radius: r1,
            start: s1,
            sweep: w1,
        },
        Piece::Arc {
            center: c2,
            radius: r2,
            start: s2,
            sweep: w2,
        },
    ) = (*a, *b)
    else {
        unreachable!()
    };
    let d = c1.dist(c2);
    if d < EPS && (r1 - r2).abs() < EPS {
        // same circle: overlapping iff some endpoint of one lies on the other
        return [a.start(), a.end()]
            .into_iter()
            .filter(|p| {
                let th = (p.y - c2.y).atan2(p.x - c2.x);
                angle_inside(th, s2, w2)
            })
            .chain([b.start(), b.end()].into_iter().filter(|p| {
                let th = (p.y - c1.y).atan2(p.x - c1.x);
                angle_inside(th, s1, w1)
            }))
            .collect();
    }
    if d > r1 + r2 + EPS || d < (r1 - r2).abs() - EPS || d < EPS {
        return Vec::new();
    }
    let along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h = (r1 * r1 - along * along).max(0.0).sqrt();
    let (ux, uy) = ((c2.x - c1.x) / d, (c2.y - c1.y) / d);
    let base = Point::new(c1.x + along * ux, c1.y + along * uy);
    let mut out: Vec<Point> = Vec::new();
    for sign in [1.0, -1.0] {
        let p = Point::new(base.x - sign * h * uy, base.y + sign * h * ux);
        let t1 = (p.y - c1.y).atan2(p.x - c1.x);
        let t2 = (p.y - c2.y).atan2(p.x - c2.x);
        if angle_inside(t1, s1, w1)
            && angle_inside(t2, s2, w2)
            && !out.iter().any(|q| q.dist(p) < EPS)
        {
            out.push(p);
        }
    }
    out
}
