//! Taffy diagrams rebuilt from layer counts.
//!
//! Three pegs sit on the x axis. A forward pull with counts `(a, b)` is
//! drawn from the straight segment of slope `a/b` on the pillowcase whose
//! front face is the upper half plane and whose back face is the lower one;
//! the four pillowcase edges are the axis pieces left of peg 1, between pegs
//! 1-2, between pegs 2-3 and right of peg 3. Each crossing of the segment
//! with an edge becomes a point on the axis and each stretch between
//! crossings a semicircle, so the strand is embedded by construction.
//! Crossings between pegs are packed against the middle peg, which keeps the
//! count on each gap line minimal. Negative numbers are the half-turn
//! rotation of the diagram of `-1/q`.

use std::cmp::Ordering;
use std::f64::consts::PI;

use thiserror::Error;

use super::geometry::{Piece, Point, EPS};
use crate::extrational::ExtRational;
use crate::scalar::Int;
use crate::treewalk::LayerCounts;

/// Largest total layer count [`build_taffy`] will draw.
pub const MAX_DRAWN_LAYERS: i64 = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaffyError {
    #[error("{0} has more than {max} layers to draw", max = MAX_DRAWN_LAYERS)]
    TooManyLayers(String),
}

/// Spacing used when laying out a diagram.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TaffyLayout {
    pub peg_radius: f64,
    /// Distance between neighbouring strands on the axis.
    pub strand_gap: f64,
    /// Lower bound on the distance between neighbouring pegs.
    pub min_peg_spacing: f64,
}

impl Default for TaffyLayout {
    fn default() -> Self {
        TaffyLayout {
            peg_radius: 8.0,
            strand_gap: 6.0,
            min_peg_spacing: 60.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TaffyDiagram {
    /// Left to right, on a horizontal line.
    pub pegs: [Point; 3],
    pub peg_radius: f64,
    /// Consecutive pieces of the single strand.
    pub strand: Vec<Piece>,
    pub counts: LayerCounts<i64>,
}

impl TaffyDiagram {
    /// x coordinates of the lines between pegs 1-2 and 2-3.
    pub fn gap_lines(&self) -> (f64, f64) {
        (
            (self.pegs[0].x + self.pegs[1].x) / 2.0,
            (self.pegs[1].x + self.pegs[2].x) / 2.0,
        )
    }

    /// Half turn about the middle peg; left and right counts trade places.
    pub fn rotated(&self) -> TaffyDiagram {
        let c = self.pegs[1];
        let mut pegs = self.pegs.map(|p| p.rotated_about(c));
        pegs.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap_or(Ordering::Equal));
        TaffyDiagram {
            pegs,
            peg_radius: self.peg_radius,
            strand: self.strand.iter().map(|p| p.rotated_about(c)).collect(),
            counts: LayerCounts {
                right: self.counts.left,
                left: self.counts.right,
            },
        }
    }
}

pub fn build_taffy<T: Int>(q: &ExtRational<T>) -> Result<TaffyDiagram, TaffyError> {
    build_taffy_with(q, &TaffyLayout::default())
}

pub fn build_taffy_with<T: Int>(
    q: &ExtRational<T>,
    layout: &TaffyLayout,
) -> Result<TaffyDiagram, TaffyError> {
    let too_many = || TaffyError::TooManyLayers(q.to_string());
    let a = q.numer().abs().to_i64().ok_or_else(too_many)?;
    let b = q.denom().to_i64().ok_or_else(too_many)?;
    if a.checked_add(b).is_none_or(|t| t > MAX_DRAWN_LAYERS) {
        return Err(too_many());
    }
    if q.is_negative() {
        // counts (b, a) belong to -1/q = b/a
        return Ok(forward_diagram(b, a, layout).rotated());
    }
    Ok(forward_diagram(a, b, layout))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Edge {
    /// Axis left of peg 1.
    Outer1,
    /// Between pegs 1 and 2.
    Inner12,
    /// Between pegs 2 and 3.
    Inner23,
    /// Axis right of peg 3.
    Outer3,
}

#[derive(Clone, Copy, Debug)]
enum Mark {
    Peg(usize),
    Cross {
        edge: Edge,
        /// Position along the edge, as numerator over a shared denominator,
        /// measured from the peg end of the outer edges and from the lower
        /// numbered peg of the inner ones.
        pos: i64,
    },
}

fn corner_peg(x: i64, y: i64) -> usize {
    match (x.rem_euclid(2), y.rem_euclid(2)) {
        (0, 0) => 0,
        (1, 0) => 1,
        (1, 1) => 2,
        _ => unreachable!("the segment never ends at the point at infinity"),
    }
}

fn fold(n: i64, den: i64) -> i64 {
    let m = n.rem_euclid(2 * den);
    if m > den {
        2 * den - m
    } else {
        m
    }
}

/// Marks along the pillowcase segment from a corner in direction `(b, a)`,
/// and whether the first stretch lies in the upper half plane.
fn pillowcase_marks(a: i64, b: i64) -> (Vec<Mark>, bool) {
    let (x0, y0) = if b % 2 == 0 { (1, 0) } else { (0, 0) };
    let mut marks = vec![Mark::Peg(corner_peg(x0, y0))];
    let (mut i, mut j) = (1, 1);
    while i < b || j < a {
        // compare i/b with j/a
        let vertical_first = j >= a || (i < b && i * a < j * b);
        if vertical_first {
            let edge = if (x0 + i) % 2 == 0 { Edge::Outer1 } else { Edge::Inner23 };
            marks.push(Mark::Cross {
                edge,
                pos: fold(y0 * b + a * i, b),
            });
            i += 1;
        } else {
            let edge = if (y0 + j) % 2 == 0 { Edge::Inner12 } else { Edge::Outer3 };
            let pos = fold(x0 * a + b * j, a);
            // the top edge runs from peg 3 (x = 1) out to infinity (x = 0)
            let pos = if edge == Edge::Outer3 { a - pos } else { pos };
            marks.push(Mark::Cross { edge, pos });
            j += 1;
        }
    }
    marks.push(Mark::Peg(corner_peg(x0 + b, y0 + a)));
    (marks, (x0 + y0) % 2 == 0)
}

fn forward_diagram(a: i64, b: i64, layout: &TaffyLayout) -> TaffyDiagram {
    let r = layout.peg_radius;
    let gap = layout.strand_gap;
    let counts = LayerCounts { right: a, left: b };

    if a == 0 || b == 0 {
        let spacing = layout.min_peg_spacing.max(2.0 * (r + gap));
        let pegs = [0.0, spacing, 2.0 * spacing].map(|x| Point::new(x, 0.0));
        let (p, q) = if a == 0 { (0, 1) } else { (1, 2) };
        let strand = vec![Piece::Segment {
            from: Point::new(pegs[p].x + r, 0.0),
            to: Point::new(pegs[q].x - r, 0.0),
        }];
        return TaffyDiagram {
            pegs,
            peg_radius: r,
            strand,
            counts,
        };
    }

    let (marks, first_upper) = pillowcase_marks(a, b);

    // Rank the crossings along each edge, nearest its peg first.
    let mut per_edge: [Vec<(i64, usize)>; 4] = Default::default();
    for (k, m) in marks.iter().enumerate() {
        if let Mark::Cross { edge, pos } = *m {
            per_edge[edge as usize].push((pos, k));
        }
    }
    for list in per_edge.iter_mut() {
        list.sort_unstable();
    }
    let inner = per_edge[Edge::Inner12 as usize]
        .len()
        .max(per_edge[Edge::Inner23 as usize].len()) as f64;
    let spacing = layout.min_peg_spacing.max(2.0 * (r + gap * (inner + 1.0)));
    let pegs = [0.0, spacing, 2.0 * spacing].map(|x| Point::new(x, 0.0));

    let mut xs = vec![0.0; marks.len()];
    for (e, list) in per_edge.iter().enumerate() {
        let n = list.len();
        for (rank, &(_, k)) in list.iter().enumerate() {
            let step = gap * (rank as f64 + 1.0);
            xs[k] = match e {
                0 => pegs[0].x - r - step,
                // packed against peg 2, in order from peg 1
                1 => pegs[1].x - r - gap * (n - rank) as f64,
                2 => pegs[1].x + r + step,
                _ => pegs[2].x + r + step,
            };
        }
    }
    let last = marks.len() - 1;
    for k in [0, last] {
        let Mark::Peg(p) = marks[k] else { unreachable!() };
        let neighbour = if k == 0 { xs[1] } else { xs[last - 1] };
        xs[k] = if neighbour > pegs[p].x {
            pegs[p].x + r
        } else {
            pegs[p].x - r
        };
    }

    let strand = xs
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            let upper = first_upper == (k % 2 == 0);
            semicircle(w[0], w[1], upper)
        })
        .collect();
    TaffyDiagram {
        pegs,
        peg_radius: r,
        strand,
        counts,
    }
}

fn semicircle(from: f64, to: f64, upper: bool) -> Piece {
    let rightward = from < to;
    Piece::Arc {
        center: Point::new((from + to) / 2.0, 0.0),
        radius: (to - from).abs() / 2.0,
        start: if rightward { PI } else { 0.0 },
        sweep: match (upper, rightward) {
            (true, true) | (false, false) => -PI,
            _ => PI,
        },
    }
}

/// Measurements taken by [`verify_taffy`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaffyReport {
    /// Crossings with the line between pegs 1 and 2.
    pub left_crossings: usize,
    /// Crossings with the line between pegs 2 and 3.
    pub right_crossings: usize,
    pub counts_match: bool,
    /// No two pieces meet except consecutive ones at their shared end.
    pub embedded: bool,
    /// No piece enters a peg.
    pub avoids_pegs: bool,
    /// Pieces chain end to start and both ends rest on peg boundaries.
    pub single_arc: bool,
}

impl TaffyReport {
    pub fn passes(&self) -> bool {
        self.counts_match && self.embedded && self.avoids_pegs && self.single_arc
    }
}

pub fn verify_taffy(d: &TaffyDiagram) -> TaffyReport {
    let (g1, g2) = d.gap_lines();
    let left_crossings: usize = d.strand.iter().map(|p| p.crossings_with_vertical(g1)).sum();
    let right_crossings: usize = d.strand.iter().map(|p| p.crossings_with_vertical(g2)).sum();
    let counts_match = i64::try_from(left_crossings) == Ok(d.counts.left)
        && i64::try_from(right_crossings) == Ok(d.counts.right);

    let tol = EPS * d.peg_radius.max(1.0) * 10.0;
    let mut embedded = true;
    'outer: for i in 0..d.strand.len() {
        for j in i + 1..d.strand.len() {
            let hits = d.strand[i].intersections(&d.strand[j]);
            let allowed = if j == i + 1 {
                Some(d.strand[i].end())
            } else {
                None
            };
            let bad = hits
                .iter()
                .any(|h| allowed.is_none_or(|joint| h.dist(joint) > tol));
            if bad {
                embedded = false;
                break 'outer;
            }
        }
    }

    let avoids_pegs = d.strand.iter().all(|piece| {
        d.pegs
            .iter()
            .all(|&peg| piece.distance_to(peg) >= d.peg_radius - tol)
    });

    let on_peg = |p: Point| {
        d.pegs
            .iter()
            .any(|&peg| (p.dist(peg) - d.peg_radius).abs() <= tol)
    };
    let chained = d
        .strand
        .windows(2)
        .all(|w| w[0].end().dist(w[1].start()) <= tol);
    let single_arc = !d.strand.is_empty()
        && chained
        && on_peg(d.strand[0].start())
        && on_peg(d.strand[d.strand.len() - 1].end());

    TaffyReport {
        left_crossings,
        right_crossings,
        counts_match,
        embedded,
        avoids_pegs,
        single_arc,
    }
}
