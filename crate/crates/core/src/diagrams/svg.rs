//! SVG output for taffy and tangle diagrams.

use std::fmt::Write;

use thiserror::Error;

use super::geometry::{Piece, Point};
use super::taffy::{verify_taffy, TaffyDiagram, TaffyLayout, TaffyReport};
use super::tangle::{CrossingPosition, TangleDiagram};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    /// Multiplies the width and height of the canvas.
    pub scale: f64,
    pub stroke_width: f64,
    /// Spacing between neighbouring taffy strands.
    pub strand_gap: f64,
    /// Length of the break in an under-strand, on each side of the over-strand.
    pub crossing_gap: f64,
    pub peg_radius: f64,
    /// Side of one tangle tile.
    pub tile: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            scale: 1.0,
            stroke_width: 2.0,
            strand_gap: 6.0,
            crossing_gap: 4.0,
            peg_radius: 8.0,
            tile: 40.0,
        }
    }
}

impl SvgOptions {
    pub fn taffy_layout(&self) -> TaffyLayout {
        TaffyLayout {
            peg_radius: self.peg_radius,
            strand_gap: self.strand_gap,
            ..TaffyLayout::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("diagram fails verification: {0:?}")]
    Unverified(TaffyReport),
    #[error("option {0} must be positive and finite")]
    BadOption(&'static str),
}

fn check_options(o: &SvgOptions) -> Result<(), RenderError> {
    let fields = [
        ("scale", o.scale),
        ("stroke width", o.stroke_width),
        ("strand gap", o.strand_gap),
        ("peg radius", o.peg_radius),
        ("tile", o.tile),
    ];
    for (name, v) in fields {
        if !(v.is_finite() && v > 0.0) {
            return Err(RenderError::BadOption(name));
        }
    }
    if !(o.crossing_gap.is_finite() && o.crossing_gap >= 0.0) {
        return Err(RenderError::BadOption("crossing gap"));
    }
    Ok(())
}

/// Three decimals at most, trailing zeros trimmed, never `-0`.
fn num(v: f64) -> String {
    let mut s = format!("{:.3}", v);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

struct Bounds {
    min: Point,
    max: Point,
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            min: Point::new(f64::INFINITY, f64::INFINITY),
            max: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, p: Point, pad: f64) {
        self.min.x = self.min.x.min(p.x - pad);
        self.min.y = self.min.y.min(p.y - pad);
        self.max.x = self.max.x.max(p.x + pad);
        self.max.y = self.max.y.max(p.y + pad);
    }
}

fn open_svg(out: &mut String, b: &Bounds, margin: f64, scale: f64) {
    let (x, y) = (b.min.x - margin, b.min.y - margin);
    let (w, h) = (b.max.x - b.min.x + 2.0 * margin, b.max.y - b.min.y + 2.0 * margin);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        num(w * scale),
        num(h * scale),
        num(x),
        num(y),
        num(w),
        num(h)
    );
}

/// Pegs as filled disks and the strand as one stroked path.
pub fn render_taffy_svg(d: &TaffyDiagram, opts: &SvgOptions) -> Result<String, RenderError> {
    check_options(opts)?;
    let report = verify_taffy(d);
    if !report.passes() {
        return Err(RenderError::Unverified(report));
    }
    // y points down on the canvas
    let flip = |p: Point| Point::new(p.x, -p.y);

    let mut bounds = Bounds::new();
    for &peg in &d.pegs {
        bounds.add(flip(peg), d.peg_radius);
    }
    for piece in &d.strand {
        match *piece {
            Piece::Segment { from, to } => {
                bounds.add(flip(from), 0.0);
                bounds.add(flip(to), 0.0);
            }
            Piece::Arc { center, radius, .. } => bounds.add(flip(center), radius),
        }
    }

    let mut out = String::new();
    open_svg(&mut out, &bounds, opts.stroke_width + opts.strand_gap, opts.scale);
    out.push_str("<g class=\"pegs\" fill=\"black\">\n");
    for peg in d.pegs.iter().map(|&p| flip(p)) {
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{}"/>"#,
            num(peg.x),
            num(peg.y),
            num(d.peg_radius)
        );
    }
    out.push_str("</g>\n");

    let start = flip(d.strand[0].start());
    let mut path = format!("M {} {}", num(start.x), num(start.y));
    for piece in &d.strand {
        let end = flip(piece.end());
        match *piece {
            Piece::Segment { .. } => {
                let _ = write!(path, " L {} {}", num(end.x), num(end.y));
            }
            Piece::Arc { radius, sweep, .. } => {
                let large = u8::from(sweep.abs() > std::f64::consts::PI + 1e-9);
                let _ = write!(
                    path,
                    " A {r} {r} 0 {large} {} {} {}",
                    u8::from(sweep > 0.0),
                    num(end.x),
                    num(end.y),
                    r = num(radius)
                );
            }
        }
    }
    let _ = writeln!(
        out,
        r#"<path class="taffy" d="{path}" fill="none" stroke="black" stroke-width="{}" stroke-linecap="round"/>"#,
        num(opts.stroke_width)
    );
    out.push_str("</svg>\n");
    Ok(out)
}

type Cubic = [Point; 4];

fn lerp(a: Point, b: Point, t: f64) -> Point {
    Point::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)
}

/// The pieces of `c` on `[0, t]` and `[t, 1]`.
fn split(c: &Cubic, t: f64) -> (Cubic, Cubic) {
    let ab = lerp(c[0], c[1], t);
    let bc = lerp(c[1], c[2], t);
    let cd = lerp(c[2], c[3], t);
    let abc = lerp(ab, bc, t);
    let bcd = lerp(bc, cd, t);
    let m = lerp(abc, bcd, t);
    ([c[0], ab, abc, m], [m, bcd, cd, c[3]])
}

fn cubic_path(c: &Cubic) -> String {
    format!(
        "M {} {} C {} {} {} {} {} {}",
        num(c[0].x),
        num(c[0].y),
        num(c[1].x),
        num(c[1].y),
        num(c[2].x),
        num(c[2].y),
        num(c[3].x),
        num(c[3].y)
    )
}

/// The pieces of an under-strand left once a break centred on its
/// midpoint is cut out.
fn with_break(c: &Cubic, half: f64) -> (Cubic, Cubic) {
    // speed at t = 1/2
    let d = Point::new(
        0.75 * (c[3].x + c[2].x - c[1].x - c[0].x),
        0.75 * (c[3].y + c[2].y - c[1].y - c[0].y),
    );
    let speed = d.x.hypot(d.y);
    let dt = (half / speed).min(0.45);
    let (head, rest) = split(c, 0.5 - dt);
    let (_, tail) = split(&rest, (2.0 * dt) / (0.5 + dt));
    (head, tail)
}

/// Tiles are added outward: a right-side crossing adds a column to the
/// right spanning the whole height, a bottom-side crossing a row below
/// spanning the whole width. The two strands of a tile are cubic curves
/// that meet in its centre; at a positive crossing the strand from the
/// lower right corner of the previous box passes over.
pub fn render_tangle_svg(d: &TangleDiagram, opts: &SvgOptions) -> Result<String, RenderError> {
    check_options(opts)?;
    let t = opts.tile;
    let stroke = num(opts.stroke_width);
    let half_break = opts.stroke_width / 2.0 + opts.crossing_gap;

    let arcs = [
        [
            Point::new(0.0, 0.0),
            Point::new(t / 3.0, t / 4.0),
            Point::new(2.0 * t / 3.0, t / 4.0),
            Point::new(t, 0.0),
        ],
        [
            Point::new(0.0, t),
            Point::new(t / 3.0, 3.0 * t / 4.0),
            Point::new(2.0 * t / 3.0, 3.0 * t / 4.0),
            Point::new(t, t),
        ],
    ];

    let (mut w, mut h) = (t, t);
    let mut body = String::new();
    body.push_str("<g class=\"arcs\">\n");
    for arc in &arcs {
        let _ = writeln!(body, r#"<path d="{}"/>"#, cubic_path(arc));
    }
    body.push_str("</g>\n");

    for (i, c) in d.crossings.iter().enumerate() {
        // `from_se` starts at the lower right corner of the current box
        let (from_se, other): (Cubic, Cubic) = match c.position {
            CrossingPosition::RightSide => {
                let m = w + t / 2.0;
                (
                    [
                        Point::new(w, h),
                        Point::new(m, h),
                        Point::new(m, 0.0),
                        Point::new(w + t, 0.0),
                    ],
                    [
                        Point::new(w, 0.0),
                        Point::new(m, 0.0),
                        Point::new(m, h),
                        Point::new(w + t, h),
                    ],
                )
            }
            CrossingPosition::BottomSide => {
                let m = h + t / 2.0;
                (
                    [
                        Point::new(w, h),
                        Point::new(w, m),
                        Point::new(0.0, m),
                        Point::new(0.0, h + t),
                    ],
                    [
                        Point::new(0.0, h),
                        Point::new(0.0, m),
                        Point::new(w, m),
                        Point::new(w, h + t),
                    ],
                )
            }
        };
        match c.position {
            CrossingPosition::RightSide => w += t,
            CrossingPosition::BottomSide => h += t,
        }
        let (over, under) = if c.sign > 0 {
            (from_se, other)
        } else {
            (other, from_se)
        };
        let (head, tail) = with_break(&under, half_break);
        let _ = writeln!(
            body,
            r#"<g class="crossing" data-index="{i}" data-position="{}" data-sign="{}">"#,
            c.position,
            if c.sign > 0 { "+1" } else { "-1" }
        );
        let _ = writeln!(body, r#"<path class="under" d="{}"/>"#, cubic_path(&head));
        let _ = writeln!(body, r#"<path class="under" d="{}"/>"#, cubic_path(&tail));
        let _ = writeln!(body, r#"<path class="over" d="{}"/>"#, cubic_path(&over));
        body.push_str("</g>\n");
    }

    let mut bounds = Bounds::new();
    bounds.add(Point::new(0.0, 0.0), 0.0);
    bounds.add(Point::new(w, h), 0.0);
    let mut out = String::new();
    open_svg(&mut out, &bounds, t / 4.0, opts.scale);
    let _ = writeln!(
        out,
        r#"<g fill="none" stroke="black" stroke-width="{stroke}" stroke-linecap="round">"#
    );
    out.push_str(&body);
    out.push_str("</g>\n");
    out.push_str("<g class=\"endpoints\" fill=\"black\">\n");
    let r = num(opts.stroke_width * 1.5);
    for (name, p) in [
        ("NW", Point::new(0.0, 0.0)),
        ("NE", Point::new(w, 0.0)),
        ("SW", Point::new(0.0, h)),
        ("SE", Point::new(w, h)),
    ] {
        let _ = writeln!(
            out,
            r#"<circle data-endpoint="{name}" cx="{}" cy="{}" r="{r}"/>"#,
            num(p.x),
            num(p.y)
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
