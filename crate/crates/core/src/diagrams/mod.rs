//! Tangle and taffy diagrams, their verification, and SVG output.

pub mod geometry;
pub mod svg;
pub mod taffy;
pub mod tangle;

pub use geometry::{Piece, Point};
pub use svg::{render_taffy_svg, render_tangle_svg, RenderError, SvgOptions};
pub use taffy::{
    build_taffy, build_taffy_with, verify_taffy, TaffyDiagram, TaffyError, TaffyLayout,
    TaffyReport, MAX_DRAWN_LAYERS,
};
pub use tangle::{
    build_tangle, tangle_cf, tangle_number, Crossing, CrossingPosition, Endpoint, TangleDiagram,
    TangleWord, Twist,
};
