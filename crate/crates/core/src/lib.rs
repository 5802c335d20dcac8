//! Exact arithmetic connecting taffy pulls, the four-way Calkin-Wilf tree,
//! and rational tangles.
//!
//! The arithmetic is generic over the integer scalar ([`Int`]); the aliases
//! below fix it to [`BigInt`], which is what the CLI and most callers want.

pub mod analysis;
pub mod diagrams;
pub mod extrational;
pub mod scalar;
pub mod treewalk;
pub mod turnword;

use num_bigint::BigInt;

pub use analysis::{
    alternating_layers, alternating_word, cw_row, effectiveness_report, fibonacci,
    four_way_children, max_total_layers, AnalysisError, GrowthStep, MaxMode, RowListing,
};
pub use diagrams::{
    build_taffy, build_tangle, render_taffy_svg, render_tangle_svg, tangle_cf, tangle_number,
    verify_taffy, SvgOptions, TaffyDiagram, TaffyReport, TangleDiagram, TangleWord,
};
pub use extrational::{
    cf_eval, cf_expand, ContinuedFraction, ContinuedFractionError, ExtRational, FractionError,
};
pub use scalar::Int;
pub use treewalk::{
    canonical_word, canonicalize_arith, canonicalize_rewrite, canonicalize_rewrite_traced,
    equivalent, layer_counts, rotate_canonical, slow_euclid_trace, taffy_chain, taffy_number,
    word_to_cf, CanonicalClass, CanonicalKind, EuclidMode, EuclidStep, LayerCounts, RewriteCase,
};
pub use turnword::{
    format_word, from_run_form, parse_word, to_run_form, ParseWordError, RunForm, Side, Turn,
    TurnWord, WordStyle,
};

/// Arbitrary-precision extended fraction.
pub type Fraction = ExtRational<BigInt>;
/// Fixed-width extended fraction for bounded sweeps.
pub type Fraction64 = ExtRational<i64>;
pub type Cf = ContinuedFraction<BigInt>;
pub type Cf64 = ContinuedFraction<i64>;
pub type Layers = LayerCounts<BigInt>;
pub type Layers64 = LayerCounts<i64>;
