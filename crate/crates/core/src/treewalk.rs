//! Taffy numbers, layer counts, and the two canonicalizers.
//!
//! [`canonicalize_arith`] goes through the taffy number and the Euclidean
//! algorithm. [`canonicalize_rewrite`] never touches a fraction: it extends a
//! canonical word one turn at a time using cancellation, the `t0`/`t∞`
//! table, and the four rotation identities
//! `tLR⁻¹ ~ rot(tR)`, `tRL⁻¹ ~ rot(tL)`, `tL⁻¹R ~ rot(tR⁻¹)`,
//! `tR⁻¹L ~ rot(tL⁻¹)`. The two must agree on every word.

use std::fmt;

use thiserror::Error;

use crate::extrational::{ContinuedFraction, ExtRational};
use crate::scalar::{from_i64, Int};
use crate::turnword::{to_run_form, Side, Turn, TurnWord};

/// Right and left layer counts `(t_r, t_ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LayerCounts<T> {
    pub right: T,
    pub left: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayerCountsError {
    #[error("layer counts must be nonnegative")]
    Negative,
    #[error("layer counts ({right}, {left}) are not coprime")]
    NotCoprime { right: String, left: String },
}

impl<T: Int> LayerCounts<T> {
    pub fn new(right: T, left: T) -> Result<Self, LayerCountsError> {
        if right.is_negative() || left.is_negative() {
            return Err(LayerCountsError::Negative);
        }
        if !right.gcd(&left).is_one() {
            return Err(LayerCountsError::NotCoprime {
                right: right.to_string(),
                left: left.to_string(),
            });
        }
        Ok(LayerCounts { right, left })
    }

    pub fn total(&self) -> T {
        self.right.clone() + self.left.clone()
    }

    /// Counts after one more forward turn: `R` adds the left layers to the
    /// right ones, `L` the right layers to the left ones.
    pub fn after(&self, side: Side) -> Self {
        match side {
            Side::Right => LayerCounts {
                right: self.total(),
                left: self.left.clone(),
            },
            Side::Left => LayerCounts {
                right: self.right.clone(),
                left: self.total(),
            },
        }
    }
}

impl<T: Int> fmt::Display for LayerCounts<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "left {} right {}", self.left, self.right)
    }
}

/// Folds the four tree rules over the word, starting from `0/1`.
pub fn taffy_number<T: Int>(word: &TurnWord) -> ExtRational<T> {
    word.iter()
        .fold(ExtRational::zero(), |q, t| q.apply_turn(t))
}

/// The fraction after every prefix, starting with the empty one.
pub fn taffy_chain<T: Int>(word: &TurnWord) -> Vec<ExtRational<T>> {
    let mut out = Vec::with_capacity(word.len() + 1);
    let mut q = ExtRational::zero();
    out.push(q.clone());
    for t in word.iter() {
        q = q.apply_turn(t);
        out.push(q.clone());
    }
    out
}

/// `(|a|, b)` for the taffy number `a/b`; `1/0` gives `(1, 0)`.
pub fn layer_counts<T: Int>(word: &TurnWord) -> LayerCounts<T> {
    counts_of(&taffy_number(word))
}

pub fn counts_of<T: Int>(q: &ExtRational<T>) -> LayerCounts<T> {
    LayerCounts {
        right: q.numer().abs(),
        left: q.denom().clone(),
    }
}

/// Runs of the reduced word, padded to start and end on an `R` run, read
/// backwards.
pub fn word_to_cf<T: Int>(word: &TurnWord) -> ContinuedFraction<T> {
    let mut runs = to_run_form(word).runs().to_vec();
    if runs.is_empty() {
        runs.push(0);
    }
    if runs.len().is_multiple_of(2) {
        runs.push(0);
    }
    let coeffs = runs.into_iter().rev().map(from_i64).collect();
    ContinuedFraction::new(coeffs).expect("at least one run")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalKind {
    /// `t⁰`, the empty word.
    Initial,
    /// `t∞ = R L⁻¹`.
    Infinity,
    /// Forward turns only, starting with `R`.
    Forward,
    /// Reverse turns only, starting with `R⁻¹`.
    Reverse,
}

/// A canonical pull: the unique double-tree representative of its number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalClass {
    kind: CanonicalKind,
    word: TurnWord,
}

impl CanonicalClass {
    pub fn initial() -> Self {
        CanonicalClass {
            kind: CanonicalKind::Initial,
            word: TurnWord::new(),
        }
    }

    pub fn infinity() -> Self {
        CanonicalClass {
            kind: CanonicalKind::Infinity,
            word: TurnWord::from_turns(vec![Turn::Right, Turn::LeftInv]),
        }
    }

    /// Classifies `word`, or `None` if it is not canonical.
    pub fn from_word(word: TurnWord) -> Option<Self> {
        let kind = match word.first() {
            None => CanonicalKind::Initial,
            Some(_) if word.turns() == [Turn::Right, Turn::LeftInv] => CanonicalKind::Infinity,
            Some(Turn::Right) if word.is_forward() => CanonicalKind::Forward,
            Some(Turn::RightInv) if word.is_reverse() => CanonicalKind::Reverse,
            Some(_) => return None,
        };
        Some(CanonicalClass { kind, word })
    }

    pub fn kind(&self) -> CanonicalKind {
        self.kind
    }

    pub fn word(&self) -> &TurnWord {
        &self.word
    }

    pub fn into_word(self) -> TurnWord {
        self.word
    }

    // Drops a trailing turn; the prefix of a canonical word is canonical.
    fn without_last(&self) -> Self {
        let mut word = self.word.clone();
        word.pop();
        if word.is_empty() {
            CanonicalClass::initial()
        } else {
            CanonicalClass { kind: self.kind, word }
        }
    }
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EuclidMode {
    /// Parent walk by subtraction.
    Slow,
    /// Division, through the continued fraction.
    Fast,
}

/// One step of the parent walk: `fraction` is a `side` child of the next one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclidStep<T> {
    pub fraction: ExtRational<T>,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("the parent walk needs a positive finite fraction, got {0}")]
    NotPositive(String),
}

/// Walks from `q` up to `0/1`, subtracting the smaller of numerator and
/// denominator from the larger; `a/b` is a left child iff `a < b`.
pub fn slow_euclid_trace<T: Int>(q: &ExtRational<T>) -> Result<Vec<EuclidStep<T>>, TraceError> {
    if !q.is_positive() {
        return Err(TraceError::NotPositive(q.to_string()));
    }
    let (mut a, mut b) = (q.numer().clone(), q.denom().clone());
    let mut steps = Vec::new();
    while !a.is_zero() {
        let fraction = ExtRational::make(a.clone(), b.clone()).expect("nonzero");
        if a < b {
            b = b - a.clone();
            steps.push(EuclidStep { fraction, side: Side::Left });
        } else {
            a = a - b.clone();
            steps.push(EuclidStep { fraction, side: Side::Right });
        }
    }
    Ok(steps)
}

/// The canonical pull whose taffy number is `q`.
pub fn canonical_word<T: Int>(q: &ExtRational<T>, mode: EuclidMode) -> CanonicalClass {
    if q.is_zero() {
        return CanonicalClass::initial();
    }
    if q.is_infinite() {
        return CanonicalClass::infinity();
    }
    let positive = q.abs();
    let word = match mode {
        EuclidMode::Slow => slow_path(&positive),
        EuclidMode::Fast => fast_path(&positive),
    };
    if q.is_negative() {
        CanonicalClass {
            kind: CanonicalKind::Reverse,
            word: word.negate_runs(),
        }
    } else {
        CanonicalClass {
            kind: CanonicalKind::Forward,
            word,
        }
    }
}

fn slow_path<T: Int>(q: &ExtRational<T>) -> TurnWord {
    let steps = slow_euclid_trace(q).expect("positive");
    steps
        .iter()
        .rev()
        .map(|s| Turn::new(s.side, false))
        .collect()
}

// The runs R^n1 L^n2 ... R^nk have odd length, so the expansion is first
// switched to its odd-length twin via [..., c] = [..., c-1, 1].
fn fast_path<T: Int>(q: &ExtRational<T>) -> TurnWord {
    let mut coeffs = ContinuedFraction::expand(q).expect("positive").into_coeffs();
    if coeffs.len().is_multiple_of(2) {
        let last = coeffs.last_mut().expect("nonempty");
        *last = last.clone() - T::one();
        coeffs.push(T::one());
    }
    let mut turns = Vec::new();
    for (i, c) in coeffs.iter().rev().enumerate() {
        let n = c.to_usize().expect("run length fits in memory");
        let side = if i % 2 == 0 { Side::Right } else { Side::Left };
        turns.extend(std::iter::repeat_n(Turn::new(side, false), n));
    }
    TurnWord::from_turns(turns)
}

pub fn canonicalize_arith(word: &TurnWord) -> CanonicalClass {
    canonical_word(&taffy_number::<num_bigint::BigInt>(word), EuclidMode::Fast)
}

/// Half-turn rotation of the diagram, computed on the word alone.
pub fn rotate_canonical(c: &CanonicalClass) -> CanonicalClass {
    match c.kind {
        CanonicalKind::Initial => CanonicalClass::infinity(),
        CanonicalKind::Infinity => CanonicalClass::initial(),
        CanonicalKind::Forward => {
            // R·p ↦ negate(R·mirror(p))
            let word = mirror_tail(&c.word).negate_runs();
            CanonicalClass {
                kind: CanonicalKind::Reverse,
                word,
            }
        }
        CanonicalKind::Reverse => {
            let word = mirror_tail(&c.word.negate_runs());
            CanonicalClass {
                kind: CanonicalKind::Forward,
                word,
            }
        }
    }
}

fn mirror_tail(word: &TurnWord) -> TurnWord {
    let turns = word.turns();
    std::iter::once(turns[0])
        .chain(turns[1..].iter().map(|t| t.mirror()))
        .collect()
}

/// Which rule of the incremental canonicalizer fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteCase {
    /// Extension of `t⁰` or `t∞`, read off the fixed table.
    Table,
    /// The extension is already canonical.
    Append,
    /// The turn undoes the last one.
    Cancel,
    /// A two-turn suffix replaced by the rotation of a canonical word.
    Rotate { suffix: [Turn; 2] },
}

impl fmt::Display for RewriteCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteCase::Table => f.write_str("table"),
            RewriteCase::Append => f.write_str("append"),
            RewriteCase::Cancel => f.write_str("cancel"),
            RewriteCase::Rotate { suffix } => write!(f, "rotate {} {}", suffix[0], suffix[1]),
        }
    }
}

/// Canonical class of `c·s`, without fractions.
pub fn extend_canonical(c: &CanonicalClass, s: Turn) -> (CanonicalClass, RewriteCase) {
    match c.kind {
        CanonicalKind::Initial => {
            let next = match s {
                // a left turn does not change the initial pull
                Turn::Left | Turn::LeftInv => CanonicalClass::initial(),
                Turn::Right | Turn::RightInv => single(s),
            };
            (next, RewriteCase::Table)
        }
        CanonicalKind::Infinity => {
            let next = match s {
                Turn::Right | Turn::RightInv => CanonicalClass::infinity(),
                Turn::Left => single(Turn::Right),
                Turn::LeftInv => single(Turn::RightInv),
            };
            (next, RewriteCase::Table)
        }
        CanonicalKind::Forward | CanonicalKind::Reverse => {
            let last = c.word.last().expect("nonempty");
            if s == last.inverse() {
                return (c.without_last(), RewriteCase::Cancel);
            }
            if s.is_reverse() == (c.kind == CanonicalKind::Reverse) {
                let word = c.word.with(s);
                return (CanonicalClass { kind: c.kind, word }, RewriteCase::Append);
            }
            // s is the inverse of last's mirror: c'·last·s ~ rot(c'·mirror(last))
            let prefix = c.without_last();
            let (shifted, _) = extend_canonical(&prefix, last.mirror());
            (rotate_canonical(&shifted), RewriteCase::Rotate { suffix: [last, s] })
        }
    }
}

fn single(t: Turn) -> CanonicalClass {
    CanonicalClass::from_word(TurnWord::from_turns(vec![t])).expect("R or R^-1")
}

pub fn canonicalize_rewrite(word: &TurnWord) -> CanonicalClass {
    word.iter()
        .fold(CanonicalClass::initial(), |c, s| extend_canonical(&c, s).0)
}

/// As [`canonicalize_rewrite`], recording the class and rule after each turn.
pub fn canonicalize_rewrite_traced(word: &TurnWord) -> Vec<(Turn, RewriteCase, CanonicalClass)> {
    let mut c = CanonicalClass::initial();
    let mut out = Vec::with_capacity(word.len());
    for s in word.iter() {
        let (next, case) = extend_canonical(&c, s);
        out.push((s, case, next.clone()));
        c = next;
    }
    out
}

/// Same diagram iff same taffy number.
pub fn equivalent(w1: &TurnWord, w2: &TurnWord) -> bool {
    taffy_number::<num_bigint::BigInt>(w1) == taffy_number::<num_bigint::BigInt>(w2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::turnword::parse_word;

    type Q = ExtRational<i64>;

    fn w(s: &str) -> TurnWord {
        parse_word(s).unwrap()
    }

    fn q(n: i64, d: i64) -> Q {
        Q::make(n, d).unwrap()
    }

    #[test]
    fn taffy_numbers() {
        assert_eq!(taffy_number::<i64>(&w("R^2 L R^-1")), q(-1, 3));
        assert_eq!(taffy_number::<i64>(&TurnWord::new()), q(0, 1));
        assert_eq!(taffy_number::<i64>(&w("R L R")), q(3, 2));
        assert_eq!(taffy_number::<i64>(&w("R L^-1")), Q::infinity());
        assert_eq!(taffy_number::<i64>(&w("R^-2 L^-1")), q(-2, 3));
    }

    #[test]
    fn layers() {
        let c = layer_counts::<i64>(&w("R L R L R L"));
        assert_eq!((c.right, c.left), (8, 13));
        let c = layer_counts::<i64>(&TurnWord::new());
        assert_eq!((c.right, c.left), (0, 1));
        let c = layer_counts::<i64>(&w("R^-1 L^-2"));
        assert_eq!((c.right, c.left), (1, 3));
        let c = layer_counts::<i64>(&w("R L^-1"));
        assert_eq!((c.right, c.left), (1, 0));
        assert!(LayerCounts::new(2i64, 4).is_err());
        assert!(LayerCounts::new(-1i64, 4).is_err());
        assert!(LayerCounts::new(0i64, 0).is_err());
    }

    #[test]
    fn continued_fractions_of_words() {
        assert_eq!(word_to_cf::<i64>(&w("R^2 L^3 R")).coeffs(), &[1, 3, 2]);
        assert_eq!(word_to_cf::<i64>(&w("R^2 L R^-1")).coeffs(), &[-1, 1, 2]);
        let c = word_to_cf::<i64>(&w("L R L"));
        assert_eq!(c.coeffs(), &[0, 1, 1, 1, 0]);
        assert_eq!(c.eval(), q(1, 2));
        assert_eq!(word_to_cf::<i64>(&TurnWord::new()).coeffs(), &[0]);
    }

    #[test]
    fn canonical_words() {
        for mode in [EuclidMode::Slow, EuclidMode::Fast] {
            assert_eq!(canonical_word(&q(-1, 3), mode).to_string(), "R^-1 L^-2");
            assert_eq!(canonical_word(&q(9, 7), mode).to_string(), "R^2 L^3 R");
            assert_eq!(canonical_word(&q(7, 9), mode).to_string(), "R L R^3 L");
            assert_eq!(canonical_word(&Q::infinity(), mode).to_string(), "R L^-1");
            assert_eq!(canonical_word(&Q::zero(), mode).to_string(), "e");
            assert_eq!(canonical_word(&q(2, 5), mode).to_string(), "R^2 L^2");
            assert_eq!(canonical_word(&q(1, 1), mode).to_string(), "R");
        }
    }

    #[test]
    fn arithmetic_canonicalization() {
        assert_eq!(canonicalize_arith(&w("R^2 L R^-1")).to_string(), "R^-1 L^-2");
        assert_eq!(canonicalize_arith(&w("L")).kind(), CanonicalKind::Initial);
        assert_eq!(canonicalize_arith(&w("R L^-1 R")).kind(), CanonicalKind::Infinity);
    }

    #[test]
    fn rotation() {
        let c = |s: &str| CanonicalClass::from_word(w(s)).unwrap();
        assert_eq!(rotate_canonical(&c("R L R")).to_string(), "R^-2 L^-1");
        assert_eq!(rotate_canonical(&c("R^2 L^3 R")).to_string(), "R^-1 L^-1 R^-3 L^-1");
        assert_eq!(rotate_canonical(&CanonicalClass::initial()).to_string(), "R L^-1");
        assert_eq!(rotate_canonical(&c("R^-2 L^-1")).to_string(), "R L R");
        assert_eq!(
            taffy_number::<i64>(&w("R^-1 L^-1 R^-3 L^-1")),
            q(9, 7).neg_recip()
        );
    }

    #[test]
    fn rewriting_canonicalization() {
        assert_eq!(canonicalize_rewrite(&w("R^2 L R^-1")).to_string(), "R^-1 L^-2");
        assert_eq!(canonicalize_rewrite(&w("R R^-1")).kind(), CanonicalKind::Initial);
        assert_eq!(canonicalize_rewrite(&w("R L^-1 L")).to_string(), "R");
        assert_eq!(canonicalize_rewrite(&w("R R L^-1")).to_string(), "R^-2");
        assert_eq!(taffy_number::<i64>(&w("R^2 L^-1")), q(-2, 1));
        assert_eq!(canonical_word(&q(-2, 1), EuclidMode::Fast).to_string(), "R^-2");
        assert_eq!(canonical_word(&q(-2, 3), EuclidMode::Fast).to_string(), "R^-2 L^-1");

        let trace = canonicalize_rewrite_traced(&w("R^2 L R^-1"));
        assert_eq!(trace.len(), 4);
        assert_eq!(
            trace[3].1,
            RewriteCase::Rotate {
                suffix: [Turn::Left, Turn::RightInv]
            }
        );
    }

    #[test]
    fn equivalence() {
        assert!(equivalent(&w("R^2 L R^-1"), &w("R^-1 L^-2")));
        assert!(!equivalent(&w("R"), &w("L")));
        assert!(equivalent(&w("R L^-1"), &w("R L^-1 R")));
    }

    #[test]
    fn parent_walks() {
        let trace = slow_euclid_trace(&q(9, 7)).unwrap();
        let fractions: Vec<String> = trace.iter().map(|s| s.fraction.to_string()).collect();
        assert_eq!(fractions, ["9/7", "2/7", "2/5", "2/3", "2/1", "1/1"]);
        let sides: String = trace.iter().map(|s| s.side.letter()).collect();
        assert_eq!(sides, "RLLLRR");

        let trace = slow_euclid_trace(&q(1, 1)).unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(trace[0].side, Side::Right);

        let trace = slow_euclid_trace(&q(7, 9)).unwrap();
        let sides: String = trace.iter().rev().map(|s| s.side.letter()).collect();
        assert_eq!(sides, "RLRRRL");

        assert!(slow_euclid_trace(&Q::infinity()).is_err());
        assert!(slow_euclid_trace(&Q::zero()).is_err());
        assert!(slow_euclid_trace(&q(-1, 2)).is_err());
    }
}
