//! Tree rows, Fibonacci layer growth and the extremal layer counts.

use thiserror::Error;

use crate::extrational::ExtRational;
use crate::scalar::Int;
use crate::treewalk::{layer_counts, LayerCounts};
use crate::turnword::{Side, Turn, TurnWord};

/// Deepest row [`cw_row`] lists unless told otherwise.
pub const DEFAULT_DEPTH_CAP: u32 = 25;

/// Largest `n` the exhaustive maximization accepts.
pub const BRUTE_FORCE_CAP: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("rows are numbered from 1")]
    RowZero,
    #[error("row {requested} exceeds the depth cap {cap}")]
    DepthCap { requested: u32, cap: u32 },
    #[error("brute force over 2^{requested} words exceeds the cap of 2^{cap}")]
    BruteForceCap { requested: u32, cap: u32 },
}

/// `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci<T: Int>(n: u32) -> T {
    let (mut a, mut b) = (T::zero(), T::one());
    for _ in 0..n {
        let next = a + b.clone();
        a = b;
        b = next;
    }
    a
}

/// `R L R L ...` of length `n`.
pub fn alternating_word(n: usize) -> TurnWord {
    (0..n)
        .map(|i| if i % 2 == 0 { Turn::Right } else { Turn::Left })
        .collect()
}

/// Layer counts after `n` alternating turns: left `F_{n+1}`, right `F_n`
/// for even `n`, swapped for odd `n`.
pub fn alternating_layers<T: Int>(n: u32) -> LayerCounts<T> {
    let (small, large) = (fibonacci::<T>(n), fibonacci::<T>(n + 1));
    if n.is_multiple_of(2) {
        LayerCounts {
            right: small,
            left: large,
        }
    } else {
        LayerCounts {
            right: large,
            left: small,
        }
    }
}

/// One row of the Calkin-Wilf tree, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowListing<T> {
    pub depth: u32,
    pub entries: Vec<ExtRational<T>>,
}

/// Row `n` (root `1/1` is row 1), refusing rows deeper than `cap`.
pub fn cw_row<T: Int>(n: u32, cap: u32) -> Result<RowListing<T>, AnalysisError> {
    if n == 0 {
        return Err(AnalysisError::RowZero);
    }
    if n > cap {
        return Err(AnalysisError::DepthCap { requested: n, cap });
    }
    let mut row = vec![ExtRational::from_integer(T::one())];
    for _ in 1..n {
        row = row
            .iter()
            .flat_map(|q| [q.apply_turn(Turn::Left), q.apply_turn(Turn::Right)])
            .collect();
    }
    Ok(RowListing { depth: n, entries: row })
}

/// The four neighbours of `q` in the four-way tree, labelled by turn.
pub fn four_way_children<T: Int>(q: &ExtRational<T>) -> [(Turn, ExtRational<T>); 4] {
    [Turn::Left, Turn::Right, Turn::LeftInv, Turn::RightInv].map(|t| (t, q.apply_turn(t)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxMode {
    ClosedForm,
    BruteForce,
}

/// Most total layers reachable with `n` forward turns, with a witness.
///
/// Brute force scans all `2^n` forward words in lexicographic order with
/// `R < L` and keeps the first maximizer.
pub fn max_total_layers<T: Int>(n: u32, mode: MaxMode) -> Result<(T, TurnWord), AnalysisError> {
    match mode {
        MaxMode::ClosedForm => Ok((fibonacci(n + 2), alternating_word(n as usize))),
        MaxMode::BruteForce => {
            if n > BRUTE_FORCE_CAP {
                return Err(AnalysisError::BruteForceCap {
                    requested: n,
                    cap: BRUTE_FORCE_CAP,
                });
            }
            let side_at = |mask: u32, i: u32| {
                if mask >> (n - 1 - i) & 1 == 0 {
                    Side::Right
                } else {
                    Side::Left
                }
            };
            let mut best: Option<(T, u32)> = None;
            for mask in 0..(1u32 << n) {
                let mut counts = LayerCounts {
                    right: T::zero(),
                    left: T::one(),
                };
                for i in 0..n {
                    counts = counts.after(side_at(mask, i));
                }
                let total = counts.total();
                if best.as_ref().is_none_or(|(b, _)| total > *b) {
                    best = Some((total, mask));
                }
            }
            let (value, mask) = best.expect("at least one word");
            let witness = (0..n).map(|i| Turn::new(side_at(mask, i), false)).collect();
            Ok((value, witness))
        }
    }
}

/// Total layers after a prefix, and its ratio to the previous total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthStep<T> {
    pub prefix_len: usize,
    pub total: T,
    pub ratio: Option<ExtRational<T>>,
}

pub fn effectiveness_report<T: Int>(word: &TurnWord) -> Vec<GrowthStep<T>> {
    let turns = word.turns();
    let mut out: Vec<GrowthStep<T>> = Vec::with_capacity(turns.len() + 1);
    for k in 0..=turns.len() {
        let prefix = TurnWord::from_turns(turns[..k].to_vec());
        let total = layer_counts::<T>(&prefix).total();
        let ratio = out.last().and_then(|prev| {
            if prev.total.is_zero() {
                None
            } else {
                ExtRational::make(total.clone(), prev.total.clone()).ok()
            }
        });
        out.push(GrowthStep {
            prefix_len: k,
            total,
            ratio,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::turnword::parse_word;
    use num_bigint::BigInt;

    type Q = ExtRational<i64>;

    fn q(n: i64, d: i64) -> Q {
        Q::make(n, d).unwrap()
    }

    #[test]
    fn fibonacci_numbers() {
        assert_eq!(fibonacci::<i64>(0), 0);
        assert_eq!(fibonacci::<i64>(1), 1);
        assert_eq!(fibonacci::<i64>(7), 13);
        assert_eq!(fibonacci::<i64>(10), 55);
        assert_eq!(
            fibonacci::<BigInt>(100).to_string(),
            "354224848179261915075"
        );
    }

    #[test]
    fn alternating() {
        assert!(alternating_word(0).is_empty());
        assert_eq!(alternating_word(3).to_string(), "R L R");
        assert_eq!(alternating_word(6).to_string(), "R L R L R L");
        let c = alternating_layers::<i64>(0);
        assert_eq!((c.right, c.left), (0, 1));
        let c = alternating_layers::<i64>(6);
        assert_eq!((c.right, c.left), (8, 13));
        let c = alternating_layers::<i64>(9);
        assert_eq!((c.right, c.left), (55, 34));
        assert_eq!(layer_counts::<i64>(&alternating_word(9)), c);
    }

    #[test]
    fn rows() {
        assert_eq!(cw_row::<i64>(1, DEFAULT_DEPTH_CAP).unwrap().entries, vec![q(1, 1)]);
        assert_eq!(
            cw_row::<i64>(3, DEFAULT_DEPTH_CAP).unwrap().entries,
            vec![q(1, 3), q(3, 2), q(2, 3), q(3, 1)]
        );
        let row5 = cw_row::<i64>(5, DEFAULT_DEPTH_CAP).unwrap();
        assert_eq!(row5.entries.len(), 16);
        assert_eq!(row5.entries.iter().map(|e| *e.numer()).max(), Some(8));
        assert_eq!(cw_row::<i64>(0, 25), Err(AnalysisError::RowZero));
        assert_eq!(
            cw_row::<i64>(26, 25),
            Err(AnalysisError::DepthCap { requested: 26, cap: 25 })
        );
    }

    #[test]
    fn four_way() {
        let labels = |q: &Q| four_way_children(q).map(|(_, v)| v);
        assert_eq!(labels(&q(1, 1)), [q(1, 2), q(2, 1), Q::infinity(), q(0, 1)]);
        assert_eq!(labels(&q(0, 1)), [q(0, 1), q(1, 1), q(0, 1), q(-1, 1)]);
        assert_eq!(labels(&Q::infinity()), [q(1, 1), Q::infinity(), q(-1, 1), Q::infinity()]);
        let turns = four_way_children(&q(1, 1)).map(|(t, _)| t);
        assert_eq!(turns, [Turn::Left, Turn::Right, Turn::LeftInv, Turn::RightInv]);
    }

    #[test]
    fn maximal_layers() {
        assert_eq!(max_total_layers::<i64>(4, MaxMode::ClosedForm).unwrap().0, 8);
        let (v, wit) = max_total_layers::<i64>(0, MaxMode::ClosedForm).unwrap();
        assert_eq!((v, wit.is_empty()), (1, true));
        let (v, wit) = max_total_layers::<i64>(0, MaxMode::BruteForce).unwrap();
        assert_eq!((v, wit.is_empty()), (1, true));
        let (v, wit) = max_total_layers::<i64>(10, MaxMode::BruteForce).unwrap();
        assert_eq!(v, 144);
        // ties go to the first word with R before L
        assert_eq!(wit.to_string(), "R^2 L R L R L R L R");
        assert_eq!(layer_counts::<i64>(&alternating_word(10)).total(), 144);
        assert!(matches!(
            max_total_layers::<i64>(17, MaxMode::BruteForce),
            Err(AnalysisError::BruteForceCap { .. })
        ));
    }

    #[test]
    fn growth_reports() {
        let report = effectiveness_report::<i64>(&alternating_word(6));
        let totals: Vec<i64> = report.iter().map(|s| s.total).collect();
        assert_eq!(totals, [1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(report[0].ratio, None);
        assert_eq!(report[6].ratio, Some(q(21, 13)));

        let report = effectiveness_report::<i64>(&parse_word("R^5").unwrap());
        let totals: Vec<i64> = report.iter().map(|s| s.total).collect();
        assert_eq!(totals, [1, 2, 3, 4, 5, 6]);

        let report = effectiveness_report::<i64>(&TurnWord::new());
        assert_eq!(report.len(), 1);
        assert_eq!(report[0].total, 1);
    }
}
