//! Rational tangles as twist words, their numbers, and crossing diagrams.

use std::fmt;
use std::str::FromStr;

use crate::extrational::{ContinuedFraction, ExtRational};
use crate::scalar::{from_i64, Int};
use crate::treewalk::taffy_number;
use crate::turnword::{grouped, parse_letters, ParseWordError, Side, Turn, TurnWord};

/// A vertical or horizontal twist or untwist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    Vertical,
    Horizontal,
    VerticalInv,
    HorizontalInv,
}

impl Twist {
    pub const ALL: [Twist; 4] = [
        Twist::Vertical,
        Twist::Horizontal,
        Twist::VerticalInv,
        Twist::HorizontalInv,
    ];

    pub fn new(side: Side, untwist: bool) -> Twist {
        match (side, untwist) {
            (Side::Right, false) => Twist::Vertical,
            (Side::Left, false) => Twist::Horizontal,
            (Side::Right, true) => Twist::VerticalInv,
            (Side::Left, true) => Twist::HorizontalInv,
        }
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Twist::Vertical | Twist::VerticalInv)
    }

    pub fn is_untwist(self) -> bool {
        matches!(self, Twist::VerticalInv | Twist::HorizontalInv)
    }

    /// `V ↦ R`, `H ↦ L`, inverses to inverses.
    pub fn as_turn(self) -> Turn {
        let side = if self.is_vertical() { Side::Right } else { Side::Left };
        Turn::new(side, self.is_untwist())
    }
}

/// Twists in the order they were made. Nothing is cancelled: a tangle
/// diagram keeps its whole history.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TangleWord {
    twists: Vec<Twist>,
}

impl TangleWord {
    pub fn new(twists: Vec<Twist>) -> Self {
        TangleWord { twists }
    }

    pub fn twists(&self) -> &[Twist] {
        &self.twists
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    /// The taffy pull with the same path in the four-way tree.
    pub fn to_turn_word(&self) -> TurnWord {
        self.twists.iter().map(|t| t.as_turn()).collect()
    }
}

impl FromStr for TangleWord {
    type Err = ParseWordError;

    /// Same grammar as turn words, over `V`, `H`, `v`, `h`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens = parse_letters(s, 'V', 'H')?;
        Ok(TangleWord {
            twists: tokens.into_iter().map(|(s, u)| Twist::new(s, u)).collect(),
        })
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.twists.iter().map(|t| {
            let side = if t.is_vertical() { Side::Right } else { Side::Left };
            (side, t.is_untwist())
        });
        f.write_str(&grouped(items, 'V', 'H'))
    }
}

/// Tangle number: the taffy number of the corresponding pull.
pub fn tangle_number<T: Int>(tw: &TangleWord) -> ExtRational<T> {
    taffy_number(&tw.to_turn_word())
}

/// Conway's continued fraction `[n_k; ..., n_1]` read straight off the
/// twist runs `V^n1 H^n2 ... V^nk`, cancelling adjacent twist/untwist pairs
/// of the same kind first.
pub fn tangle_cf<T: Int>(tw: &TangleWord) -> ContinuedFraction<T> {
    let mut stack: Vec<Twist> = Vec::new();
    for &t in &tw.twists {
        let undoes = stack
            .last()
            .is_some_and(|&p| p.is_vertical() == t.is_vertical() && p.is_untwist() != t.is_untwist());
        if undoes {
            stack.pop();
        } else {
            stack.push(t);
        }
    }
    let mut runs: Vec<i64> = vec![0];
    let mut vertical = true;
    for t in stack {
        if t.is_vertical() != vertical {
            runs.push(0);
            vertical = !vertical;
        }
        *runs.last_mut().expect("nonempty") += if t.is_untwist() { -1 } else { 1 };
    }
    if runs.len().is_multiple_of(2) {
        runs.push(0);
    }
    let coeffs = runs.into_iter().rev().map(from_i64).collect();
    ContinuedFraction::new(coeffs).expect("nonempty")
}

/// Where a crossing sits relative to the tangle built so far.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingPosition {
    RightSide,
    BottomSide,
}

impl fmt::Display for CrossingPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossingPosition::RightSide => "right",
            CrossingPosition::BottomSide => "bottom",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub position: CrossingPosition,
    /// +1 for a twist, -1 for an untwist.
    pub sign: i8,
}

/// Boundary points of a tangle, on the corners of its square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    NW,
    NE,
    SW,
    SE,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TangleDiagram {
    pub crossings: Vec<Crossing>,
}

impl TangleDiagram {
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.sign)).sum()
    }

    pub const ENDPOINTS: [Endpoint; 4] = [Endpoint::NW, Endpoint::NE, Endpoint::SW, Endpoint::SE];
}

/// One crossing per twist: vertical ones on the right side, horizontal ones
/// along the bottom.
pub fn build_tangle(tw: &TangleWord) -> TangleDiagram {
    let crossings = tw
        .twists
        .iter()
        .map(|t| Crossing {
            position: if t.is_vertical() {
                CrossingPosition::RightSide
            } else {
                CrossingPosition::BottomSide
            },
            sign: if t.is_untwist() { -1 } else { 1 },
        })
        .collect();
    TangleDiagram { crossings }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = ExtRational<i64>;

    fn tw(s: &str) -> TangleWord {
        s.parse().unwrap()
    }

    #[test]
    fn numbers() {
        assert_eq!(tangle_number::<i64>(&tw("V^2 H V^-1")), Q::make(-1, 3).unwrap());
        assert_eq!(tangle_number::<i64>(&TangleWord::default()), Q::zero());
        assert_eq!(tangle_number::<i64>(&tw("V^-1")), Q::make(-1, 1).unwrap());
        assert_eq!(tangle_cf::<i64>(&tw("V^2 H V^-1")).coeffs(), &[-1, 1, 2]);
        assert_eq!(tangle_cf::<i64>(&tw("V^2 H V^-1")).eval(), Q::make(-1, 3).unwrap());
    }

    #[test]
    fn parses_and_prints() {
        assert_eq!(
            tw("v h^2 V").twists(),
            &[
                Twist::VerticalInv,
                Twist::HorizontalInv,
                Twist::HorizontalInv,
                Twist::Vertical
            ]
        );
        assert_eq!(tw("V V H^-1").to_string(), "V^2 H^-1");
        assert_eq!(TangleWord::default().to_string(), "e");
        assert!("V R".parse::<TangleWord>().is_err());
    }

    #[test]
    fn crossings() {
        use CrossingPosition::*;
        let d = build_tangle(&tw("V^2 H^2"));
        let got: Vec<_> = d.crossings.iter().map(|c| (c.position, c.sign)).collect();
        assert_eq!(got, [(RightSide, 1), (RightSide, 1), (BottomSide, 1), (BottomSide, 1)]);
        assert!(build_tangle(&TangleWord::default()).crossings.is_empty());
        let d = build_tangle(&tw("V^2 H V^-1"));
        let got: Vec<_> = d.crossings.iter().map(|c| (c.position, c.sign)).collect();
        assert_eq!(got, [(RightSide, 1), (RightSide, 1), (BottomSide, 1), (RightSide, -1)]);
        assert_eq!(d.writhe(), 2);
        // history is kept
        assert_eq!(build_tangle(&tw("V v")).crossings.len(), 2);
    }
}
