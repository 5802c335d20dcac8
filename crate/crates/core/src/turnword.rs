//! Words over the four turns: parsing, printing, free reduction and the
//! signed run-length standard form.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest exponent accepted by the word parser.
pub const MAX_EXPONENT: i64 = 1 << 24;

/// Which pair of pegs a turn exchanges.
///
/// The derived order puts `Right` first, which is the tie-break order used
/// when several words are equally good.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::Right => 'R',
            Side::Left => 'L',
        }
    }
}

/// One machine turn, forward or reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Turn {
    Right,
    Left,
    RightInv,
    LeftInv,
}

impl Turn {
    pub const ALL: [Turn; 4] = [Turn::Right, Turn::Left, Turn::RightInv, Turn::LeftInv];

    pub fn new(side: Side, reverse: bool) -> Turn {
        match (side, reverse) {
            (Side::Right, false) => Turn::Right,
            (Side::Left, false) => Turn::Left,
            (Side::Right, true) => Turn::RightInv,
            (Side::Left, true) => Turn::LeftInv,
        }
    }

    pub fn side(self) -> Side {
        match self {
            Turn::Right | Turn::RightInv => Side::Right,
            Turn::Left | Turn::LeftInv => Side::Left,
        }
    }

    pub fn is_reverse(self) -> bool {
        matches!(self, Turn::RightInv | Turn::LeftInv)
    }

    pub fn inverse(self) -> Turn {
        Turn::new(self.side(), !self.is_reverse())
    }

    /// Same direction, other pair of pegs.
    pub fn mirror(self) -> Turn {
        Turn::new(self.side().other(), self.is_reverse())
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&token(self.side().letter(), if self.is_reverse() { -1 } else { 1 }))
    }
}

/// Output styles for [`format_word`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordStyle {
    /// One token per turn, exactly as stored.
    Plain,
    /// Caret run notation of the freely reduced word.
    Runs,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("unexpected character {found:?} at byte {offset}")]
    Unexpected { offset: usize, found: char },
    #[error("expected an integer exponent after '^' at byte {offset}")]
    MissingExponent { offset: usize },
    #[error("exponent at byte {offset} exceeds {max} in magnitude", max = MAX_EXPONENT)]
    ExponentOutOfRange { offset: usize },
}

/// A finite sequence of turns. The empty word is the initial pull.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TurnWord {
    turns: Vec<Turn>,
}

impl TurnWord {
    pub fn new() -> Self {
        TurnWord { turns: Vec::new() }
    }

    pub fn from_turns(turns: Vec<Turn>) -> Self {
        TurnWord { turns }
    }

    pub fn turns(&self) -> &[Turn] {
        &self.turns
    }

    pub fn into_turns(self) -> Vec<Turn> {
        self.turns
    }

    pub fn len(&self) -> usize {
        self.turns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.turns.is_empty()
    }

    pub fn first(&self) -> Option<Turn> {
        self.turns.first().copied()
    }

    pub fn last(&self) -> Option<Turn> {
        self.turns.last().copied()
    }

    pub fn push(&mut self, turn: Turn) {
        self.turns.push(turn);
    }

    pub fn pop(&mut self) -> Option<Turn> {
        self.turns.pop()
    }

    pub fn iter(&self) -> impl Iterator<Item = Turn> + '_ {
        self.turns.iter().copied()
    }

    pub fn concat(&self, other: &TurnWord) -> TurnWord {
        let mut turns = self.turns.clone();
        turns.extend_from_slice(&other.turns);
        TurnWord { turns }
    }

    pub fn with(&self, turn: Turn) -> TurnWord {
        let mut w = self.clone();
        w.push(turn);
        w
    }

    pub fn is_forward(&self) -> bool {
        self.turns.iter().all(|t| !t.is_reverse())
    }

    pub fn is_reverse(&self) -> bool {
        self.turns.iter().all(|t| t.is_reverse())
    }

    /// Free reduction: cancels adjacent inverse pairs until none remain.
    pub fn reduce(&self) -> TurnWord {
        let mut out: Vec<Turn> = Vec::with_capacity(self.turns.len());
        for &t in &self.turns {
            if out.last() == Some(&t.inverse()) {
                out.pop();
            } else {
                out.push(t);
            }
        }
        TurnWord { turns: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.turns.windows(2).all(|p| p[1] != p[0].inverse())
    }

    /// The word that undoes this one: reversed, each turn inverted.
    pub fn inverse(&self) -> TurnWord {
        TurnWord {
            turns: self.turns.iter().rev().map(|t| t.inverse()).collect(),
        }
    }

    /// Inverts every turn in place, keeping the order; negates every run.
    pub fn negate_runs(&self) -> TurnWord {
        TurnWord {
            turns: self.turns.iter().map(|t| t.inverse()).collect(),
        }
    }

    /// Swaps left and right letterwise.
    pub fn mirror(&self) -> TurnWord {
        TurnWord {
            turns: self.turns.iter().map(|t| t.mirror()).collect(),
        }
    }

    pub fn format(&self, style: WordStyle) -> String {
        format_word(self, style)
    }
}

impl FromIterator<Turn> for TurnWord {
    fn from_iter<I: IntoIterator<Item = Turn>>(iter: I) -> Self {
        TurnWord {
            turns: iter.into_iter().collect(),
        }
    }
}

/// Groups equal adjacent turns into caret tokens without reducing.
impl fmt::Display for TurnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&grouped(self.turns.iter().map(|t| (t.side(), t.is_reverse())), 'R', 'L'))
    }
}

impl FromStr for TurnWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// Parses `R`, `L`, `r`, `l`, optional `^k` exponents and `e`.
/// The result is exactly as written; nothing is cancelled.
pub fn parse_word(text: &str) -> Result<TurnWord, ParseWordError> {
    parse_letters(text, 'R', 'L')
        .map(|tokens| tokens.into_iter().map(|(s, r)| Turn::new(s, r)).collect())
}

pub fn format_word(word: &TurnWord, style: WordStyle) -> String {
    match style {
        WordStyle::Plain => {
            if word.is_empty() {
                return "e".to_string();
            }
            word.turns
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
        WordStyle::Runs => word.reduce().to_string(),
    }
}

/// Shared tokenizer for turn words and tangle words. `right` and `left` are
/// the uppercase letters; their lowercase forms denote inverses.
pub(crate) fn parse_letters(
    text: &str,
    right: char,
    left: char,
) -> Result<Vec<(Side, bool)>, ParseWordError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((offset, c)) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        let (side, reverse) = if c == right {
            (Some(Side::Right), false)
        } else if c == left {
            (Some(Side::Left), false)
        } else if c == right.to_ascii_lowercase() {
            (Some(Side::Right), true)
        } else if c == left.to_ascii_lowercase() {
            (Some(Side::Left), true)
        } else if c == 'e' {
            (None, false)
        } else {
            return Err(ParseWordError::Unexpected { offset, found: c });
        };

        let mut exponent: i64 = 1;
        if let Some(&(caret, '^')) = chars.peek() {
            chars.next();
            let start = caret + 1;
            let mut end = start;
            if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
                end += 1;
            }
            let digits_start = end;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end == digits_start {
                return Err(ParseWordError::MissingExponent { offset: start });
            }
            exponent = text[start..end]
                .parse::<i64>()
                .ok()
                .filter(|k| k.abs() <= MAX_EXPONENT)
                .ok_or(ParseWordError::ExponentOutOfRange { offset: start })?;
            while chars.peek().is_some_and(|&(i, _)| i < end) {
                chars.next();
            }
        }

        if let Some(side) = side {
            let rev = reverse ^ (exponent < 0);
            for _ in 0..exponent.unsigned_abs() {
                out.push((side, rev));
            }
        }
    }
    Ok(out)
}

/// Emits caret tokens for runs of identical items, `e` when empty.
pub(crate) fn grouped(items: impl Iterator<Item = (Side, bool)>, right: char, left: char) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut current: Option<((Side, bool), i64)> = None;
    let letter = |s: Side| if s == Side::Right { right } else { left };
    for item in items {
        match &mut current {
            Some((prev, n)) if *prev == item => *n += 1,
            _ => {
                if let Some(((s, r), n)) = current.take() {
                    parts.push(token(letter(s), if r { -n } else { n }));
                }
                current = Some((item, 1));
            }
        }
    }
    if let Some(((s, r), n)) = current {
        parts.push(token(letter(s), if r { -n } else { n }));
    }
    if parts.is_empty() {
        "e".to_string()
    } else {
        parts.join(" ")
    }
}

fn token(letter: char, exponent: i64) -> String {
    if exponent == 1 {
        letter.to_string()
    } else {
        format!("{letter}^{exponent}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunFormError {
    #[error("interior run {index} is zero")]
    ZeroInteriorRun { index: usize },
}

/// Signed run lengths `(n1, ..., nk)` of `R^n1 L^n2 R^n3 ...`.
///
/// Letters alternate starting with `R`. Only the first and last run may be
/// zero; a leading zero stands for a word that starts with an `L` run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RunForm {
    runs: Vec<i64>,
}

impl RunForm {
    pub fn new(runs: Vec<i64>) -> Result<Self, RunFormError> {
        if runs.len() > 2 {
            if let Some(i) = (1..runs.len() - 1).find(|&i| runs[i] == 0) {
                return Err(RunFormError::ZeroInteriorRun { index: i });
            }
        }
        Ok(RunForm { runs })
    }

    pub fn runs(&self) -> &[i64] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// True for the forms produced by [`to_run_form`]: no trailing zero, and
    /// a leading zero only when an `L` run follows it.
    pub fn is_normalized(&self) -> bool {
        match self.runs.as_slice() {
            [] => true,
            [only] => *only != 0,
            [.., last] => *last != 0,
        }
    }

    /// Letter carried by run `index`.
    pub fn side_of(index: usize) -> Side {
        if index.is_multiple_of(2) {
            Side::Right
        } else {
            Side::Left
        }
    }
}

impl fmt::Display for RunForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.runs.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Run-length standard form of the reduced word.
pub fn to_run_form(word: &TurnWord) -> RunForm {
    let reduced = word.reduce();
    let mut runs: Vec<i64> = Vec::new();
    let mut side = Side::Right;
    for t in reduced.iter() {
        if runs.is_empty() {
            runs.push(0);
        }
        if t.side() != side {
            runs.push(0);
            side = t.side();
        }
        let last = runs.last_mut().expect("nonempty");
        *last += if t.is_reverse() { -1 } else { 1 };
    }
    RunForm { runs }
}

/// Expands runs back into turns.
pub fn from_run_form(form: &RunForm) -> TurnWord {
    let mut turns = Vec::new();
    for (i, &n) in form.runs.iter().enumerate() {
        let turn = Turn::new(RunForm::side_of(i), n < 0);
        turns.extend(std::iter::repeat_n(turn, n.unsigned_abs() as usize));
    }
    TurnWord { turns }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Turn::*;

    fn w(s: &str) -> TurnWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn parses_examples() {
        assert_eq!(w("RRL").turns(), &[Right, Right, Left]);
        assert_eq!(w("R^2 L R^-1").turns(), &[Right, Right, Left, RightInv]);
        assert_eq!(w("r l^2").turns(), &[RightInv, LeftInv, LeftInv]);
        assert_eq!(w("R^0"), TurnWord::new());
        assert_eq!(w("e"), TurnWord::new());
        assert_eq!(w(""), TurnWord::new());
        assert_eq!(w("r^-2L"), TurnWord::from_turns(vec![Right, Right, Left]));
        assert_eq!(w("R^+2"), w("RR"));
    }

    #[test]
    fn parse_errors_carry_byte_offsets() {
        assert_eq!(
            parse_word("R x"),
            Err(ParseWordError::Unexpected { offset: 2, found: 'x' })
        );
        assert_eq!(
            parse_word("RL^"),
            Err(ParseWordError::MissingExponent { offset: 3 })
        );
        assert_eq!(
            parse_word("R^-"),
            Err(ParseWordError::MissingExponent { offset: 2 })
        );
        assert!(matches!(
            parse_word("R^99999999999"),
            Err(ParseWordError::ExponentOutOfRange { offset: 2 })
        ));
        // offsets count bytes, not chars
        assert_eq!(
            parse_word("é R"),
            Err(ParseWordError::Unexpected { offset: 0, found: 'é' })
        );
        assert_eq!(
            parse_word("R ²"),
            Err(ParseWordError::Unexpected { offset: 2, found: '²' })
        );
    }

    #[test]
    fn formats() {
        assert_eq!(format_word(&w("RRL"), WordStyle::Runs), "R^2 L");
        assert_eq!(format_word(&TurnWord::new(), WordStyle::Runs), "e");
        assert_eq!(format_word(&w("R l"), WordStyle::Runs), "R L^-1");
        assert_eq!(format_word(&w("R R^-1 L"), WordStyle::Plain), "R R^-1 L");
        assert_eq!(format_word(&w("R R^-1 L"), WordStyle::Runs), "L");
        assert_eq!(format_word(&TurnWord::new(), WordStyle::Plain), "e");
    }

    #[test]
    fn reduces() {
        assert_eq!(w("R^-1 R^2 L").reduce(), w("R L"));
        assert_eq!(w("L L^-1").reduce(), TurnWord::new());
        assert_eq!(w("R R^-1 R R L").reduce(), w("R^2 L"));
        assert!(w("R L R^-1").is_reduced());
        assert!(!w("R R^-1").is_reduced());
    }

    #[test]
    fn run_forms() {
        assert_eq!(to_run_form(&w("R^2 L R^-1")).runs(), &[2, 1, -1]);
        assert_eq!(to_run_form(&w("L R L")).runs(), &[0, 1, 1, 1]);
        assert_eq!(to_run_form(&w("R^2 L^3 R")).runs(), &[2, 3, 1]);
        assert_eq!(to_run_form(&w("R R^-1 R^-1")).runs(), &[-1]);
        assert_eq!(to_run_form(&w("R^2 R^-3 L")).runs(), &[-1, 1]);
        assert!(to_run_form(&TurnWord::new()).is_empty());
    }

    #[test]
    fn expands_run_forms() {
        let f = RunForm::new(vec![2, 1, -1]).unwrap();
        assert_eq!(from_run_form(&f), w("R^2 L R^-1"));
        assert_eq!(from_run_form(&RunForm::default()), TurnWord::new());
        let g = RunForm::new(vec![-1, -2]).unwrap();
        assert_eq!(from_run_form(&g).to_string(), "R^-1 L^-2");
        assert_eq!(
            RunForm::new(vec![1, 0, 2]),
            Err(RunFormError::ZeroInteriorRun { index: 1 })
        );
        // zeros at either end are allowed
        assert!(RunForm::new(vec![0, 2, 1, 0]).is_ok());
        assert!(!RunForm::new(vec![0, 2, 1, 0]).unwrap().is_normalized());
    }

    #[test]
    fn inverts() {
        assert_eq!(w("R L").inverse().to_string(), "L^-1 R^-1");
        assert_eq!(TurnWord::new().inverse(), TurnWord::new());
        assert_eq!(w("R^2").inverse().to_string(), "R^-2");
    }

    #[test]
    fn turn_inverse_is_an_involution() {
        for t in Turn::ALL {
            assert_eq!(t.inverse().inverse(), t);
            assert_ne!(t.inverse(), t);
            assert_eq!(t.inverse().side(), t.side());
        }
        assert_eq!(Left.inverse(), LeftInv);
        assert_eq!(Right.inverse(), RightInv);
    }
}
