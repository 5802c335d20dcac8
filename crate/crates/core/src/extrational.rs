//! Fractions in lowest terms extended by the single point `1/0`, the four
//! tree rules, and continued fractions.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::Int;
use crate::turnword::Turn;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FractionError {
    #[error("0/0 is not a fraction")]
    ZeroOverZero,
    #[error("cannot parse {0:?} as a fraction")]
    Syntax(String),
}

/// `num/den` in lowest terms with `den >= 0`. Zero is `0/1` and the only
/// point with a zero denominator is `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtRational<T> {
    num: T,
    den: T,
}

impl<T: Int> ExtRational<T> {
    /// Normalizes `num/den`; `-1/0` becomes `1/0`.
    pub fn make(num: T, den: T) -> Result<Self, FractionError> {
        if num.is_zero() && den.is_zero() {
            return Err(FractionError::ZeroOverZero);
        }
        Ok(Self::normalized(num, den))
    }

    // Callers guarantee (num, den) != (0, 0).
    fn normalized(num: T, den: T) -> Self {
        if den.is_zero() {
            return Self::infinity();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g.clone(), den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        ExtRational { num, den }
    }

    pub fn zero() -> Self {
        ExtRational {
            num: T::zero(),
            den: T::one(),
        }
    }

    pub fn infinity() -> Self {
        ExtRational {
            num: T::one(),
            den: T::zero(),
        }
    }

    pub fn from_integer(n: T) -> Self {
        ExtRational { num: n, den: T::one() }
    }

    pub fn numer(&self) -> &T {
        &self.num
    }

    pub fn denom(&self) -> &T {
        &self.den
    }

    pub fn into_parts(self) -> (T, T) {
        (self.num, self.den)
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive() && !self.den.is_zero()
    }

    pub fn abs(&self) -> Self {
        ExtRational {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        ExtRational {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    /// `1/q`, with `1/0` and `0/1` exchanged.
    pub fn recip(&self) -> Self {
        Self::normalized(self.den.clone(), self.num.clone())
    }

    /// `-1/q`.
    pub fn neg_recip(&self) -> Self {
        Self::normalized(-self.den.clone(), self.num.clone())
    }

    /// One step in the four-way tree: left `a/(a+b)`, right `(a+b)/b`,
    /// and their inverses `a/(b-a)`, `(a-b)/b`.
    pub fn apply_turn(&self, turn: Turn) -> Self {
        let (a, b) = (self.num.clone(), self.den.clone());
        // Each rule is unimodular, so the image of a coprime pair is never 0/0.
        match turn {
            Turn::Left => Self::normalized(a.clone(), a + b),
            Turn::Right => Self::normalized(a + b.clone(), b),
            Turn::LeftInv => Self::normalized(a.clone(), b - a),
            Turn::RightInv => Self::normalized(a - b.clone(), b),
        }
    }
}

impl<T: Int> fmt::Display for ExtRational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `a/b`, `-a/b`, `a/-b`, `1/0` and a bare integer.
impl<T: Int> FromStr for ExtRational<T> {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let bad = || FractionError::Syntax(s.to_string());
        let int = |part: &str| -> Result<T, FractionError> {
            let part = part.trim();
            let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            part.strip_prefix('+').unwrap_or(part).parse::<T>().map_err(|_| bad())
        };
        match text.split_once('/') {
            Some((n, d)) => Self::make(int(n)?, int(d)?),
            None => Ok(Self::from_integer(int(text)?)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContinuedFractionError {
    #[error("a continued fraction needs at least one coefficient")]
    Empty,
    #[error("expansion is defined for finite fractions a/b with a >= 0, got {0}")]
    OutOfDomain(String),
    #[error("cannot parse {0:?} as a continued fraction")]
    Syntax(String),
}

/// Coefficients `[c0; c1, ..., cm]` of `c0 + 1/(c1 + 1/(... + 1/cm))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction<T> {
    coeffs: Vec<T>,
}

impl<T: Int> ContinuedFraction<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self, ContinuedFractionError> {
        if coeffs.is_empty() {
            return Err(ContinuedFractionError::Empty);
        }
        Ok(ContinuedFraction { coeffs })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Bottom-up evaluation on the extended line: `c + 1/(1/0) = c` and
    /// `c + 1/(0/1) = 1/0`, so any signed coefficients evaluate.
    pub fn eval(&self) -> ExtRational<T> {
        let mut iter = self.coeffs.iter().rev();
        let last = iter.next().expect("nonempty by construction").clone();
        let (mut p, mut q) = (last, T::one());
        for c in iter {
            // c + q/p = (c*p + q)/p
            let next = c.clone() * p.clone() + q;
            q = p;
            p = next;
            let g = p.gcd(&q);
            if !g.is_zero() && !g.is_one() {
                p = p / g.clone();
                q = q / g;
            }
        }
        ExtRational::normalized(p, q)
    }

    /// Standard expansion by repeated division. The last coefficient is at
    /// least 2 unless the expansion is the single integer `[a]`.
    pub fn expand(q: &ExtRational<T>) -> Result<Self, ContinuedFractionError> {
        if q.is_infinite() || q.is_negative() {
            return Err(ContinuedFractionError::OutOfDomain(q.to_string()));
        }
        let (mut a, mut b) = (q.numer().clone(), q.denom().clone());
        let mut coeffs = Vec::new();
        loop {
            let (quot, rem) = a.div_rem(&b);
            coeffs.push(quot);
            if rem.is_zero() {
                break;
            }
            a = b;
            b = rem;
        }
        Ok(ContinuedFraction { coeffs })
    }
}

pub fn cf_eval<T: Int>(cf: &ContinuedFraction<T>) -> ExtRational<T> {
    cf.eval()
}

pub fn cf_expand<T: Int>(q: &ExtRational<T>) -> Result<ContinuedFraction<T>, ContinuedFractionError> {
    ContinuedFraction::expand(q)
}

impl<T: Int> fmt::Display for ContinuedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.coeffs[0])?;
        for (i, c) in self.coeffs[1..].iter().enumerate() {
            write!(f, "{}{}", if i == 0 { "; " } else { ", " }, c)?;
        }
        f.write_str("]")
    }
}

/// Accepts `[c0; c1, c2]`, `[c0, c1, c2]` and `[c0]`; spacing is free.
impl<T: Int> FromStr for ContinuedFraction<T> {
    type Err = ContinuedFractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ContinuedFractionError::Syntax(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (head, tail) = match inner.split_once(';') {
            Some((h, t)) => (h, Some(t)),
            None => (inner, None),
        };
        let mut parts: Vec<&str> = head.split(',').collect();
        if let Some(t) = tail {
            if parts.len() != 1 {
                return Err(bad());
            }
            parts.extend(t.split(','));
        }
        let coeffs = parts
            .into_iter()
            .map(|p| {
                let p = p.trim();
                let digits = p.strip_prefix('-').unwrap_or(p);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                p.parse::<T>().map_err(|_| bad())
            })
            .collect::<Result<Vec<T>, _>>()?;
        Self::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = ExtRational<i64>;

    fn q(n: i64, d: i64) -> Q {
        Q::make(n, d).unwrap()
    }

    fn cf(c: &[i64]) -> ContinuedFraction<i64> {
        ContinuedFraction::new(c.to_vec()).unwrap()
    }

    #[test]
    fn make_normalizes() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(-1, 0), Q::infinity());
        assert_eq!(q(5, 0), Q::infinity());
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert_eq!(q(0, -7), Q::zero());
        assert_eq!(Q::make(0, 0), Err(FractionError::ZeroOverZero));
    }

    #[test]
    fn tree_rules() {
        assert_eq!(q(1, 1).apply_turn(Turn::RightInv), q(0, 1));
        assert_eq!(q(0, 1).apply_turn(Turn::Left), q(0, 1));
        assert_eq!(q(0, 1).apply_turn(Turn::RightInv), q(-1, 1));
        assert_eq!(q(3, 2).apply_turn(Turn::Left), q(3, 5));
        assert_eq!(q(3, 2).apply_turn(Turn::Right), q(5, 2));
        let inf = Q::infinity();
        assert_eq!(inf.apply_turn(Turn::Right), inf);
        assert_eq!(inf.apply_turn(Turn::RightInv), inf);
        assert_eq!(inf.apply_turn(Turn::Left), q(1, 1));
        assert_eq!(inf.apply_turn(Turn::LeftInv), q(-1, 1));
    }

    #[test]
    fn negative_reciprocal() {
        assert_eq!(q(3, 2).neg_recip(), q(-2, 3));
        assert_eq!(Q::zero().neg_recip(), Q::infinity());
        assert_eq!(Q::infinity().neg_recip(), Q::zero());
    }

    #[test]
    fn evaluates_continued_fractions() {
        assert_eq!(cf(&[-1, 1, 2]).eval(), q(-1, 3));
        assert_eq!(cf(&[1, 3, 2]).eval(), q(9, 7));
        // 0 + 1/(1 + 1/(1 + 1/(1 + 1/0))): the innermost 1/0 collapses to 1
        assert_eq!(cf(&[0, 1, 1, 1, 0]).eval(), q(1, 2));
        assert_eq!(cf(&[0]).eval(), Q::zero());
        assert_eq!(cf(&[0, 0]).eval(), Q::infinity());
        assert_eq!(cf(&[2, 0, 3]).eval(), q(5, 1));
    }

    #[test]
    fn expands_fractions() {
        assert_eq!(cf_expand(&q(9, 7)).unwrap(), cf(&[1, 3, 2]));
        assert_eq!(cf_expand(&q(1, 1)).unwrap(), cf(&[1]));
        assert_eq!(cf_expand(&q(2, 5)).unwrap(), cf(&[0, 2, 2]));
        assert_eq!(cf_expand(&Q::zero()).unwrap(), cf(&[0]));
        assert!(matches!(
            cf_expand(&q(-1, 2)),
            Err(ContinuedFractionError::OutOfDomain(_))
        ));
        assert!(cf_expand(&Q::infinity()).is_err());
    }

    #[test]
    fn parses_and_prints() {
        assert_eq!("-3/6".parse::<Q>().unwrap(), q(-1, 2));
        assert_eq!("4".parse::<Q>().unwrap(), q(4, 1));
        assert_eq!("1/0".parse::<Q>().unwrap(), Q::infinity());
        assert_eq!("-1/0".parse::<Q>().unwrap(), Q::infinity());
        assert_eq!("0/0".parse::<Q>(), Err(FractionError::ZeroOverZero));
        assert!("1/".parse::<Q>().is_err());
        assert!("a/b".parse::<Q>().is_err());
        assert!("1/2/3".parse::<Q>().is_err());
        assert_eq!(cf(&[1, 3, 2]).to_string(), "[1; 3, 2]");
        assert_eq!(cf(&[7]).to_string(), "[7]");
        assert_eq!("[1;3,2]".parse::<ContinuedFraction<i64>>().unwrap(), cf(&[1, 3, 2]));
        assert_eq!("[ -1 ; 1 , 2 ]".parse::<ContinuedFraction<i64>>().unwrap(), cf(&[-1, 1, 2]));
        assert_eq!("[1, 3, 2]".parse::<ContinuedFraction<i64>>().unwrap(), cf(&[1, 3, 2]));
        assert!("[]".parse::<ContinuedFraction<i64>>().is_err());
        assert!("1;2".parse::<ContinuedFraction<i64>>().is_err());
    }

    #[test]
    fn big_integers_round_trip() {
        let big: ExtRational<BigInt> = "354224848179261915075/218922995834555169026".parse().unwrap();
        let back = cf_expand(&big).unwrap().eval();
        assert_eq!(back, big);
    }

    #[test]
    fn rules_undo_each_other_exhaustively() {
        let mut points = vec![Q::infinity()];
        for a in -50..=50 {
            for b in 1..=50 {
                if num_integer::gcd(a, b) == 1 {
                    points.push(q(a, b));
                }
            }
        }
        for p in &points {
            assert_eq!(Q::make(*p.numer(), *p.denom()).unwrap(), *p);
            assert_eq!(p.neg_recip().neg_recip(), *p);
            for t in Turn::ALL {
                let image = p.apply_turn(t);
                assert_eq!(Q::make(*image.numer(), *image.denom()).unwrap(), image);
                assert_eq!(image.apply_turn(t.inverse()), *p, "{p} {t:?}");
            }
        }
    }

    #[test]
    fn expansion_round_trips() {
        for a in 0..=300i64 {
            for b in 1..=300i64 {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let x = q(a, b);
                let c = cf_expand(&x).unwrap();
                assert_eq!(c.eval(), x);
                let coeffs = c.coeffs();
                assert!(coeffs[1..].iter().all(|&k| k >= 1));
                if coeffs.len() > 1 {
                    assert!(*coeffs.last().unwrap() >= 2);
                }
            }
        }
    }
}
