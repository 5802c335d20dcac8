#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use pullcalc_core::{Fraction64, Turn, TurnWord};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Fraction64 {
    Fraction64::make(n, d).unwrap()
}

/// Taffy number from 2x2 integer matrices acting on the column `(a, b)`.
pub fn matrix_number(word: &TurnWord) -> (BigInt, BigInt) {
    let mut v = [BigInt::zero(), BigInt::one()];
    for t in word.iter() {
        let [a, b] = v;
        v = match t {
            Turn::Right => [&a + &b, b],
            Turn::Left => [a.clone(), &a + &b],
            Turn::RightInv => [&a - &b, b],
            Turn::LeftInv => [a.clone(), &b - &a],
        };
    }
    projective(v[0].clone(), v[1].clone())
}

/// Lowest terms with a nonnegative denominator; `(±1, 0)` becomes `(1, 0)`.
pub fn projective(a: BigInt, b: BigInt) -> (BigInt, BigInt) {
    let g = a.gcd(&b);
    let (mut a, mut b) = (a / &g, b / &g);
    if b.is_negative() || (b.is_zero() && a.is_negative()) {
        a = -a;
        b = -b;
    }
    (a, b)
}

/// Continued fraction value through the convergent recurrence
/// `h_n = c_n h_{n-1} + h_{n-2}`.
pub fn convergent_value(coeffs: &[i64]) -> (BigInt, BigInt) {
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    for &c in coeffs {
        let c = BigInt::from(c);
        let h = &c * &h1 + &h0;
        let k = &c * &k1 + &k0;
        h0 = std::mem::replace(&mut h1, h);
        k0 = std::mem::replace(&mut k1, k);
    }
    projective(h1, k1)
}

pub fn parts(q: &Fraction64) -> (BigInt, BigInt) {
    (BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> TurnWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Turn::ALL[rng.gen_range(0..4)]).collect()
}

/// Every word over the four turns with exactly `len` letters.
pub fn words_of_length(len: usize) -> impl Iterator<Item = TurnWord> {
    (0..4usize.pow(len as u32)).map(move |mut code| {
        (0..len)
            .map(|_| {
                let t = Turn::ALL[code % 4];
                code /= 4;
                t
            })
            .collect()
    })
}

pub fn coprime_fractions(max_num: i64, max_den: i64) -> Vec<Fraction64> {
    let mut out = vec![Fraction64::zero(), Fraction64::infinity()];
    for b in 1..=max_den {
        for a in -max_num..=max_num {
            if a != 0 && a.gcd(&b) == 1 {
                out.push(q(a, b));
            }
        }
    }
    out
}
