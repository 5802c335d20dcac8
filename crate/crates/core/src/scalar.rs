//! The integer scalar the exact arithmetic is generic over.
//!
//! Every fraction, layer count and continued-fraction coefficient in this
//! crate is built from a type implementing [`Int`]. [`num_bigint::BigInt`]
//! is the default (see the aliases at the crate root); fixed-width `i64` and
//! `i128` also qualify and are useful for bounded sweeps, but overflow panics
//! in debug builds once layer counts outgrow the width (around 90 turns for
//! `i64`).

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Signed exact integer usable as the scalar of [`crate::ExtRational`].
pub trait Int:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + FromStr
    + Hash
    + ToPrimitive
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromStr
        + Hash
        + ToPrimitive
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Converts a machine integer into the scalar type.
pub(crate) fn from_i64<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("value out of range for the scalar type")
}
