use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer ring element usable as a polynomial or matrix entry.
///
/// Implemented for every type that provides the listed `num` traits, which
/// covers `BigInt`, `i64` and `i128`. Fixed-width types overflow silently in
/// release builds, so the certificate pipeline always uses `BigInt`.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Ord
    + Hash
    + Signed
    + Integer
    + Roots
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
    fn from_small(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot hold a small integer")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Hash
        + Signed
        + Integer
        + Roots
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}
