//! Exact integer scalars used by every counting routine.
//!
//! All counts (traces, walk counts, cycle multiplicities) are computed with
//! checked arithmetic over a caller-chosen integer type. `i128` is the default
//! (see [`crate::Count`]); `num_bigint::BigInt` removes the overflow ceiling.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive};

use crate::error::{Error, Result};

/// An exact integer type usable as a count.
///
/// Signedness is not required, but some closed forms carry factors such as
/// `d - 2` that are negative for degree-one nodes; unsigned scalars report
/// those as [`Error::Overflow`].
pub trait ExactInt:
    Integer
    + Clone
    + Debug
    + Display
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_u64_exact(v: u64) -> Result<Self> {
        Self::from_u64(v).ok_or(Error::Overflow)
    }

    fn from_i128_exact(v: i128) -> Result<Self> {
        Self::from_i128(v).ok_or(Error::Overflow)
    }

    fn add_exact(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    fn sub_exact(&self, rhs: &Self) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Overflow)
    }

    fn mul_exact(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }

    /// `self * k` for a small signed coefficient.
    fn scale(&self, k: i128) -> Result<Self> {
        self.mul_exact(&Self::from_i128_exact(k)?)
    }

    fn pow_exact(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_exact(self)?;
        }
        Ok(acc)
    }
}

impl<T> ExactInt for T where
    T: Integer
        + Clone
        + Debug
        + Display
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Sums an iterator of exact values, failing on overflow.
pub fn sum_exact<T: ExactInt, I: IntoIterator<Item = T>>(items: I) -> Result<T> {
    items
        .into_iter()
        .try_fold(T::zero(), |acc, x| acc.add_exact(&x))
}
