//! Integer scalars used for table cells and chain values.
//!
//! Palindrome lengths are non-negative counts, so everything here is bounded
//! by unsigned primitive integers. The width is a memory/range trade-off: the
//! DP table defaults to `u16`, chain values default to `u32`.

use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{FromPrimitive, PrimInt, ToPrimitive, Unsigned};

/// An unsigned count usable as a DP cell or a chain value.
pub trait Length: PrimInt + Unsigned + FromPrimitive + ToPrimitive + Hash + Debug + Default {
    /// Converts a `usize`, returning `None` if it does not fit.
    fn from_count(n: usize) -> Option<Self> {
        Self::from_usize(n)
    }

    fn to_count(self) -> usize {
        self.to_usize().expect("length fits in usize")
    }

    /// Largest length representable.
    fn max_length() -> usize {
        Self::max_value().to_usize().unwrap_or(usize::MAX)
    }
}

impl<T> Length for T where
    T: PrimInt + Unsigned + FromPrimitive + ToPrimitive + Hash + Debug + Default
{
}
