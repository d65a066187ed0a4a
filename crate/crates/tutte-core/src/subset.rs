//! Bitmask subsets of a small ordered ground set.
//!
//! Elements of a ground set of size `n` are the indices `0..n`; the total
//! order on elements is the index order. A [`SubsetMask`] stores membership
//! as bits of a `u64`, so ground sets are limited to 64 elements (exhaustive
//! enumeration applies a much lower cap on top of this).

use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitOr, BitXor};

/// A subset of `{0, .., n-1}` as a bitmask: element `i` is present iff bit
/// `i` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u64;
        for e in elements {
            debug_assert!(e < 64);
            bits |= 1 << e;
        }
        SubsetMask(bits)
    }

    /// Full subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, element: usize) -> bool {
        element < 64 && self.0 >> element & 1 == 1
    }

    pub fn with(self, element: usize) -> Self {
        debug_assert!(element < 64);
        SubsetMask(self.0 | 1 << element)
    }

    pub fn without(self, element: usize) -> Self {
        debug_assert!(element < 64);
        SubsetMask(self.0 & !(1 << element))
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the full set `{0, .., n-1}`.
    pub fn complement_in(self, n: usize) -> Self {
        SubsetMask(!self.0 & Self::full(n).0)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl BitXor for SubsetMask {
    type Output = SubsetMask;
    fn bitxor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 ^ rhs.0)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, e) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All `2^n` subsets of `{0, .., n-1}`, in increasing mask order.
///
/// Callers gate `n` themselves (see [`crate::EXHAUSTIVE_LIMIT`]); this
/// iterator only debug-asserts a sane bound.
pub fn all_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    debug_assert!(n < 32, "all_subsets is for exhaustively enumerable ground sets");
    (0u64..1 << n).map(SubsetMask)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = SubsetMask::from_elements([0, 2, 5]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(2));
        assert!(!a.contains(1));
        assert_eq!(a.elements(), vec![0, 2, 5]);
        assert_eq!(a.without(2).elements(), vec![0, 5]);
        assert_eq!(a.with(1).len(), 4);
        assert_eq!(a.complement_in(6).elements(), vec![1, 3, 4]);
        assert!(a.is_subset_of(SubsetMask::full(6)));
        assert_eq!(a.min_element(), Some(0));
        assert_eq!(SubsetMask::EMPTY.min_element(), None);
    }

    #[test]
    fn display_is_brace_list() {
        assert_eq!(format!("{}", SubsetMask::from_elements([1, 3])), "{1,3}");
        assert_eq!(format!("{}", SubsetMask::EMPTY), "{}");
    }

    #[test]
    fn all_subsets_counts() {
        assert_eq!(all_subsets(0).count(), 1);
        assert_eq!(all_subsets(4).count(), 16);
    }
}
