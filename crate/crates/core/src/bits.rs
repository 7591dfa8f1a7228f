//! Fixed-width bit sets used for vertex and edge sets.

use core::fmt;

/// A set of small integers below 128.
///
/// Graphs handled by this crate have at most [`crate::graph::MAX_ORDER`]
/// vertices, so both vertex sets and edge sets fit.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bits(pub u128);

impl Bits {
    pub const EMPTY: Bits = Bits(0);

    #[inline]
    pub fn single(i: usize) -> Bits {
        Bits(1u128 << i)
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Bits {
        if n >= 128 {
            Bits(u128::MAX)
        } else {
            Bits((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        self.0 ^= 1u128 << i;
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, o: Bits) -> Bits {
        Bits(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Bits) -> Bits {
        Bits(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Bits) -> Bits {
        Bits(self.0 & !o.0)
    }

    #[inline]
    pub fn sym_diff(self, o: Bits) -> Bits {
        Bits(self.0 ^ o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Bits) -> bool {
        self.0 & !o.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitsIter {
        BitsIter(self.0)
    }
}

pub struct BitsIter(u128);

impl Iterator for BitsIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut b = Bits::EMPTY;
        for i in iter {
            b.insert(i);
        }
        b
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
