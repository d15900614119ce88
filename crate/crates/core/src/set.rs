//! Vertex subsets of a fixed universe `{0, .., n-1}`, stored as one machine word.

use std::fmt;

/// Bitmask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the vertices `0..n` of some graph.
///
/// Values are immutable in spirit: every operation returns a new set. The
/// universe size travels with the set so that complements are well defined.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    universe: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        debug_assert!(universe <= 64);
        VertexSet { bits: 0, universe }
    }

    pub fn full(universe: usize) -> Self {
        debug_assert!(universe <= 64);
        VertexSet {
            bits: low_mask(universe),
            universe,
        }
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        debug_assert!(v < universe);
        VertexSet {
            bits: 1u64 << v,
            universe,
        }
    }

    /// Builds a set from raw bits; bits at or above `universe` are cleared.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        debug_assert!(universe <= 64);
        VertexSet {
            bits: bits & low_mask(universe),
            universe,
        }
    }

    pub fn from_slice(universe: usize, vs: &[usize]) -> Self {
        let mut bits = 0u64;
        for &v in vs {
            debug_assert!(v < universe);
            bits |= 1u64 << v;
        }
        VertexSet { bits, universe }
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < 64 && (self.bits >> v) & 1 == 1
    }

    pub fn with(&self, v: usize) -> Self {
        debug_assert!(v < self.universe);
        VertexSet {
            bits: self.bits | (1u64 << v),
            universe: self.universe,
        }
    }

    pub fn without(&self, v: usize) -> Self {
        VertexSet {
            bits: self.bits & !(1u64 << v),
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            bits: self.bits | other.bits,
            universe: self.universe,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            bits: self.bits & other.bits,
            universe: self.universe,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            bits: self.bits & !other.bits,
            universe: self.universe,
        }
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            bits: !self.bits & low_mask(self.universe),
            universe: self.universe,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Smallest element, if any.
    pub fn min(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Iterates the set bits of a raw mask in ascending order.
#[inline]
pub(crate) fn bits_of(mask: u64) -> BitIter {
    BitIter(mask)
}

impl serde::Serialize for VertexSet {
    /// Serializes as the ascending member list, e.g. `[0, 2, 5]`.
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({self})")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_involution() {
        let s = VertexSet::from_slice(10, &[0, 3, 7]);
        assert_eq!(s.complement().complement(), s);
        assert_eq!(s.complement().len(), 7);
    }

    #[test]
    fn complement_respects_universe() {
        let s = VertexSet::empty(5);
        assert_eq!(s.complement().to_vec(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn iter_ascending() {
        let s = VertexSet::from_bits(64, 0b1010_0110);
        assert_eq!(s.to_vec(), vec![1, 2, 5, 7]);
        assert_eq!(s.min(), Some(1));
    }

    #[test]
    fn display_braces() {
        let s = VertexSet::from_slice(6, &[1, 4]);
        assert_eq!(s.to_string(), "{1, 4}");
        assert_eq!(VertexSet::empty(3).to_string(), "{}");
    }
}
