use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::Serialize;

/// A set of vertices of a graph on `width` vertices, stored as one machine
/// word. Bit `v` is set iff vertex `v` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    width: usize,
    bits: u64,
}

#[inline]
pub(crate) fn full_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl VertexSet {
    pub fn empty(width: usize) -> Self {
        debug_assert!(width <= super::MAX_VERTICES);
        VertexSet { width, bits: 0 }
    }

    pub fn full(width: usize) -> Self {
        VertexSet {
            width,
            bits: full_mask(width),
        }
    }

    /// Builds a set from raw bits; bits at or above `width` are discarded.
    pub fn from_bits(width: usize, bits: u64) -> Self {
        VertexSet {
            width,
            bits: bits & full_mask(width),
        }
    }

    pub fn singleton(width: usize, v: usize) -> Self {
        assert!(v < width, "vertex {v} out of range {width}");
        VertexSet {
            width,
            bits: 1 << v,
        }
    }

    pub fn from_vertices(width: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(width);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
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
    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.width)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.width && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.width, "vertex {v} out of range {}", self.width);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.width {
            self.bits &= !(1 << v);
        }
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.bits & other.bits != 0
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            width: self.width,
            bits: !self.bits & full_mask(self.width),
        }
    }

    /// Lowest member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
pub struct Iter {
    bits: u64,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;

    fn bitor(self, rhs: VertexSet) -> VertexSet {
        debug_assert_eq!(self.width, rhs.width);
        VertexSet {
            width: self.width,
            bits: self.bits | rhs.bits,
        }
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;

    fn bitand(self, rhs: VertexSet) -> VertexSet {
        debug_assert_eq!(self.width, rhs.width);
        VertexSet {
            width: self.width,
            bits: self.bits & rhs.bits,
        }
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;

    fn sub(self, rhs: VertexSet) -> VertexSet {
        debug_assert_eq!(self.width, rhs.width);
        VertexSet {
            width: self.width,
            bits: self.bits & !rhs.bits,
        }
    }
}

impl Not for VertexSet {
    type Output = VertexSet;

    fn not(self) -> VertexSet {
        self.complement()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// Serialized as the sorted member list; the width comes from context.
impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl VertexSet {
    /// Parses the serialized member list back into a set of the given width.
    pub fn from_json(width: usize, value: &serde_json::Value) -> Option<Self> {
        let members: Vec<usize> = serde_json::from_value(value.clone()).ok()?;
        if members.iter().any(|&v| v >= width) {
            return None;
        }
        Some(Self::from_vertices(width, members))
    }
}
