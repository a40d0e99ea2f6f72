//! Subsets of the ground set `[n]`, stored as a bitmask.
//!
//! A `FaceSet` is both a face of a complex and the index `S` of an exterior
//! monomial `e_S`. Vertex `v` lives at bit `v`, so bit 0 is always clear.

use core::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 62;

const VALID_BITS: u64 = ((1u64 << (MAX_VERTICES + 1)) - 1) & !1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FaceSet(u64);

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);

    pub fn from_mask(mask: u64) -> Result<Self> {
        if mask & !VALID_BITS != 0 {
            let bad = (mask & !VALID_BITS).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: bad, n: MAX_VERTICES });
        }
        Ok(Self(mask))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            mask |= 1 << v;
        }
        Ok(Self(mask))
    }

    /// The full set `{1, …, n}`.
    pub fn full(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Self(((1u64 << (n + 1)) - 1) & !1))
    }

    pub fn singleton(v: usize) -> Result<Self> {
        Self::from_vertices([v])
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
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
    pub fn contains(self, v: usize) -> bool {
        v <= MAX_VERTICES && self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Self) -> Self {
        Self(self.0 ^ other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// `self` with vertex `v` removed.
    #[inline]
    pub fn without(self, v: usize) -> Self {
        Self(self.0 & !(1 << v))
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        Self(self.0 | (1 << v))
    }

    /// True when every vertex lies in `[1, n]`.
    pub fn within(self, n: usize) -> bool {
        n >= MAX_VERTICES || self.0 >> (n + 1) == 0
    }

    /// Relabel `v ↦ v + offset`.
    pub fn shifted(self, offset: usize) -> Result<Self> {
        if self.is_empty() {
            return Ok(self);
        }
        let top = self.max().unwrap() + offset;
        if top > MAX_VERTICES {
            return Err(Error::VertexOutOfRange { vertex: top, n: MAX_VERTICES });
        }
        Ok(Self(self.0 << offset))
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    /// Every subset of `self`, including `∅` and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets { full: self.0, next: Some(0) }
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Vertices {}

impl DoubleEndedIterator for Vertices {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1 << v);
        Some(v)
    }
}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    full: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = FaceSet;

    fn next(&mut self) -> Option<FaceSet> {
        let cur = self.next?;
        self.next = if cur == self.full { None } else { Some((cur.wrapping_sub(self.full)) & self.full) };
        Some(FaceSet(cur))
    }
}

/// All `d`-subsets of `[n]` in increasing mask order (colex).
///
/// Iterates 0-based masks and shifts them into place on output.
pub fn k_subsets(n: usize, d: usize) -> KSubsets {
    let next = if d > n || n > MAX_VERTICES { None } else { Some((1u64 << d) - 1) };
    KSubsets { limit: 1u64 << n, next, d }
}

pub struct KSubsets {
    limit: u64,
    next: Option<u64>,
    d: usize,
}

impl Iterator for KSubsets {
    type Item = FaceSet;

    fn next(&mut self) -> Option<FaceSet> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if self.d == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(FaceSet(cur << 1))
    }
}

/// Binomial coefficient; exact for `n <= 62`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Position of `s` among the `|s|`-subsets in colex order (the order of
/// [`k_subsets`]).
pub fn colex_rank(s: FaceSet) -> usize {
    s.iter().enumerate().map(|(i, v)| binomial(v - 1, i + 1) as usize).sum()
}
