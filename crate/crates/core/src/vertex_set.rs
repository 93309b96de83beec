//! Subsets of a ground set `1..=n` with `n <= 64`, backed by a bitmask.
//!
//! Element `e` lives in bit `e - 1`. The total order on [`VertexSet`] is the
//! lexicographic order on sorted member lists (a proper prefix sorts first),
//! which is the order used for "smallest lexicographic basis" throughout the
//! crate. It is *not* the numeric order of the underlying mask.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported ground-set size.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// Builds a set from raw bits (bit `i` is element `i + 1`).
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The interval `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set larger than {MAX_ELEMENTS}");
        if n == MAX_ELEMENTS {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// The interval `{lo, ..., hi}` (empty when `lo > hi`).
    pub fn interval(lo: usize, hi: usize) -> Self {
        if lo > hi || hi == 0 {
            return VertexSet::empty();
        }
        let lo = lo.max(1);
        VertexSet(Self::full(hi).0 & !Self::full(lo - 1).0)
    }

    pub fn singleton(e: usize) -> Self {
        assert!((1..=MAX_ELEMENTS).contains(&e), "element {e} out of range");
        VertexSet(1u64 << (e - 1))
    }

    pub fn from_slice(elements: &[usize]) -> Self {
        elements.iter().copied().collect()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn with(self, e: usize) -> Self {
        VertexSet(self.0 | Self::singleton(e).0)
    }

    pub fn without(self, e: usize) -> Self {
        if (1..=MAX_ELEMENTS).contains(&e) {
            VertexSet(self.0 & !(1u64 << (e - 1)))
        } else {
            self
        }
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members strictly greater than `e`.
    pub fn above(self, e: usize) -> Self {
        if e >= MAX_ELEMENTS {
            return VertexSet::empty();
        }
        VertexSet(self.0 & !Self::full(e).0)
    }

    /// Members strictly smaller than `e`.
    pub fn below(self, e: usize) -> Self {
        if e == 0 {
            return VertexSet::empty();
        }
        VertexSet(self.0 & Self::full((e - 1).min(MAX_ELEMENTS)).0)
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Componentwise comparison of sorted member lists (`b_i <= b'_i` for all
    /// `i`). Sets of different sizes are incomparable.
    pub fn gale_le(self, other: Self) -> bool {
        self.len() == other.len() && self.iter().zip(other.iter()).all(|(a, b)| a <= b)
    }

    /// Order-preserving compression onto `1..=|within|`: the `k`-th smallest
    /// element of `within` becomes `k`. Members outside `within` are dropped.
    pub fn compress(self, within: VertexSet) -> Self {
        let mut out = 0u64;
        for (k, e) in within.iter().enumerate() {
            if self.contains(e) {
                out |= 1u64 << k;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`VertexSet::compress`]: element `k` maps to the `k`-th
    /// smallest member of `onto`.
    pub fn expand(self, onto: VertexSet) -> Self {
        let targets = onto.to_vec();
        self.iter().map(|k| targets[k - 1]).collect()
    }

    /// All subsets of `self`, in increasing mask order (starting with the
    /// empty set).
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All `k`-element subsets of `self`.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = VertexSet> {
        self.subsets().filter(move |s| s.len() == k)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        // Both lists agree below `low`; whoever owns `low` has the smaller
        // element at the first differing position unless the other list ends.
        let above_low = !((low << 1).wrapping_sub(1));
        if self.0 & low != 0 {
            if other.0 & above_low != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above_low != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(VertexSet::empty(), |s, e| s.with(e))
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl DoubleEndedIterator for Iter {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let top = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << top);
        Some(top + 1)
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(deserializer)?;
        if let Some(bad) = elements.iter().find(|&&e| e == 0 || e > MAX_ELEMENTS) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} outside 1..={MAX_ELEMENTS}"
            )));
        }
        Ok(VertexSet::from_slice(&elements))
    }
}

/// Shorthand for building a [`VertexSet`] from literal elements.
#[macro_export]
macro_rules! vset {
    () => { $crate::VertexSet::empty() };
    ($($e:expr),+ $(,)?) => { $crate::VertexSet::from_slice(&[$($e),+]) };
}
