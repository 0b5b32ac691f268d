//! Small vertex sets over the ambient vertex set `{1, ..., n}`, stored as
//! bitmasks. Vertex labels are 1-based throughout; `n` up to 32 is supported
//! (the rest of the crate only needs n <= 24).

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of the vertex set `{1, ..., n}`.
///
/// Equality, hashing and ordering are on the underlying bitmask, so two sets
/// are equal exactly when they contain the same vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 32, "vertex sets support at most 32 labels");
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=32).contains(&v));
        VertexSet(1 << (v - 1))
    }

    pub fn from_mask(mask: u32) -> Self {
        VertexSet(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 32 && self.0 & (1 << (v - 1)) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | VertexSet::singleton(v).0)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !VertexSet::singleton(v).0)
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

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Self) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Vertices in ascending label order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize + 1;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// All subsets of `self`, the empty set first and `self` last.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                // standard submask-stepping trick
                Some(cur.wrapping_sub(full) & full)
            };
            Some(VertexSet(cur))
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        for &v in &labels {
            if !(1..=32).contains(&v) {
                return Err(D::Error::custom(format!("vertex label {v} out of range 1..=32")));
            }
        }
        Ok(labels.into_iter().collect())
    }
}

/// Keeps the inclusion-maximal members of `sets`, deduplicated, in ascending
/// mask order.
pub fn maximal_members(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable();
    sets.dedup();
    let kept: Vec<VertexSet> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| s.is_proper_subset_of(*t)))
        .copied()
        .collect();
    kept
}

/// Keeps the inclusion-minimal members of `sets`, deduplicated, in ascending
/// mask order.
pub fn minimal_members(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable();
    sets.dedup();
    let kept: Vec<VertexSet> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| t.is_proper_subset_of(**s)))
        .copied()
        .collect();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: VertexSet = [1, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(2));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.to_string(), "{1,3,5}");
        assert!(VertexSet::singleton(3).is_subset_of(s));
        assert_eq!(s.without(3), [1, 5].into_iter().collect());
    }

    #[test]
    fn subsets_enumerates_all() {
        let s: VertexSet = [2, 4, 7].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(s)));
        let mut dedup = subs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
    }

    #[test]
    fn maximal_and_minimal_filters() {
        let sets = vec![
            VertexSet::from_iter([1, 2]),
            VertexSet::from_iter([1, 2, 3]),
            VertexSet::from_iter([4]),
        ];
        assert_eq!(
            maximal_members(sets.clone()),
            vec![VertexSet::from_iter([1, 2, 3]), VertexSet::from_iter([4])]
        );
        assert_eq!(
            minimal_members(sets),
            vec![VertexSet::from_iter([1, 2]), VertexSet::from_iter([4])]
        );
    }
}
