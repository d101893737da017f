//! Compact bitsets over the edge indices of one multipole.

use crate::multipole::EdgeRef;
use std::cmp::Ordering;

/// Fixed-universe bitset over edge indices `0..capacity`.
///
/// All binary operations require both operands to come from the same
/// universe (same capacity); this is the caller's responsibility and is
/// checked with debug assertions only.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeSet {
    capacity: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(capacity: usize) -> Self {
        EdgeSet {
            capacity,
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = EdgeSet::empty(capacity);
        for word in 0..set.words.len() {
            set.words[word] = u64::MAX;
        }
        set.trim();
        set
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.capacity;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, e: EdgeRef) {
        debug_assert!(e.0 < self.capacity);
        self.words[e.0 / 64] |= 1 << (e.0 % 64);
    }

    pub fn remove(&mut self, e: EdgeRef) {
        debug_assert!(e.0 < self.capacity);
        self.words[e.0 / 64] &= !(1 << (e.0 % 64));
    }

    pub fn contains(&self, e: EdgeRef) -> bool {
        debug_assert!(e.0 < self.capacity);
        self.words[e.0 / 64] >> (e.0 % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        debug_assert_eq!(self.capacity, other.capacity);
        let mut out = self.clone();
        out.union_in_place(other);
        out
    }

    pub fn union_in_place(&mut self, other: &EdgeSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    /// `|self ∪ other|` without materializing the union.
    pub fn union_len(&self, other: &EdgeSet) -> usize {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(w, o)| (w | o).count_ones() as usize)
            .sum()
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        debug_assert_eq!(self.capacity, other.capacity);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        out
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words.iter().zip(&other.words).all(|(w, o)| w & o == 0)
    }

    /// Number of elements of `self` that also lie in `mask`.
    pub fn len_in(&self, mask: &EdgeSet) -> usize {
        debug_assert_eq!(self.capacity, mask.capacity);
        self.words
            .iter()
            .zip(&mask.words)
            .map(|(w, m)| (w & m).count_ones() as usize)
            .sum()
    }

    /// Number of elements of `mask` that are missing from `self`.
    pub fn missing_in(&self, mask: &EdgeSet) -> usize {
        debug_assert_eq!(self.capacity, mask.capacity);
        self.words
            .iter()
            .zip(&mask.words)
            .map(|(w, m)| (!w & m).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.capacity)
            .map(EdgeRef)
            .filter(move |e| self.contains(*e))
    }
}

/// Edge 0 is the least significant bit, so this ranks sets by the numeric
/// value of the bitmask; used to order enumeration results deterministically.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<EdgeRef> for EdgeSet {
    /// Collects into a set whose capacity is just large enough; mostly a
    /// test convenience, production code sizes sets from the multipole.
    fn from_iter<T: IntoIterator<Item = EdgeRef>>(iter: T) -> Self {
        let refs: Vec<EdgeRef> = iter.into_iter().collect();
        let capacity = refs.iter().map(|e| e.0 + 1).max().unwrap_or(0);
        let mut set = EdgeSet::empty(capacity);
        for e in refs {
            set.insert(e);
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = EdgeSet::empty(70);
        assert!(s.is_empty());
        s.insert(EdgeRef(0));
        s.insert(EdgeRef(69));
        assert_eq!(s.len(), 2);
        assert!(s.contains(EdgeRef(69)));
        s.remove(EdgeRef(0));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![EdgeRef(69)]);
    }

    #[test]
    fn full_respects_capacity() {
        let s = EdgeSet::full(70);
        assert_eq!(s.len(), 70);
    }

    #[test]
    fn order_is_numeric() {
        let mut a = EdgeSet::empty(10);
        let mut b = EdgeSet::empty(10);
        a.insert(EdgeRef(0));
        b.insert(EdgeRef(1));
        // {0} has mask 1, {1} has mask 2
        assert!(a < b);
        a.insert(EdgeRef(9));
        assert!(a > b);
    }

    #[test]
    fn counting_against_masks() {
        let mut mask = EdgeSet::empty(8);
        mask.insert(EdgeRef(1));
        mask.insert(EdgeRef(2));
        let mut s = EdgeSet::empty(8);
        s.insert(EdgeRef(2));
        s.insert(EdgeRef(5));
        assert_eq!(s.len_in(&mask), 1);
        assert_eq!(s.missing_in(&mask), 1);
    }
}
