//! Dense bitset over vertex ids 0..n-1.
//!
//! Every set-valued object in this crate (neighborhoods, strips, particles,
//! solver state) is a `VertexSet`. The solvers take closed neighborhoods,
//! set differences and component splits in tight loops, so all operations
//! are word-parallel.

use std::fmt;

/// Subset of `0..n` backed by 64-bit words. Two sets may be combined only
/// when they share the same universe size `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            *w = if n - lo >= 64 {
                !0
            } else {
                (1u64 << (n - lo)) - 1
            };
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = Self::empty(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Universe size (not the cardinality).
    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {} out of universe 0..{}", v, self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {} out of universe 0..{}", v, self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    fn check_same(&self, other: &Self) {
        debug_assert_eq!(self.n, other.n, "universe mismatch");
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        VertexSet { n: self.n, words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        VertexSet { n: self.n, words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_same(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        VertexSet { n: self.n, words }
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> SetIter<'_> {
        SetIter {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SetIter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl<'a> Iterator for SetIter<'a> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = SetIter<'a>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = VertexSet::empty(130);
        a.insert(0);
        a.insert(63);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.len(), 4);
        assert_eq!(a.to_vec(), vec![0, 63, 64, 129]);
        assert!(a.contains(64));
        a.remove(64);
        assert!(!a.contains(64));
        assert_eq!(a.first(), Some(0));
    }

    #[test]
    fn algebra() {
        let a = VertexSet::from_iter(10, [1, 3, 5, 7]);
        let b = VertexSet::from_iter(10, [3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 5]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 5, 7]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 7]);
        assert!(VertexSet::from_iter(10, [3, 5]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert!(a.intersects(&b));
        assert!(a.is_disjoint(&VertexSet::from_iter(10, [0, 2])));
    }

    #[test]
    fn full_and_complement() {
        let f = VertexSet::full(70);
        assert_eq!(f.len(), 70);
        let a = VertexSet::from_iter(70, [0, 69]);
        let c = a.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(0) && !c.contains(69) && c.contains(35));
    }

    #[test]
    fn empty_universe() {
        let e = VertexSet::empty(0);
        assert!(e.is_empty());
        assert_eq!(e.iter().count(), 0);
        assert_eq!(VertexSet::full(0).len(), 0);
    }
}
