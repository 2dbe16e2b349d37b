use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// A set of vertex ids packed into one machine word. Vertex ids range over 0..64.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const MAX_VERTICES: usize = 64;

    pub fn empty() -> Self {
        VertexSet(0)
    }

    /// The set {0, 1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_VERTICES);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < Self::MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut bits = 0u64;
        for v in vs {
            assert!(v < Self::MAX_VERTICES);
            bits |= 1 << v;
        }
        VertexSet(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < Self::MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        assert!(v < Self::MAX_VERTICES);
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        assert!(v < Self::MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
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

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn vertices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of this set, in descending bit-pattern order, ending with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            cur: self.0,
            done: false,
        }
    }

    /// Shift every vertex id up by `k`.
    pub fn shifted(self, k: usize) -> Self {
        assert!(self.max_vertex().map_or(0, |m| m + k + 1) <= Self::MAX_VERTICES);
        VertexSet(self.0 << k)
    }

    /// Relabel the members of `self` (all inside `within`) by their rank inside `within`.
    pub fn compress_into(self, within: Self) -> Self {
        debug_assert!(self.is_subset_of(within));
        let mut out = 0u64;
        let mut idx = 0;
        let mut m = within.0;
        while m != 0 {
            let v = m.trailing_zeros();
            if self.0 >> v & 1 == 1 {
                out |= 1 << idx;
            }
            idx += 1;
            m &= m - 1;
        }
        VertexSet(out)
    }

    /// Inverse of `compress_into`: spread low bits of `self` onto the members of `within`.
    pub fn decompress_from(self, within: Self) -> Self {
        let mut out = 0u64;
        let mut idx = 0;
        let mut m = within.0;
        while m != 0 {
            let v = m.trailing_zeros();
            if self.0 >> idx & 1 == 1 {
                out |= 1 << v;
            }
            idx += 1;
            m &= m - 1;
        }
        VertexSet(out)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
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

pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = VertexSet(self.cur);
        if self.cur == 0 {
            self.done = true;
        } else {
            self.cur = (self.cur - 1) & self.mask;
        }
        Some(out)
    }
}

/// All k-element subsets of {0, ..., n-1} in ascending bit-pattern order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n <= VertexSet::MAX_VERTICES);
    KSubsets {
        cur: if k == 0 { 0 } else { (1u64 << k) - 1 },
        limit: if n == 64 { u64::MAX } else { 1u64 << n },
        k,
        emitted_empty: false,
    }
}

pub struct KSubsets {
    cur: u64,
    limit: u64,
    k: usize,
    emitted_empty: bool,
}

impl Iterator for KSubsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.k == 0 {
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(VertexSet(0));
        }
        if self.k > 64 || self.cur >= self.limit || (self.limit != u64::MAX && self.cur > self.limit - 1)
        {
            return None;
        }
        let out = VertexSet(self.cur);
        // Gosper's hack: next integer with the same popcount.
        let c = self.cur;
        let lo = c & c.wrapping_neg();
        let lz = c + lo;
        if lo == 0 || lz == 0 {
            self.cur = self.limit; // overflow, stop
        } else {
            self.cur = lz | (((c ^ lz) / lo) >> 2);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = VertexSet::from_vertices([0, 2, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.to_string(), "{0,2,5}");
        assert_eq!(s.min_vertex(), Some(0));
        assert_eq!(s.max_vertex(), Some(5));
        let t = VertexSet::from_vertices([2, 3]);
        assert_eq!((s | t).vertices(), vec![0, 2, 3, 5]);
        assert_eq!((s & t).vertices(), vec![2]);
        assert_eq!((s - t).vertices(), vec![0, 5]);
        assert!(t.is_subset_of(s | t));
    }

    #[test]
    fn subset_iteration() {
        let s = VertexSet::from_vertices([1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&VertexSet::empty()));
        assert!(subs.contains(&s));
    }

    #[test]
    fn k_subset_counts() {
        let c: Vec<_> = k_subsets(6, 3).collect();
        assert_eq!(c.len(), 20);
        assert!(c.iter().all(|s| s.len() == 3));
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(5, 5).count(), 1);
        assert_eq!(k_subsets(4, 5).count(), 0);
    }

    #[test]
    fn compress_roundtrip() {
        let within = VertexSet::from_vertices([1, 4, 5, 7]);
        let s = VertexSet::from_vertices([4, 7]);
        let c = s.compress_into(within);
        assert_eq!(c.vertices(), vec![1, 3]);
        assert_eq!(c.decompress_from(within), s);
    }
}
