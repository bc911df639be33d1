use std::fmt;

use serde::Serialize;

/// A subset of a finite carrier `{0, .., len-1}`, stored as a bit vector.
///
/// Two subsets over carriers of the same size compare and hash by content, so
/// they can be deduplicated in ordinary collections.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subset {
    len: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(len: usize) -> Self {
        Subset {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Subset::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn singleton(len: usize, x: usize) -> Self {
        let mut s = Subset::empty(len);
        s.insert(x);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, items: I) -> Self {
        let mut s = Subset::empty(len);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Size of the ambient carrier, not the number of members.
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.len && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Returns `true` when `x` was not yet present.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.len, "element {x} outside carrier of size {}", self.len);
        let w = &mut self.words[x / 64];
        let bit = 1u64 << (x % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.len {
            self.words[x / 64] &= !(1u64 << (x % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// The subset `{0}`: the zero ideal of a structure whose zero sits at index 0.
    pub fn zero(len: usize) -> Self {
        Subset::singleton(len, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.count() == 1 && self.contains(0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = Subset::empty(130);
        assert!(s.insert(0));
        assert!(!s.insert(0));
        s.insert(129);
        s.insert(64);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.count(), 3);
        let t = Subset::from_indices(130, [0, 5]);
        assert_eq!(s.intersection(&t), Subset::zero(130));
        assert_eq!(s.union(&t).count(), 4);
        assert!(Subset::zero(130).is_subset(&s));
        assert!(!t.is_subset(&s));
        assert!(Subset::full(70).is_full());
    }
}
