use std::fmt;

use serde::Serialize;

use crate::subset::Subset;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn from_partition(p: &Partition) -> Self {
        let n = p.len();
        let mut size = vec![0; n];
        for &b in &p.block {
            size[b] += 1;
        }
        UnionFind {
            parent: p.block.clone(),
            size,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let mut least = vec![usize::MAX; n];
        let mut block = vec![0; n];
        for x in 0..n {
            let r = self.find(x);
            if least[r] == usize::MAX {
                least[r] = x;
            }
            block[x] = least[r];
        }
        Partition { block }
    }
}

/// An equivalence relation on `{0, .., n-1}` stored as the least member of
/// each element's block, so equal relations have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    block: Vec<usize>,
}

impl Partition {
    pub fn discrete(n: usize) -> Self {
        Partition { block: (0..n).collect() }
    }

    pub fn full(n: usize) -> Self {
        Partition { block: vec![0; n] }
    }

    /// Partition whose blocks are the fibres of `key`.
    pub fn from_key<K: std::hash::Hash + Eq>(n: usize, key: impl Fn(usize) -> K) -> Self {
        let mut first = std::collections::HashMap::new();
        let block = (0..n).map(|x| *first.entry(key(x)).or_insert(x)).collect();
        Partition { block }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Self {
        let mut uf = UnionFind::new(n);
        for b in blocks {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.into_partition()
    }

    pub fn len(&self) -> usize {
        self.block.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block.is_empty()
    }

    /// Least member of the block containing `x`.
    #[inline]
    pub fn rep(&self, x: usize) -> usize {
        self.block[x]
    }

    #[inline]
    pub fn same(&self, a: usize, b: usize) -> bool {
        self.block[a] == self.block[b]
    }

    pub fn reps(&self) -> impl Iterator<Item = usize> + '_ {
        self.block.iter().enumerate().filter(|(i, &b)| *i == b).map(|(i, _)| i)
    }

    pub fn block_count(&self) -> usize {
        self.reps().count()
    }

    pub fn is_discrete(&self) -> bool {
        self.block.iter().enumerate().all(|(i, &b)| i == b)
    }

    pub fn is_full(&self) -> bool {
        self.block.iter().all(|&b| b == 0)
    }

    /// Blocks in order of least member, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut pos = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.block[x];
            if pos[r] == usize::MAX {
                pos[r] = out.len();
                out.push(Vec::new());
            }
            out[pos[r]].push(x);
        }
        out
    }

    /// Index of each element's block in the order of `blocks()`.
    pub fn block_indices(&self) -> Vec<usize> {
        let n = self.len();
        let mut pos = vec![usize::MAX; n];
        let mut next = 0;
        (0..n)
            .map(|x| {
                let r = self.block[x];
                if pos[r] == usize::MAX {
                    pos[r] = next;
                    next += 1;
                }
                pos[r]
            })
            .collect()
    }

    /// The class of 0.
    pub fn kernel(&self) -> Subset {
        Subset::from_indices(self.len(), (0..self.len()).filter(|&x| self.block[x] == self.block[0]))
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        (0..self.len()).all(|x| other.same(x, self.block[x]))
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        Partition::from_key(self.len(), |x| (self.block[x], other.block[x]))
    }

    /// Pairs `(x, rep(x))` for non-representatives; they generate the relation.
    pub fn generating_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.block.iter().enumerate().filter(|(i, &b)| *i != b).map(|(i, &b)| (i, b))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.blocks()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_blocks() {
        let p = Partition::from_blocks(5, &[vec![4, 1], vec![3, 2]]);
        assert_eq!(p.blocks(), vec![vec![0], vec![1, 4], vec![2, 3]]);
        assert_eq!(p.rep(4), 1);
        assert_eq!(p.block_indices(), vec![0, 1, 2, 2, 1]);
        assert!(Partition::discrete(5).refines(&p));
        assert!(p.refines(&Partition::full(5)));
        assert_eq!(p.meet(&Partition::discrete(5)), Partition::discrete(5));
    }
}
