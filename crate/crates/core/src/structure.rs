//! Traits shared by every finite structure with a commutative-monoid reduct.

use crate::subset::Subset;

/// A finite carrier `{0, .., size-1}` with a commutative monoid addition whose
/// identity is index 0.
pub trait Additive {
    fn size(&self) -> usize;
    fn plus(&self, a: usize, b: usize) -> usize;

    fn sum<I: IntoIterator<Item = usize>>(&self, items: I) -> usize
    where
        Self: Sized,
    {
        items.into_iter().fold(0, |acc, x| self.plus(acc, x))
    }

    /// Sum of every element of the carrier. For any `x`, `m + x = m' + x`
    /// implies `m + total = m' + total`, so this single element witnesses
    /// the star relation.
    fn total(&self) -> usize
    where
        Self: Sized,
    {
        self.sum(0..self.size())
    }

    /// `{r | r + x = x for some x}`.
    fn zeroid(&self) -> Subset
    where
        Self: Sized,
    {
        let n = self.size();
        Subset::from_indices(n, (0..n).filter(|&r| (0..n).any(|x| self.plus(r, x) == x)))
    }

    fn is_cancellative(&self) -> bool {
        let n = self.size();
        // a + c = b + c with a != b
        (0..n).all(|c| {
            let mut seen = vec![false; n];
            (0..n).all(|a| !std::mem::replace(&mut seen[self.plus(a, c)], true))
        })
    }

    fn is_idempotent(&self) -> bool {
        (0..self.size()).all(|a| self.plus(a, a) == a)
    }

    /// Every element has an additive inverse.
    fn is_group(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).any(|b| self.plus(a, b) == 0))
    }

    fn negation(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.plus(a, b) == 0)
    }

    /// `a <= b` in the natural preorder `a + b = b` (a partial order when the
    /// addition is idempotent).
    fn leq(&self, a: usize, b: usize) -> bool {
        self.plus(a, b) == b
    }
}

/// Additive structure plus a family of unary translations that every
/// congruence must respect (left/right multiplications for hemirings, scalar
/// actions for semimodules).
pub trait Signature: Additive {
    fn translation_count(&self) -> usize;
    fn translate(&self, k: usize, x: usize) -> usize;
}
