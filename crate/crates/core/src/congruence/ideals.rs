use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::partition::{Partition, UnionFind};
use crate::error::{limit, AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::limits::Limits;
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sidedness {
    Left,
    Right,
    TwoSided,
}

impl Sidedness {
    fn left(self) -> bool {
        matches!(self, Sidedness::Left | Sidedness::TwoSided)
    }

    fn right(self) -> bool {
        matches!(self, Sidedness::Right | Sidedness::TwoSided)
    }
}

impl fmt::Display for Sidedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sidedness::Left => "left",
            Sidedness::Right => "right",
            Sidedness::TwoSided => "two-sided",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubsetIdeal {
    pub subset: Subset,
    pub sidedness: Sidedness,
    pub subtractive: bool,
}

impl SubsetIdeal {
    /// Wraps `subset` after checking it is an ideal of the given side.
    pub fn new(r: &FiniteHemiring, subset: Subset, sidedness: Sidedness) -> Result<Self> {
        if !is_ideal(r, &subset, sidedness) {
            return Err(AlgebraError::NotAnIdeal);
        }
        let subtractive = is_subtractive(r, &subset);
        Ok(SubsetIdeal {
            subset,
            sidedness,
            subtractive,
        })
    }

    pub fn zero(r: &FiniteHemiring, sidedness: Sidedness) -> Self {
        SubsetIdeal {
            subset: Subset::zero(r.len()),
            sidedness,
            subtractive: true,
        }
    }

    pub fn whole(r: &FiniteHemiring, sidedness: Sidedness) -> Self {
        SubsetIdeal {
            subset: Subset::full(r.len()),
            sidedness,
            subtractive: true,
        }
    }

    pub fn len(&self) -> usize {
        self.subset.count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn closure_from(r: &FiniteHemiring, mut set: Subset, mut work: Vec<usize>, side: Sidedness) -> Subset {
    let n = r.len();
    if set.insert(0) {
        work.push(0);
    }
    let mut members: Vec<usize> = set.iter().collect();
    while let Some(x) = work.pop() {
        let mut fresh = Vec::new();
        for &y in &members {
            fresh.push(r.add(x, y));
        }
        for c in 0..n {
            if side.left() {
                fresh.push(r.mul(c, x));
            }
            if side.right() {
                fresh.push(r.mul(x, c));
            }
        }
        for z in fresh {
            if set.insert(z) {
                members.push(z);
                work.push(z);
            }
        }
    }
    set
}

/// Smallest ideal of the given side containing `seed`.
pub fn ideal_closure(r: &FiniteHemiring, seed: &Subset, side: Sidedness) -> SubsetIdeal {
    let subset = closure_from(r, seed.clone(), seed.iter().collect(), side);
    let subtractive = is_subtractive(r, &subset);
    SubsetIdeal {
        subset,
        sidedness: side,
        subtractive,
    }
}

/// Ideal generated by an ideal `base` of the same side and extra elements.
fn grow(r: &FiniteHemiring, base: &Subset, extra: &Subset, side: Sidedness) -> Subset {
    let mut set = base.clone();
    let mut work = Vec::new();
    for x in extra.iter() {
        if set.insert(x) {
            work.push(x);
        }
    }
    // Sums of new elements with old ones are produced when new elements are
    // processed, since `members` includes all of `base`.
    closure_from(r, set, work, side)
}

pub fn is_ideal(r: &FiniteHemiring, s: &Subset, side: Sidedness) -> bool {
    let n = r.len();
    if s.universe() != n || !s.contains(0) {
        return false;
    }
    let members: Vec<usize> = s.iter().collect();
    members.iter().all(|&x| {
        members.iter().all(|&y| s.contains(r.add(x, y)))
            && (0..n).all(|c| (!side.left() || s.contains(r.mul(c, x))) && (!side.right() || s.contains(r.mul(x, c))))
    })
}

/// `x + a ∈ I` and `a ∈ I` imply `x ∈ I`.
pub fn is_subtractive(r: &FiniteHemiring, s: &Subset) -> bool {
    let n = r.len();
    s.iter().all(|a| (0..n).all(|x| !s.contains(r.add(x, a)) || s.contains(x)))
}

/// `{r | r + x ∈ I for some x ∈ I}`.
pub fn subtractive_closure_of(r: &FiniteHemiring, s: &Subset) -> Subset {
    let n = r.len();
    Subset::from_indices(n, (0..n).filter(|&y| s.iter().any(|x| s.contains(r.add(y, x)))))
}

pub fn subtractive_closure(r: &FiniteHemiring, ideal: &SubsetIdeal) -> Result<SubsetIdeal> {
    if !is_ideal(r, &ideal.subset, ideal.sidedness) {
        return Err(AlgebraError::NotAnIdeal);
    }
    Ok(SubsetIdeal {
        subset: subtractive_closure_of(r, &ideal.subset),
        sidedness: ideal.sidedness,
        subtractive: true,
    })
}

/// The Bourne congruence of `I`: generated by `r ~ r + x` for `x ∈ I`, which
/// is already transitive-closed as `r + x = r' + x'` is a two-step path.
pub fn bourne_partition(r: &FiniteHemiring, ideal: &Subset) -> Partition {
    let n = r.len();
    let mut uf = UnionFind::new(n);
    for x in ideal.iter() {
        for y in 0..n {
            uf.union(y, r.add(y, x));
        }
    }
    uf.into_partition()
}

fn lex_key(s: &Subset) -> Vec<usize> {
    s.iter().collect()
}

pub fn sort_subsets(v: &mut [Subset]) {
    v.sort_by_cached_key(lex_key);
}

/// All ideals of the given side: sums of principal ideals, closed under
/// further sums with principal ideals. Sorted lexicographically by members.
pub fn enumerate_ideals(r: &FiniteHemiring, side: Sidedness, subtractive_only: bool) -> Result<Vec<SubsetIdeal>> {
    let cap = Limits::current().max_ideals;
    let n = r.len();
    let principals: Vec<Subset> = {
        let set: HashSet<Subset> = (0..n)
            .into_par_iter()
            .map(|x| ideal_closure(r, &Subset::singleton(n, x), side).subset)
            .collect();
        let mut v: Vec<Subset> = set.into_iter().collect();
        sort_subsets(&mut v);
        v
    };
    let mut seen: HashSet<Subset> = principals.iter().cloned().collect();
    let mut frontier: Vec<Subset> = principals.clone();
    while !frontier.is_empty() {
        if seen.len() as u64 > cap {
            return Err(limit("ideals", cap));
        }
        let next: Vec<Subset> = frontier
            .par_iter()
            .flat_map_iter(|i| {
                principals
                    .iter()
                    .filter(move |p| !p.is_subset(i) && !i.is_subset(p))
                    .map(move |p| grow(r, i, p, side))
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier.clear();
        for s in next {
            if !seen.contains(&s) {
                seen.insert(s.clone());
                frontier.push(s);
            }
        }
        sort_subsets(&mut frontier);
    }
    if seen.len() as u64 > cap {
        return Err(limit("ideals", cap));
    }
    let mut all: Vec<Subset> = seen.into_iter().collect();
    sort_subsets(&mut all);
    Ok(all
        .into_iter()
        .map(|subset| {
            let subtractive = is_subtractive(r, &subset);
            SubsetIdeal {
                subset,
                sidedness: side,
                subtractive,
            }
        })
        .filter(|i| !subtractive_only || i.subtractive)
        .collect())
}

/// Exactly two two-sided ideals, `{0}` and `R`, with `R != {0}`.
pub fn is_ideal_simple(r: &FiniteHemiring) -> bool {
    let n = r.len();
    n >= 2 && (1..n).all(|x| ideal_closure(r, &Subset::singleton(n, x), Sidedness::TwoSided).subset.is_full())
}

/// `{ a b | a ∈ A, b ∈ B }` closed to a two-sided ideal.
pub fn ideal_product(r: &FiniteHemiring, a: &Subset, b: &Subset) -> Subset {
    let n = r.len();
    let mut seed = Subset::empty(n);
    for x in a.iter() {
        for y in b.iter() {
            seed.insert(r.mul(x, y));
        }
    }
    ideal_closure(r, &seed, Sidedness::TwoSided).subset
}

/// `I^k`: the ideal generated by all k-fold products of elements of `I`.
pub fn ideal_power(r: &FiniteHemiring, ideal: &SubsetIdeal, k: usize) -> Result<SubsetIdeal> {
    if k == 0 {
        return Err(AlgebraError::InvalidInput("ideal power exponent must be positive".into()));
    }
    if !is_ideal(r, &ideal.subset, Sidedness::TwoSided) {
        return Err(AlgebraError::NotAnIdeal);
    }
    let mut p = ideal.subset.clone();
    for _ in 1..k {
        let next = ideal_product(r, &p, &ideal.subset);
        if next == p {
            break;
        }
        p = next;
    }
    let subtractive = is_subtractive(r, &p);
    Ok(SubsetIdeal {
        subset: p,
        sidedness: Sidedness::TwoSided,
        subtractive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn ideals_of_z4() {
        let z4 = catalog::integers_mod(4);
        let ideals = enumerate_ideals(&z4, Sidedness::TwoSided, false).unwrap();
        let sets: Vec<Vec<String>> = ideals.iter().map(|i| z4.subset_labels(&i.subset)).collect();
        assert_eq!(sets, [vec!["0"], vec!["0", "1", "2", "3"], vec!["0", "2"]]);
        assert!(ideals.iter().all(|i| i.subtractive));
        let two = SubsetIdeal::new(&z4, ideals[2].subset.clone(), Sidedness::TwoSided).unwrap();
        assert!(ideal_power(&z4, &two, 2).unwrap().subset.is_zero());
    }

    #[test]
    fn chain_ideals_are_down_sets() {
        let c = catalog::chain4();
        let ideals = enumerate_ideals(&c, Sidedness::TwoSided, false).unwrap();
        assert_eq!(ideals.len(), 4);
        assert!(ideals.iter().all(|i| i.subtractive));
    }

    #[test]
    fn closure_and_errors() {
        let z4 = catalog::integers_mod(4);
        let s = Subset::from_indices(4, [2]);
        assert_eq!(ideal_closure(&z4, &s, Sidedness::Left).subset, Subset::from_indices(4, [0, 2]));
        assert!(ideal_closure(&z4, &Subset::from_indices(4, [1]), Sidedness::Right).subset.is_full());
        assert_eq!(SubsetIdeal::new(&z4, Subset::from_indices(4, [0, 1]), Sidedness::TwoSided), Err(AlgebraError::NotAnIdeal));
        assert!(is_ideal_simple(&catalog::boolean()));
        assert!(!is_ideal_simple(&z4));
    }

    #[test]
    fn non_subtractive_ideal() {
        // {0, 2} in the truncated naturals {0, 1, 2} with 1 + 1 = 2 + x = 2
        let t = crate::hemiring::FiniteHemiring::from_fn(
            "N3",
            ["0", "1", "2"].map(String::from).to_vec(),
            |a, b| (a + b).min(2),
            |a, b| (a * b).min(2),
        )
        .unwrap();
        let s = Subset::from_indices(3, [0, 2]);
        assert!(!is_subtractive(&t, &s));
        assert!(subtractive_closure_of(&t, &s).is_full());
    }
}
