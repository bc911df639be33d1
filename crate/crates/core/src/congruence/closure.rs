use std::collections::HashSet;

use rayon::prelude::*;

use super::partition::{Partition, UnionFind};
use crate::error::{limit, Result};
use crate::limits::Limits;
use crate::structure::Signature;

fn saturate<S: Signature + ?Sized>(s: &S, uf: &mut UnionFind, mut work: Vec<(usize, usize)>) {
    let n = s.size();
    let t = s.translation_count();
    while let Some((a, b)) = work.pop() {
        for c in 0..n {
            let (x, y) = (s.plus(a, c), s.plus(b, c));
            if uf.union(x, y) {
                work.push((x, y));
            }
        }
        for k in 0..t {
            let (x, y) = (s.translate(k, a), s.translate(k, b));
            if uf.union(x, y) {
                work.push((x, y));
            }
        }
    }
}

/// Smallest congruence containing `pairs`.
///
/// Every merge is queued and later pushed through `x + c` and every
/// translation, so the final relation is closed under all of them.
pub fn congruence_closure<S: Signature + ?Sized>(s: &S, pairs: &[(usize, usize)]) -> Partition {
    let mut uf = UnionFind::new(s.size());
    let mut work = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    saturate(s, &mut uf, work);
    uf.into_partition()
}

/// Least congruence containing the congruence `base` and `pairs`.
pub fn extend<S: Signature + ?Sized>(s: &S, base: &Partition, pairs: impl IntoIterator<Item = (usize, usize)>) -> Partition {
    let mut uf = UnionFind::from_partition(base);
    let mut work = Vec::new();
    for (a, b) in pairs {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    saturate(s, &mut uf, work);
    uf.into_partition()
}

/// Join of two congruences in the congruence lattice.
pub fn join<S: Signature + ?Sized>(s: &S, p: &Partition, q: &Partition) -> Partition {
    extend(s, p, q.generating_pairs())
}

pub fn is_compatible<S: Signature + ?Sized>(s: &S, p: &Partition) -> bool {
    let n = s.size();
    if p.len() != n {
        return false;
    }
    let t = s.translation_count();
    (0..n).all(|x| {
        let r = p.rep(x);
        x == r
            || ((0..n).all(|c| p.same(s.plus(x, c), s.plus(r, c)))
                && (0..t).all(|k| p.same(s.translate(k, x), s.translate(k, r))))
    })
}

/// Principal congruences `Cg(a, b)` for `a != b`, deduplicated and sorted.
///
/// When the additive reduct is a group, `Cg(a, b) = Cg(a - b, 0)`, so only
/// pairs with 0 are generated.
pub fn principal_congruences<S: Signature + Sync + ?Sized>(s: &S) -> Vec<Partition> {
    let n = s.size();
    let pairs: Vec<(usize, usize)> = if s.is_group() {
        (1..n).map(|x| (x, 0)).collect()
    } else {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    };
    let found: HashSet<Partition> = pairs.par_iter().map(|&p| congruence_closure(s, &[p])).collect();
    let mut out: Vec<Partition> = found.into_iter().collect();
    out.sort();
    out
}

/// The whole congruence lattice, as the join-closure of the principal
/// congruences together with the diagonal. Sorted.
pub fn enumerate_congruences<S: Signature + Sync + ?Sized>(s: &S) -> Result<Vec<Partition>> {
    let cap = Limits::current().max_congruences;
    let principals = principal_congruences(s);
    let mut seen: HashSet<Partition> = HashSet::new();
    seen.insert(Partition::discrete(s.size()));
    let mut frontier: Vec<Partition> = Vec::new();
    for p in &principals {
        if seen.insert(p.clone()) {
            frontier.push(p.clone());
        }
    }
    while !frontier.is_empty() {
        if seen.len() as u64 > cap {
            return Err(limit("congruences", cap));
        }
        let next: Vec<Partition> = frontier
            .par_iter()
            .flat_map_iter(|c| {
                principals
                    .iter()
                    .filter(move |p| !p.refines(c))
                    .map(move |p| join(s, c, p))
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier.clear();
        for c in next {
            if !seen.contains(&c) {
                seen.insert(c.clone());
                frontier.push(c);
            }
        }
        frontier.sort();
    }
    if seen.len() as u64 > cap {
        return Err(limit("congruences", cap));
    }
    let mut out: Vec<Partition> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// True iff the only congruences are the diagonal and the full relation and
/// these differ.
pub fn is_congruence_simple<S: Signature + Sync + ?Sized>(s: &S) -> bool {
    let n = s.size();
    if n < 2 {
        return false;
    }
    let pairs: Vec<(usize, usize)> = if s.is_group() {
        (1..n).map(|x| (x, 0)).collect()
    } else {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    };
    pairs.par_iter().all(|&p| congruence_closure(s, &[p]).is_full())
}

/// Congruences that are maximal among proper congruences.
pub fn coatoms(all: &[Partition]) -> Vec<Partition> {
    let proper: Vec<&Partition> = all.iter().filter(|p| !p.is_full()).collect();
    proper
        .iter()
        .filter(|p| !proper.iter().any(|q| *q != **p && p.refines(q)))
        .map(|p| (*p).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn lattice_sizes() {
        assert_eq!(enumerate_congruences(&catalog::boolean()).unwrap().len(), 2);
        assert_eq!(enumerate_congruences(&catalog::integers_mod(4)).unwrap().len(), 3);
        assert_eq!(enumerate_congruences(&catalog::integers_mod(6)).unwrap().len(), 4);
    }

    #[test]
    fn simplicity() {
        assert!(is_congruence_simple(&catalog::boolean()));
        assert!(is_congruence_simple(&catalog::integers_mod(3)));
        assert!(!is_congruence_simple(&catalog::integers_mod(4)));
        assert!(!is_congruence_simple(&catalog::zero()));
    }

    #[test]
    fn principal_closure_in_z4() {
        let z4 = catalog::integers_mod(4);
        let c = congruence_closure(&z4, &[(0, 2)]);
        assert_eq!(c.block_count(), 2);
        assert!(c.same(1, 3));
        assert!(congruence_closure(&z4, &[(0, 1)]).is_full());
        assert!(congruence_closure(&z4, &[]).is_discrete());
    }
}
