use std::collections::HashMap;

use serde::Serialize;

use crate::error::{limit, AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::limits::MAX_ENDOMORPHISM_CARRIER;
use crate::monoid::FiniteMonoid;
use crate::structure::Additive;
use crate::subset::Subset;

/// An additive map of a monoid fixing 0, as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Endomorphism {
    pub values: Vec<usize>,
}

impl Endomorphism {
    pub fn is_valid<A: Additive>(&self, m: &A) -> bool {
        let n = m.size();
        let f = &self.values;
        f.len() == n && f[0] == 0 && (0..n).all(|x| (0..n).all(|y| f[m.plus(x, y)] == m.plus(f[x], f[y])))
    }
}

/// `End(M)` together with the map each element stands for.
#[derive(Clone, Debug)]
pub struct EndomorphismHemiring {
    pub hemiring: FiniteHemiring,
    pub maps: Vec<Endomorphism>,
    index: HashMap<Vec<usize>, usize>,
}

impl EndomorphismHemiring {
    pub fn index_of(&self, values: &[usize]) -> Option<usize> {
        self.index.get(values).copied()
    }

    pub fn identity_index(&self) -> usize {
        let n = self.maps[0].values.len();
        self.index[&(0..n).collect::<Vec<_>>()]
    }
}

/// All additive maps fixing 0, in lexicographic order of value tables.
pub fn additive_endomorphisms<A: Additive>(m: &A) -> Result<Vec<Vec<usize>>> {
    let n = m.size();
    if n > MAX_ENDOMORPHISM_CARRIER {
        return Err(limit("endomorphism carrier", MAX_ENDOMORPHISM_CARRIER as u64));
    }
    let mut out = Vec::new();
    let mut f = vec![0; n];
    fn rec<A: Additive>(m: &A, k: usize, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = m.size();
        if k == n {
            out.push(f.clone());
            return;
        }
        for v in 0..n {
            f[k] = v;
            let ok = (0..=k).all(|x| {
                (0..=k).all(|y| {
                    let s = m.plus(x, y);
                    s > k || (x != k && y != k && s != k) || f[s] == m.plus(f[x], f[y])
                })
            });
            if ok {
                rec(m, k + 1, f, out);
            }
        }
    }
    if n == 1 {
        return Ok(vec![vec![0]]);
    }
    rec(m, 1, &mut f, &mut out);
    Ok(out)
}

/// The hemiring of the given maps under pointwise `+` and composition
/// `(f g)(x) = f(g(x))`. The maps must be closed under both and contain the
/// zero map first.
pub fn hemiring_of_maps<A: Additive>(
    name: String,
    m: &A,
    labels_of_m: &[String],
    maps: Vec<Vec<usize>>,
) -> Result<EndomorphismHemiring> {
    let n = m.size();
    let index: HashMap<Vec<usize>, usize> = maps.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let k = maps.len();
    let mut add = vec![0; k * k];
    let mut mul = vec![0; k * k];
    let missing = || AlgebraError::InvalidInput("map set not closed under + and composition".into());
    for (i, f) in maps.iter().enumerate() {
        for (j, g) in maps.iter().enumerate() {
            let s: Vec<usize> = (0..n).map(|x| m.plus(f[x], g[x])).collect();
            let c: Vec<usize> = (0..n).map(|x| f[g[x]]).collect();
            add[i * k + j] = *index.get(&s).ok_or_else(missing)?;
            mul[i * k + j] = *index.get(&c).ok_or_else(missing)?;
        }
    }
    if maps.first().is_none_or(|z| z.iter().any(|&v| v != 0)) {
        return Err(AlgebraError::InvalidInput("zero map must come first".into()));
    }
    let labels = maps
        .iter()
        .map(|f| format!("[{}]", f.iter().map(|&v| labels_of_m[v].as_str()).collect::<Vec<_>>().join(",")))
        .collect();
    Ok(EndomorphismHemiring {
        hemiring: FiniteHemiring::assemble(name, labels, add, mul),
        maps: maps.into_iter().map(|values| Endomorphism { values }).collect(),
        index,
    })
}

/// `End(M)`: additive maps fixing 0 under pointwise `+` and composition.
pub fn endomorphism_hemiring(m: &FiniteMonoid) -> Result<EndomorphismHemiring> {
    let maps = additive_endomorphisms(m)?;
    hemiring_of_maps(format!("End({})", m.name()), m, m.labels(), maps)
}

/// `x -> 0` if `x <= a`, else `b`.
pub fn e_endomorphism(m: &FiniteMonoid, a: usize, b: usize) -> Result<Endomorphism> {
    if !m.is_semilattice() {
        return Err(AlgebraError::NotASemilattice);
    }
    Ok(e_map(m, a, b))
}

fn e_map<A: Additive>(m: &A, a: usize, b: usize) -> Endomorphism {
    Endomorphism {
        values: (0..m.size()).map(|x| if m.leq(x, a) { 0 } else { b }).collect(),
    }
}

/// `F_M`: the additive submonoid of maps generated by every `e_{a,b}`.
/// Sorted.
pub fn f_m_maps<A: Additive>(m: &A) -> Result<Vec<Vec<usize>>> {
    if !m.is_idempotent() {
        return Err(AlgebraError::NotASemilattice);
    }
    let n = m.size();
    let mut gens: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            gens.push(e_map(m, a, b).values);
        }
    }
    gens.sort();
    gens.dedup();
    let mut set: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    set.insert(vec![0; n]);
    let mut work: Vec<Vec<usize>> = vec![vec![0; n]];
    while let Some(f) = work.pop() {
        for g in &gens {
            let s: Vec<usize> = (0..n).map(|x| m.plus(f[x], g[x])).collect();
            if set.insert(s.clone()) {
                work.push(s);
            }
        }
    }
    Ok(set.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    /// `F_M` as a subset of the `End(M)` carrier.
    pub f_m: Subset,
    pub dense: bool,
}

/// Density of a sub-hemiring `S` of `End(M)` given as a subset of its
/// carrier: `S` is dense iff it contains `F_M`.
pub fn density_check(end: &EndomorphismHemiring, s: &Subset, m: &FiniteMonoid) -> Result<DensityReport> {
    let f = f_m_maps(m)?;
    let idx: Vec<usize> = f
        .iter()
        .map(|g| end.index_of(g).ok_or_else(|| AlgebraError::InvalidInput("F_M escapes End(M)".into())))
        .collect::<Result<_>>()?;
    let f_m = Subset::from_indices(end.hemiring.len(), idx);
    let dense = f_m.is_subset(s);
    Ok(DensityReport { f_m, dense })
}

/// Density for an arbitrary set of maps on a semilattice: `F_M` and whether
/// every map of `F_M` lies in `maps`.
pub fn density_check_maps<A: Additive>(maps: &[Vec<usize>], m: &A) -> Result<(Vec<Vec<usize>>, bool)> {
    let f = f_m_maps(m)?;
    let set: std::collections::HashSet<&Vec<usize>> = maps.iter().collect();
    let dense = f.iter().all(|g| set.contains(g));
    Ok((f, dense))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn endomorphism_counts() {
        assert_eq!(endomorphism_hemiring(&catalog::chain2_monoid()).unwrap().hemiring.len(), 2);
        assert_eq!(endomorphism_hemiring(&catalog::pentagon()).unwrap().hemiring.len(), 43);
        let z3 = FiniteMonoid::of_hemiring(&catalog::integers_mod(3));
        assert_eq!(additive_endomorphisms(&z3).unwrap().len(), 3);
    }

    #[test]
    fn identity_and_zero_maps() {
        let e = endomorphism_hemiring(&catalog::pentagon()).unwrap();
        let one = e.identity_index();
        assert_eq!(e.hemiring.identity(), Some(one));
        assert!(e.maps[0].values.iter().all(|&v| v == 0));
    }

    #[test]
    fn full_family_is_dense() {
        let n5 = catalog::pentagon();
        let e = endomorphism_hemiring(&n5).unwrap();
        let rep = density_check(&e, &Subset::full(e.hemiring.len()), &n5).unwrap();
        assert!(rep.dense);
        let zero_only = density_check(&e, &Subset::zero(e.hemiring.len()), &n5).unwrap();
        assert!(!zero_only.dense);
    }
}
