use std::sync::Arc;

use rayon::prelude::*;

use super::{are_isomorphic_semimodules, is_irreducible, is_simple, FiniteSemimodule};
use crate::congruence::{enumerate_congruences, Partition};
use crate::constructions::{differences, star_quotient};
use crate::error::{AlgebraError, Result};
use crate::hemiring::FiniteHemiring;

/// Quotients of the regular semimodule `_R R` by each of its congruences.
pub fn cyclic_semimodules(r: &Arc<FiniteHemiring>) -> Result<Vec<(FiniteSemimodule, Partition)>> {
    let reg = FiniteSemimodule::regular(r.clone());
    let congs = enumerate_congruences(&reg)?;
    Ok(congs
        .into_par_iter()
        .map(|p| {
            let (q, _) = reg.quotient_unchecked(&p);
            (q, p)
        })
        .collect())
}

fn dedup_iso(mods: Vec<FiniteSemimodule>) -> Vec<FiniteSemimodule> {
    let mut out: Vec<FiniteSemimodule> = Vec::new();
    for m in mods {
        if !out.iter().any(|o| are_isomorphic_semimodules(o, &m)) {
            out.push(m);
        }
    }
    out
}

/// Every simple left `R`-semimodule up to isomorphism. A simple module is
/// generated by any element `m` with `Rm != 0`, so it is a quotient of `_R R`.
pub fn enumerate_simple_semimodules(r: &Arc<FiniteHemiring>) -> Result<Vec<FiniteSemimodule>> {
    let found: Vec<FiniteSemimodule> = cyclic_semimodules(r)?
        .into_par_iter()
        .filter(|(m, _)| is_simple(m))
        .map(|(m, _)| m)
        .collect();
    Ok(dedup_iso(found)
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.with_name(format!("S{i}")))
        .collect())
}

/// Restrict scalars along `phi: R -> S`.
pub fn pull_back(m: &FiniteSemimodule, r: &Arc<FiniteHemiring>, phi: &[usize]) -> FiniteSemimodule {
    let n = m.len();
    let add = (0..n * n).map(|k| m.add(k / n, k % n)).collect();
    let action = (0..r.len() * n).map(|k| m.act(phi[k / n], k % n)).collect();
    FiniteSemimodule::assemble(r.clone(), m.name().to_string(), m.labels().to_vec(), add, action)
}

/// Every irreducible left `R`-semimodule up to isomorphism. An irreducible
/// module is a group, so `R` acts through `R -> R* -> D(R*)`, and the
/// candidates are the simple `D(R*)`-modules.
pub fn enumerate_irreducible_semimodules(r: &Arc<FiniteHemiring>) -> Result<Vec<FiniteSemimodule>> {
    let (rstar, proj) = star_quotient(r);
    let d = differences(&rstar);
    let phi: Vec<usize> = proj.iter().map(|&c| d.xi[c]).collect();
    let ring = Arc::new(d.ring);
    let found: Vec<FiniteSemimodule> = enumerate_simple_semimodules(&ring)?
        .iter()
        .map(|m| pull_back(m, r, &phi))
        .filter(is_irreducible)
        .collect();
    Ok(dedup_iso(found)
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.with_name(format!("M{i}")))
        .collect())
}

/// Commutative monoid tables on `{0..n}` with identity 0.
fn monoid_tables(n: usize) -> Vec<Vec<usize>> {
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut table = vec![0; n * n];
    for a in 0..n {
        table[a] = a;
        table[a * n] = a;
    }
    fn rec(n: usize, cells: &[(usize, usize)], i: usize, table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cells.len() {
            let assoc = (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]]))
            });
            if assoc {
                out.push(table.clone());
            }
            return;
        }
        let (a, b) = cells[i];
        for v in 0..n {
            table[a * n + b] = v;
            table[b * n + a] = v;
            rec(n, cells, i + 1, table, out);
        }
    }
    rec(n, &cells, 0, &mut table, &mut out);
    out
}

/// Every semimodule structure over `R` on carriers of size `1..=max_carrier`,
/// by exhaustive search over addition and action tables. Not deduplicated.
pub fn brute_force_semimodules(r: &Arc<FiniteHemiring>, max_carrier: usize) -> Result<Vec<FiniteSemimodule>> {
    let k = r.len();
    let budget = (1..=max_carrier).map(|n| (n as f64).powi(((k - 1) * (n - 1)) as i32)).sum::<f64>();
    if budget > 1e7 {
        return Err(AlgebraError::limit("brute-force semimodule actions", 10_000_000));
    }
    let mut out = Vec::new();
    for n in 1..=max_carrier {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        for add in monoid_tables(n) {
            let cells: Vec<(usize, usize)> = (1..k).flat_map(|s| (1..n).map(move |m| (s, m))).collect();
            let mut action = vec![0; k * n];
            let mut found = Vec::new();
            fn rec(
                n: usize,
                cells: &[(usize, usize)],
                i: usize,
                action: &mut Vec<usize>,
                found: &mut Vec<Vec<usize>>,
            ) {
                if i == cells.len() {
                    found.push(action.clone());
                    return;
                }
                let (s, m) = cells[i];
                for v in 0..n {
                    action[s * n + m] = v;
                    rec(n, cells, i + 1, action, found);
                }
            }
            rec(n, &cells, 0, &mut action, &mut found);
            for act in found {
                let addf = |a: usize, b: usize| add[a * n + b];
                let actf = |s: usize, m: usize| act[s * n + m];
                if let Ok(m) = FiniteSemimodule::from_fn(r.clone(), format!("B{}", out.len()), labels.clone(), addf, actf) {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ring(name: &str) -> Arc<FiniteHemiring> {
        Arc::new(catalog::hemiring(name).unwrap())
    }

    #[test]
    fn monoid_table_counts() {
        // Commutative monoids of order 1, 2, 3 as labelled tables with fixed identity.
        assert_eq!(monoid_tables(1).len(), 1);
        assert_eq!(monoid_tables(2).len(), 2);
    }

    #[test]
    fn simple_modules_of_small_rings() {
        let b = enumerate_simple_semimodules(&ring("B")).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].len(), 2);
        let z4 = enumerate_simple_semimodules(&ring("Z4")).unwrap();
        assert_eq!(z4.len(), 1);
        assert_eq!(z4[0].len(), 2);
        assert!(enumerate_simple_semimodules(&ring("ZERO")).unwrap().is_empty());
    }

    #[test]
    fn irreducible_modules_of_small_rings() {
        assert!(enumerate_irreducible_semimodules(&ring("B")).unwrap().is_empty());
        assert_eq!(enumerate_irreducible_semimodules(&ring("Z2")).unwrap().len(), 1);
        assert!(enumerate_irreducible_semimodules(&ring("CHAIN4")).unwrap().is_empty());
    }

    #[test]
    fn simple_modules_over_semirings_are_unitary() {
        for name in ["B", "Z2", "Z3", "Z4", "CHAIN4", "BXZ2", "M2B"] {
            let r = ring(name);
            for m in enumerate_simple_semimodules(&r).unwrap() {
                assert_eq!(m.is_unitary(), r.identity().map(|_| true), "{name}");
            }
        }
    }

    fn simple_classes_by_brute_force(r: &Arc<FiniteHemiring>) -> Vec<FiniteSemimodule> {
        dedup_iso(brute_force_semimodules(r, 3).unwrap().into_iter().filter(is_simple).collect())
    }

    #[test]
    fn simple_enumeration_is_complete_for_order_two() {
        for name in ["B", "Z2"] {
            let r = ring(name);
            let fast = enumerate_simple_semimodules(&r).unwrap();
            let slow = simple_classes_by_brute_force(&r);
            assert_eq!(fast.len(), slow.len(), "{name}");
            for m in &slow {
                assert!(fast.iter().any(|f| are_isomorphic_semimodules(f, m)), "{name}");
            }
        }
    }

    #[test]
    fn irreducible_enumeration_is_complete_for_small_rings() {
        for name in ["B", "Z2", "Z3", "T3"] {
            let r = ring(name);
            let fast = enumerate_irreducible_semimodules(&r).unwrap();
            let slow = dedup_iso(brute_force_semimodules(&r, 3).unwrap().into_iter().filter(is_irreducible).collect());
            assert_eq!(fast.len(), slow.len(), "{name}");
        }
    }
}
