use std::collections::HashSet;

use serde::Serialize;

use super::{additive_closure, FiniteSemimodule};
use crate::congruence::congruence_closure;
use crate::structure::Additive;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemimoduleReport {
    /// `(0:M)_R`, a subset of `R`.
    pub annihilator: Subset,
    pub faithful: bool,
    pub cancellative: bool,
    pub simple: bool,
    pub irreducible: bool,
    pub semi_irreducible: bool,
    pub w_finitely_generated: bool,
    /// `Z(M)`, a subset of `M`.
    pub zeroid: Subset,
}

/// `(0:M)_R = {r | rM = 0}`.
pub fn annihilator(m: &FiniteSemimodule) -> Subset {
    let k = m.ring().len();
    Subset::from_indices(k, (0..k).filter(|&r| (0..m.len()).all(|x| m.act(r, x) == 0)))
}

/// Smallest subsemimodule containing `seed`.
pub fn subsemimodule(m: &FiniteSemimodule, seed: &Subset) -> Subset {
    let mut set = seed.clone();
    set.insert(0);
    loop {
        let mut next = additive_closure(m, &set);
        for x in set.iter() {
            for r in 0..m.ring().len() {
                next.insert(m.act(r, x));
            }
        }
        let next = additive_closure(m, &next);
        if next == set {
            return set;
        }
        set = next;
    }
}

fn generated_by(m: &FiniteSemimodule, x: usize) -> Subset {
    subsemimodule(m, &Subset::singleton(m.len(), x))
}

/// `RM != 0`, only trivial subsemimodules and only trivial congruences.
pub fn is_simple(m: &FiniteSemimodule) -> bool {
    if m.has_trivial_action() {
        return false;
    }
    let n = m.len();
    if !(1..n).all(|x| generated_by(m, x).is_full()) {
        return false;
    }
    (0..n).all(|a| (a + 1..n).all(|b| congruence_closure(m, &[(a, b)]).is_full()))
}

/// Nonzero, cancellative, and for all `m1 != m2` and `m` there are `r1, r2`
/// with `m + r1 m1 + r2 m2 = r1 m2 + r2 m1`.
pub fn is_irreducible(m: &FiniteSemimodule) -> bool {
    let n = m.len();
    if n < 2 || !m.is_cancellative() {
        return false;
    }
    let k = m.ring().len();
    for m1 in 0..n {
        for m2 in 0..n {
            if m1 == m2 {
                continue;
            }
            // (r1 m1 + r2 m2, r1 m2 + r2 m1)
            let mut sums = HashSet::new();
            for r1 in 0..k {
                for r2 in 0..k {
                    let lhs = m.add(m.act(r1, m1), m.act(r2, m2));
                    let rhs = m.add(m.act(r1, m2), m.act(r2, m1));
                    sums.insert((lhs, rhs));
                }
            }
            if !(0..n).all(|x| sums.iter().any(|&(a, b)| m.add(x, a) == b)) {
                return false;
            }
        }
    }
    true
}

/// `{y | x + y in N for some x in N}`: for a subsemimodule `N` of a
/// cancellative semimodule this is the least subtractive subsemimodule over `N`.
fn subtractive_hull(m: &FiniteSemimodule, sub: &Subset) -> Subset {
    let n = m.len();
    Subset::from_indices(n, (0..n).filter(|&y| sub.iter().any(|x| sub.contains(m.add(x, y)))))
}

/// Cancellative, `RM != 0`, only trivial subtractive subsemimodules.
pub fn is_semi_irreducible(m: &FiniteSemimodule) -> bool {
    if m.len() < 2 || !m.is_cancellative() || m.has_trivial_action() {
        return false;
    }
    (1..m.len()).all(|x| subtractive_hull(m, &generated_by(m, x)).is_full())
}

/// Pair-closure test: close `{(r m' + s m, r m + s m')} ∪ {(0,0)}` under
/// addition in `M x M` and ask that every `m` has `(A, B)` with `m + A = B`.
pub fn is_w_finitely_generated(m: &FiniteSemimodule) -> bool {
    let n = m.len();
    let k = m.ring().len();
    let mut set: HashSet<(usize, usize)> = HashSet::new();
    set.insert((0, 0));
    for x in 0..n {
        for y in 0..n {
            for r in 0..k {
                for s in 0..k {
                    set.insert((m.add(m.act(r, y), m.act(s, x)), m.add(m.act(r, x), m.act(s, y))));
                }
            }
        }
    }
    let gens: Vec<(usize, usize)> = set.iter().copied().collect();
    let mut work: Vec<(usize, usize)> = gens.clone();
    while let Some((a, b)) = work.pop() {
        for &(c, d) in &gens {
            let p = (m.add(a, c), m.add(b, d));
            if set.insert(p) {
                work.push(p);
            }
        }
    }
    (0..n).all(|x| set.iter().any(|&(a, b)| m.add(x, a) == b))
}

/// Definition-level search restricted to witness lists of at most
/// `max_pairs` pairs. Exponential; only for tiny carriers.
pub fn is_w_finitely_generated_bounded(m: &FiniteSemimodule, max_pairs: usize) -> bool {
    let n = m.len();
    let k = m.ring().len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    // Attainable (A, B) for one fixed pair.
    let single = |(x, y): (usize, usize)| -> HashSet<(usize, usize)> {
        let mut out = HashSet::new();
        for r in 0..k {
            for s in 0..k {
                out.insert((m.add(m.act(r, y), m.act(s, x)), m.add(m.act(r, x), m.act(s, y))));
            }
        }
        out
    };
    let covers = |set: &HashSet<(usize, usize)>| (0..n).all(|x| set.iter().any(|&(a, b)| m.add(x, a) == b));
    fn lists(len: usize, total: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..total {
            cur.push(i);
            lists(len, total, i, cur, out);
            cur.pop();
        }
    }
    for len in 1..=max_pairs {
        let mut all = Vec::new();
        lists(len, pairs.len(), 0, &mut Vec::new(), &mut all);
        for list in all {
            let mut acc: HashSet<(usize, usize)> = HashSet::from([(0, 0)]);
            for &i in &list {
                let one = single(pairs[i]);
                acc = acc
                    .iter()
                    .flat_map(|&(a, b)| one.iter().map(move |&(c, d)| (a, b, c, d)))
                    .map(|(a, b, c, d)| (m.add(a, c), m.add(b, d)))
                    .collect();
            }
            if covers(&acc) {
                return true;
            }
        }
    }
    false
}

pub fn semimodule_report(m: &FiniteSemimodule) -> SemimoduleReport {
    let annihilator = annihilator(m);
    SemimoduleReport {
        faithful: annihilator.is_zero(),
        annihilator,
        cancellative: m.is_cancellative(),
        simple: is_simple(m),
        irreducible: is_irreducible(m),
        semi_irreducible: is_semi_irreducible(m),
        w_finitely_generated: is_w_finitely_generated(m),
        zeroid: m.zeroid(),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog;

    fn regular(name: &str) -> FiniteSemimodule {
        FiniteSemimodule::regular(Arc::new(catalog::hemiring(name).unwrap()))
    }

    #[test]
    fn boolean_regular_is_simple_not_irreducible() {
        let r = semimodule_report(&regular("B"));
        assert!(r.simple);
        assert!(!r.irreducible);
        assert!(r.faithful);
        assert_eq!(r.annihilator.iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn z2_regular_is_simple_and_irreducible() {
        let r = semimodule_report(&regular("Z2"));
        assert!(r.simple && r.irreducible && r.semi_irreducible && r.w_finitely_generated);
    }

    #[test]
    fn zero_module() {
        let z = FiniteSemimodule::zero(Arc::new(catalog::boolean()));
        let r = semimodule_report(&z);
        assert!(!r.simple);
        assert!(r.w_finitely_generated);
    }

    #[test]
    fn trivial_action_is_not_wfg() {
        let z2 = Arc::new(catalog::integers_mod(2));
        let m = FiniteSemimodule::from_fn(z2, "Z2 trivial", vec!["0".into(), "1".into()], |a, b| a ^ b, |_, _| 0)
            .unwrap();
        assert!(m.is_cancellative());
        assert!(!is_w_finitely_generated(&m));
        assert!(!is_w_finitely_generated_bounded(&m, 2));
    }

    #[test]
    fn z4_regular_is_not_irreducible() {
        let m = regular("Z4");
        assert!(!is_irreducible(&m));
        assert!(!is_simple(&m));
        assert!(is_w_finitely_generated(&m));
    }

    #[test]
    fn pair_closure_matches_bounded_search() {
        for name in ["B", "Z2", "Z3", "T3"] {
            let r = Arc::new(catalog::hemiring(name).unwrap());
            for m in super::super::brute_force_semimodules(&r, 3).unwrap() {
                assert_eq!(
                    is_w_finitely_generated(&m),
                    is_w_finitely_generated_bounded(&m, 2),
                    "{name} {:?}",
                    m.to_raw()
                );
            }
        }
    }

    #[test]
    fn irreducible_implies_nonzero_action() {
        for name in ["B", "Z2", "Z3"] {
            let r = Arc::new(catalog::hemiring(name).unwrap());
            for m in super::super::brute_force_semimodules(&r, 3).unwrap() {
                if is_irreducible(&m) {
                    assert!(!m.has_trivial_action());
                    assert!(is_semi_irreducible(&m));
                }
            }
        }
    }
}
