use std::sync::OnceLock;

use proptest::prelude::*;
use radx_core::congruence::{
    congruence_closure, enumerate_congruences, ideal_closure, is_compatible, is_ideal, is_subtractive, quotient,
};
use radx_core::enumerate::all_hemirings_up_to;
use radx_core::iso::{are_isomorphic, canonical_form};
use radx_core::radicals::{radical, RadicalKind};
use radx_core::{catalog, Axiom, AlgebraError, FiniteHemiring, RawHemiring, Sidedness, Subset};

fn small() -> &'static [FiniteHemiring] {
    static ALL: OnceLock<Vec<FiniteHemiring>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut v = all_hemirings_up_to(3).unwrap();
        v.extend(["Z4", "T3", "CHAIN4", "BXZ2"].map(|n| catalog::hemiring(n).unwrap()));
        v
    })
}

/// A hemiring from the pool together with a zero-fixing permutation.
fn relabeled() -> impl Strategy<Value = (FiniteHemiring, Vec<usize>)> {
    (0..small().len()).prop_flat_map(|i| {
        let r = small()[i].clone();
        let n = r.len();
        Just((1..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |rest| {
                let mut perm = vec![0];
                perm.extend(rest);
                (r.clone(), perm)
            })
    })
}

fn moved(s: &Subset, perm: &[usize]) -> Subset {
    Subset::from_indices(s.universe(), s.iter().map(|x| perm[x]))
}

/// Evaluates the axiom named by a validator witness on the raw tables.
fn witness_violates(raw: &RawHemiring, axiom: Axiom, w: &[usize]) -> bool {
    let a = |x: usize, y: usize| raw.add[x][y];
    let m = |x: usize, y: usize| raw.mul[x][y];
    let z = raw.zero;
    match (axiom, w) {
        (Axiom::AdditiveIdentity, &[x]) => a(z, x) != x || a(x, z) != x,
        (Axiom::AdditiveCommutativity, &[x, y]) => a(x, y) != a(y, x),
        (Axiom::AdditiveAssociativity, &[x, y, u]) => a(a(x, y), u) != a(x, a(y, u)),
        (Axiom::MultiplicativeAssociativity, &[x, y, u]) => m(m(x, y), u) != m(x, m(y, u)),
        (Axiom::LeftDistributivity, &[x, y, u]) => m(x, a(y, u)) != a(m(x, y), m(x, u)),
        (Axiom::RightDistributivity, &[x, y, u]) => m(a(x, y), u) != a(m(x, u), m(y, u)),
        (Axiom::ZeroAbsorption, &[x]) => m(z, x) != z || m(x, z) != z,
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels((r, perm) in relabeled()) {
        let s = r.relabel(&perm);
        prop_assert_eq!(canonical_form(&r).unwrap(), canonical_form(&s).unwrap());
        prop_assert!(are_isomorphic(&r, &s));
    }

    #[test]
    fn radicals_follow_relabeling((r, perm) in relabeled()) {
        let s = r.relabel(&perm);
        for k in RadicalKind::ALL {
            let a = radical(&r, k).unwrap().subset;
            let b = radical(&s, k).unwrap().subset;
            prop_assert_eq!(moved(&a, &perm), b, "{} on {}", k, r.name());
        }
    }

    #[test]
    fn radicals_are_ideals((r, _) in relabeled()) {
        let zeroid = radx_core::zeroid(&r);
        let bm = radical(&r, RadicalKind::BM).unwrap().subset;
        let cs = radical(&r, RadicalKind::BMCs).unwrap().subset;
        for k in RadicalKind::ALL {
            let s = radical(&r, k).unwrap().subset;
            prop_assert!(is_ideal(&r, &s, Sidedness::TwoSided), "{} on {}", k, r.name());
        }
        let j = radical(&r, RadicalKind::J).unwrap().subset;
        let js = radical(&r, RadicalKind::Js).unwrap().subset;
        prop_assert!(is_subtractive(&r, &j));
        prop_assert!(is_subtractive(&r, &js));
        prop_assert!(zeroid.is_subset(&j));
        prop_assert!(bm.is_subset(&cs));
    }

    #[test]
    fn congruence_closure_is_least((r, _) in relabeled(), pairs in prop::collection::vec((0usize..4, 0usize..4), 0..3)) {
        let n = r.len();
        let pairs: Vec<_> = pairs.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        let c = congruence_closure(&r, &pairs);
        prop_assert!(is_compatible(&r, &c));
        for &(a, b) in &pairs {
            prop_assert!(c.same(a, b));
        }
        for other in enumerate_congruences(&r).unwrap() {
            if pairs.iter().all(|&(a, b)| other.same(a, b)) {
                prop_assert!(c.refines(&other));
            }
        }
    }

    #[test]
    fn quotients_validate((r, _) in relabeled(), a in 0usize..4, b in 0usize..4) {
        let n = r.len();
        let c = congruence_closure(&r, &[(a % n, b % n)]);
        let (q, proj) = quotient(&r, &c).unwrap();
        prop_assert_eq!(q.len(), c.block_count());
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(proj[r.add(x, y)], q.add(proj[x], proj[y]));
                prop_assert_eq!(proj[r.mul(x, y)], q.mul(proj[x], proj[y]));
            }
        }
        prop_assert!(FiniteHemiring::validate(q.to_raw()).is_ok());
    }

    #[test]
    fn ideal_closure_is_least((r, _) in relabeled(), seed in 0usize..16) {
        let n = r.len();
        let s = Subset::from_indices(n, (0..n).filter(|i| seed >> i & 1 == 1));
        for side in [Sidedness::Left, Sidedness::Right, Sidedness::TwoSided] {
            let c = ideal_closure(&r, &s, side).subset;
            prop_assert!(is_ideal(&r, &c, side));
            prop_assert!(s.is_subset(&c));
            for t in 0..(1usize << n) {
                let t = Subset::from_indices(n, (0..n).filter(|i| t >> i & 1 == 1));
                if s.is_subset(&t) && is_ideal(&r, &t, side) {
                    prop_assert!(c.is_subset(&t));
                }
            }
        }
    }

    #[test]
    fn corrupted_cell_is_reported((r, _) in relabeled(), mul in any::<bool>(), x in 0usize..4, y in 0usize..4, v in 1usize..4) {
        let n = r.len();
        prop_assume!(n >= 2);
        let mut raw = r.to_raw();
        let table = if mul { &mut raw.mul } else { &mut raw.add };
        let (x, y) = (x % n, y % n);
        table[x][y] = (table[x][y] + v % n.max(2)) % n;
        match FiniteHemiring::validate(raw.clone()) {
            Ok(_) => {}
            Err(AlgebraError::AxiomViolation { axiom, witness }) => {
                let w: Vec<usize> = witness.iter().map(|l| raw.elements.iter().position(|e| e == l).unwrap()).collect();
                prop_assert!(witness_violates(&raw, axiom, &w), "{axiom} at {witness:?}");
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}
