use super::*;
use crate::catalog;

fn labels(r: &FiniteHemiring, s: &Subset) -> Vec<String> {
    r.subset_labels(s)
}

fn j(name: &str) -> Vec<String> {
    let r = catalog::hemiring(name).unwrap();
    labels(&r, &radical(&r, RadicalKind::J).unwrap().subset)
}

#[test]
fn boolean_radicals() {
    let b = catalog::boolean();
    assert_eq!(radical(&b, RadicalKind::J).unwrap().subset, Subset::full(2));
    assert!(radical(&b, RadicalKind::Js).unwrap().subset.is_zero());
    for m in JacobsonMethod::ALL {
        assert!(jacobson_oracle(&b, m).unwrap().subset.is_full(), "{m:?}");
    }
}

#[test]
fn z4_jacobson() {
    assert_eq!(j("Z4"), vec!["0", "2"]);
}

#[test]
fn ring_jacobson_examples() {
    let z4 = catalog::integers_mod(4);
    assert_eq!(ring_jacobson(&z4).unwrap().iter().collect::<Vec<_>>(), vec![0, 2]);
    assert!(ring_jacobson(&catalog::integers_mod(2)).unwrap().is_zero());
    let null = FiniteHemiring::from_fn("N2", vec!["0".into(), "1".into()], |a, b| a ^ b, |_, _| 0).unwrap();
    assert!(ring_jacobson(&null).unwrap().is_full());
    assert!(matches!(ring_jacobson(&catalog::boolean()), Err(AlgebraError::NotARing(_))));
}

#[test]
fn brown_mccoy_examples() {
    let c = catalog::chain4();
    let bm = radical(&c, RadicalKind::BM).unwrap();
    assert_eq!(c.subset_labels(&bm.subset), vec!["0", "a"]);
    let e = catalog::end_n5();
    assert!(radical(&e, RadicalKind::BM).unwrap().subset.is_full());
    assert!(!is_bm_radical(&catalog::boolean()).unwrap());
    assert!(is_bm_radical(&catalog::zero()).unwrap());
    let (sub, _) = c.restrict(&bm.subset, "I").unwrap();
    assert!(is_bm_radical(&sub).unwrap());
}

#[test]
fn regularity_examples() {
    let b = catalog::boolean();
    assert!(!regularity(&b, 1, Regularity::F1));
    assert!(regularity(&b, 0, Regularity::G));
    let e = catalog::end_n5();
    let one = e.identity().unwrap();
    assert!(!regularity(&e, one, Regularity::F1));
}

/// The pair sets written out literally: `F1(r) = {(rx+yr, x+y)}` and
/// `G(r) = {(rx+u, x+v) | (u,v) in S_r ∪ {(0,0)}}`.
fn literal_regularity(h: &FiniteHemiring, r: usize, kind: Regularity) -> bool {
    let n = h.len();
    let mut pairs = Vec::new();
    match kind {
        Regularity::F1 => {
            for x in 0..n {
                for y in 0..n {
                    pairs.push((h.add(h.mul(r, x), h.mul(y, r)), h.add(x, y)));
                }
            }
        }
        Regularity::G => {
            let mut s: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::from([(0, 0)]);
            let gens: Vec<(usize, usize)> =
                (0..n).flat_map(|y| (0..n).map(move |z| (y, z))).map(|(y, z)| (h.mul(h.mul(y, r), z), h.mul(y, z))).collect();
            loop {
                let before = s.len();
                let cur: Vec<_> = s.iter().copied().collect();
                for &(a, b) in &cur {
                    for &(c, d) in &gens {
                        s.insert((h.add(a, c), h.add(b, d)));
                    }
                }
                if s.len() == before {
                    break;
                }
            }
            for x in 0..n {
                for &(u, v) in &s {
                    pairs.push((h.add(h.mul(r, x), u), h.add(x, v)));
                }
            }
        }
    }
    crate::congruence::congruence_closure(h, &pairs).same(r, 0)
}

#[test]
fn cheap_regularity_generators_match_literal_sets() {
    for name in crate::catalog::HEMIRING_NAMES {
        let h = catalog::hemiring(name).unwrap();
        if h.len() > 16 {
            continue;
        }
        for r in 0..h.len() {
            for kind in [Regularity::G, Regularity::F1] {
                assert_eq!(regularity(&h, r, kind), literal_regularity(&h, r, kind), "{name} {r} {kind:?}");
            }
        }
    }
}

#[test]
fn primitive_examples() {
    assert!(is_primitive(&catalog::integers_mod(2)).unwrap().is_some());
    assert!(is_primitive(&catalog::boolean()).unwrap().is_none());
    let m2z2 = crate::constructions::matrix_hemiring(&catalog::integers_mod(2), 2).unwrap();
    assert!(is_primitive(&m2z2).unwrap().is_some());
}

#[test]
fn subdirect_examples() {
    let z2 = catalog::integers_mod(2);
    let rep = subdirect_by_annihilators(&z2, RadicalKind::J).unwrap().unwrap();
    assert_eq!(rep.factors.len(), 1);
    assert!(rep.passes());
    let bz = catalog::boolean_times_z2();
    let rep = subdirect_by_annihilators(&bz, RadicalKind::Js).unwrap().unwrap();
    assert_eq!(rep.factors.len(), 2);
    assert!(rep.passes());
    assert!(subdirect_by_annihilators(&catalog::boolean(), RadicalKind::J).unwrap().is_none());
}

#[test]
fn catalog_radicals() {
    assert_eq!(j("T3").len(), 3);
    let bz = catalog::boolean_times_z2();
    let jb = radical(&bz, RadicalKind::J).unwrap().subset;
    assert_eq!(jb.count(), 2);
    let m2b = catalog::m2b();
    assert!(radical(&m2b, RadicalKind::BM).unwrap().subset.is_zero());
    assert!(radical(&m2b, RadicalKind::J).unwrap().subset.is_full());
}

#[test]
fn jacobson_methods_agree_on_catalog() {
    for name in crate::catalog::HEMIRING_NAMES {
        let r = catalog::hemiring(name).unwrap();
        let results: Vec<Subset> = JacobsonMethod::ALL
            .iter()
            .filter(|&&m| m != JacobsonMethod::Semiregular || r.len() <= 16)
            .map(|&m| jacobson_oracle(&r, m).unwrap().subset)
            .collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]), "{name}: {results:?}");
    }
}
