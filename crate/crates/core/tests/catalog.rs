use radx_core::catalog;
use radx_core::constructions::{corner, corner_image, matrix_hemiring, matrix_subset, matrix_unit};
use radx_core::enumerate::{all_hemirings_up_to, enumerate_hemirings};
use radx_core::radicals::{jacobson_oracle, radical, JacobsonMethod, RadicalKind};
use radx_core::{Additive, FiniteHemiring, Subset};

fn rad(r: &FiniteHemiring, k: RadicalKind) -> Subset {
    radical(r, k).unwrap().subset
}

fn labels(r: &FiniteHemiring, s: &Subset) -> Vec<String> {
    r.subset_labels(s)
}

/// Jacobson radical of a unital ring: `x` with `1 - yx` invertible for all `y`.
fn quasi_regular_radical(r: &FiniteHemiring) -> Subset {
    let n = r.len();
    let one = r.identity().unwrap();
    let neg = |a: usize| (0..n).find(|&b| r.add(a, b) == 0).unwrap();
    let unit = |u: usize| (0..n).any(|v| r.mul(u, v) == one && r.mul(v, u) == one);
    Subset::from_indices(n, (0..n).filter(|&x| (0..n).all(|y| unit(r.add(one, neg(r.mul(y, x)))))))
}

#[test]
fn boolean_semifield() {
    let b = catalog::boolean();
    assert_eq!(labels(&b, &rad(&b, RadicalKind::J)), ["0", "1"]);
    assert_eq!(labels(&b, &rad(&b, RadicalKind::Js)), ["0"]);
}

#[test]
fn unital_rings_match_quasi_regular_oracle() {
    for n in 1..=12 {
        let r = catalog::integers_mod(n);
        assert_eq!(rad(&r, RadicalKind::J), quasi_regular_radical(&r), "Z{n}");
    }
    let m = matrix_hemiring(&catalog::integers_mod(2), 2).unwrap();
    assert!(rad(&m, RadicalKind::J).is_zero());
    let rings: Vec<_> = all_hemirings_up_to(3)
        .unwrap()
        .into_iter()
        .filter(|r| r.is_group() && r.identity().is_some())
        .collect();
    assert!(!rings.is_empty());
    for r in rings {
        assert_eq!(rad(&r, RadicalKind::J), quasi_regular_radical(&r), "{}", r.name());
    }
}

#[test]
fn jacobson_methods_agree() {
    let mut pool = all_hemirings_up_to(3).unwrap();
    pool.extend(["ZERO", "B", "Z2", "Z4", "T3", "CHAIN4", "BXZ2", "M2B"].map(|n| catalog::hemiring(n).unwrap()));
    for r in &pool {
        let a = jacobson_oracle(r, JacobsonMethod::StarDifferences).unwrap().subset;
        let b = jacobson_oracle(r, JacobsonMethod::Semiregular).unwrap().subset;
        let c = jacobson_oracle(r, JacobsonMethod::Annihilators).unwrap().subset;
        assert_eq!(a, b, "{}", r.name());
        assert_eq!(a, c, "{}", r.name());
    }
}

#[test]
fn matrix_radicals_over_small_semirings() {
    for name in ["B", "Z2", "Z4"] {
        let r = catalog::hemiring(name).unwrap();
        let m = matrix_hemiring(&r, 2).unwrap();
        for k in RadicalKind::ALL {
            let expect = matrix_subset(&r, 2, &rad(&r, k)).unwrap();
            assert_eq!(rad(&m, k), expect, "{k} over {name}");
        }
    }
}

#[test]
fn corners_at_e11() {
    for name in ["B", "Z4"] {
        let r = catalog::hemiring(name).unwrap();
        let m = matrix_hemiring(&r, 2).unwrap();
        let e = matrix_unit(&r, 2, 0, 0).unwrap();
        let c = corner(&m, e).unwrap();
        assert!(c.is_full);
        for k in [RadicalKind::J, RadicalKind::Js, RadicalKind::BM] {
            let lhs = c.push(&rad(&c.hemiring, k), m.len());
            assert_eq!(lhs, corner_image(&m, e, &rad(&m, k)), "{k} over {name}");
        }
    }
}

#[test]
fn order_counts() {
    let counts: Vec<usize> = (1..=3).map(|k| enumerate_hemirings::<&str>(k, &[]).unwrap().len()).collect();
    assert_eq!(counts, [1, 4, 22]);
    let semirings: Vec<usize> = (1..=3).map(|k| enumerate_hemirings(k, &["is_semiring"]).unwrap().len()).collect();
    assert_eq!(semirings, [1, 2, 6]);
}
