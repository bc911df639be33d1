//! Named structures used throughout the examples and tests.

use crate::constructions::{direct_product, endomorphism_hemiring, matrix_hemiring};
use crate::error::{AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::monoid::FiniteMonoid;

pub const HEMIRING_NAMES: &[&str] = &["ZERO", "B", "Z2", "Z4", "T3", "CHAIN4", "BXZ2", "M2B", "END_N5"];
pub const MONOID_NAMES: &[&str] = &["C2", "N5", "M3"];

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

pub fn zero() -> FiniteHemiring {
    FiniteHemiring::from_fn("ZERO", labels(&["0"]), |_, _| 0, |_, _| 0).expect("zero hemiring")
}

pub fn boolean() -> FiniteHemiring {
    FiniteHemiring::from_fn("B", labels(&["0", "1"]), |a, b| a | b, |a, b| a & b).expect("B")
}

pub fn integers_mod(n: usize) -> FiniteHemiring {
    let ls = (0..n).map(|i| i.to_string()).collect();
    FiniteHemiring::from_fn(format!("Z{n}"), ls, |a, b| (a + b) % n, |a, b| a * b % n).expect("Z_n")
}

/// `{0, 1, 2}` with sums and products truncated at 2.
pub fn truncated3() -> FiniteHemiring {
    FiniteHemiring::from_fn("T3", labels(&["0", "1", "2"]), |a, b| (a + b).min(2), |a, b| (a * b).min(2))
        .expect("T3")
}

/// The chain `0 < a < b < 1` with join as addition, `b² = b`, `a² = 0`,
/// `ba = a`, `ab = 0`, and `1` the identity.
pub fn chain4() -> FiniteHemiring {
    // indices: 0, a=1, b=2, 1=3
    const T: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 2, 2], [0, 1, 2, 3]];
    FiniteHemiring::from_fn("CHAIN4", labels(&["0", "a", "b", "1"]), |x, y| x.max(y), |x, y| T[x][y])
        .expect("CHAIN4")
}

pub fn chain2_monoid() -> FiniteMonoid {
    FiniteMonoid::from_fn("C2", labels(&["0", "1"]), |a, b| a | b).expect("C2")
}

/// Pentagon lattice: `0 < x < z < 1`, `y` incomparable to `x` and `z`.
pub fn pentagon() -> FiniteMonoid {
    // indices 0, x=1, y=2, z=3, 1=4
    const J: [[usize; 5]; 5] = [[0, 1, 2, 3, 4], [1, 1, 4, 3, 4], [2, 4, 2, 4, 4], [3, 3, 4, 3, 4], [4, 4, 4, 4, 4]];
    FiniteMonoid::from_fn("N5", labels(&["0", "x", "y", "z", "1"]), |a, b| J[a][b]).expect("N5")
}

/// Diamond lattice: three pairwise incomparable atoms.
pub fn diamond() -> FiniteMonoid {
    FiniteMonoid::from_fn("M3", labels(&["0", "a", "b", "c", "1"]), |a, b| match (a, b) {
        (0, y) => y,
        (x, 0) => x,
        (x, y) if x == y => x,
        _ => 4,
    })
    .expect("M3")
}

pub fn boolean_times_z2() -> FiniteHemiring {
    let (b, z2) = (boolean(), integers_mod(2));
    direct_product(&[&b, &z2]).expect("BXZ2").0.with_name("BXZ2")
}

pub fn m2b() -> FiniteHemiring {
    matrix_hemiring(&boolean(), 2).expect("M2B").with_name("M2B")
}

pub fn end_n5() -> FiniteHemiring {
    endomorphism_hemiring(&pentagon()).expect("End(N5)").hemiring.with_name("END_N5")
}

pub fn hemiring(name: &str) -> Result<FiniteHemiring> {
    Ok(match name {
        "ZERO" => zero(),
        "B" => boolean(),
        "Z2" => integers_mod(2),
        "Z4" => integers_mod(4),
        "T3" => truncated3(),
        "CHAIN4" => chain4(),
        "BXZ2" => boolean_times_z2(),
        "M2B" => m2b(),
        "END_N5" => end_n5(),
        _ => match name.strip_prefix('Z').and_then(|k| k.parse::<usize>().ok()) {
            Some(k) if (1..=64).contains(&k) => integers_mod(k),
            _ => return Err(AlgebraError::InvalidInput(format!("unknown builtin hemiring {name:?}"))),
        },
    })
}

pub fn monoid(name: &str) -> Result<FiniteMonoid> {
    Ok(match name {
        "C2" => chain2_monoid(),
        "N5" => pentagon(),
        "M3" => diamond(),
        _ => return Err(AlgebraError::InvalidInput(format!("unknown builtin monoid {name:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_revalidates() {
        for name in HEMIRING_NAMES {
            let r = hemiring(name).unwrap();
            let again = FiniteHemiring::validate(r.to_raw()).unwrap();
            assert_eq!(again, r, "{name}");
        }
        for name in MONOID_NAMES {
            monoid(name).unwrap();
        }
    }

    #[test]
    fn pentagon_is_not_distributive() {
        assert!(pentagon().is_lattice());
        assert!(!pentagon().is_distributive_lattice());
        assert!(!diamond().is_distributive_lattice());
    }
}
