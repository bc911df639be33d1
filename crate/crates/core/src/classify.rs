use serde::Serialize;

use crate::congruence::{enumerate_ideals, is_congruence_simple, is_ideal_simple, Sidedness};
use crate::error::Result;
use crate::hemiring::FiniteHemiring;
use crate::structure::Additive;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub is_semiring: bool,
    pub identity: Option<usize>,
    pub commutative: bool,
    pub additively_idempotent: bool,
    pub additively_cancellative: bool,
    pub additively_regular: bool,
    pub zeroic: bool,
    pub lattice_ordered: bool,
    pub subtractive_hemiring: bool,
    pub strongly_subtractive: bool,
    pub congruence_simple: bool,
    pub ideal_simple: bool,
    pub simple: bool,
    pub zeroid: Subset,
}

/// `{r | r + x = x for some x}`.
pub fn zeroid<A: Additive>(a: &A) -> Subset {
    a.zeroid()
}

/// `∀a ∃x: a + x + a = a`.
pub fn is_additively_regular(r: &FiniteHemiring) -> bool {
    let n = r.len();
    (0..n).all(|a| (0..n).any(|x| r.add(r.add(a, x), a) == a))
}

/// Idempotent addition, all binary meets for `x <= y ⇔ x + y = y`, and
/// `ab <= a ∧ b`.
pub fn is_lattice_ordered(r: &FiniteHemiring) -> bool {
    if !r.is_idempotent() {
        return false;
    }
    let n = r.len();
    let leq = |a: usize, b: usize| r.add(a, b) == b;
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&x| leq(x, a) && leq(x, b)).collect();
            let Some(m) = lower.iter().copied().find(|&m| lower.iter().all(|&x| leq(x, m))) else {
                return false;
            };
            if !leq(r.mul(a, b), m) {
                return false;
            }
        }
    }
    true
}

/// Every two-sided ideal is subtractive.
pub fn is_subtractive_hemiring(r: &FiniteHemiring) -> Result<bool> {
    Ok(enumerate_ideals(r, Sidedness::TwoSided, false)?.iter().all(|i| i.subtractive))
}

/// Every ideal, viewed as a hemiring, is a subtractive hemiring.
pub fn is_strongly_subtractive(r: &FiniteHemiring) -> Result<bool> {
    for ideal in enumerate_ideals(r, Sidedness::TwoSided, false)? {
        let (h, _) = r.restrict(&ideal.subset, "I")?;
        if !is_subtractive_hemiring(&h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Zeroic: the identity lies in the zeroid; without identity, the zeroid is
/// the whole carrier.
pub fn is_zeroic(r: &FiniteHemiring) -> bool {
    let z = r.zeroid();
    match r.identity() {
        Some(e) => z.contains(e),
        None => z.is_full(),
    }
}

pub fn classify(r: &FiniteHemiring) -> Result<ClassificationFlags> {
    let identity = r.identity();
    let additively_idempotent = r.is_idempotent();
    let congruence_simple = is_congruence_simple(r);
    let ideal_simple = is_ideal_simple(r);
    Ok(ClassificationFlags {
        is_semiring: identity.is_some(),
        identity,
        commutative: r.is_commutative(),
        additively_idempotent,
        additively_cancellative: r.is_cancellative(),
        additively_regular: is_additively_regular(r),
        zeroic: is_zeroic(r),
        lattice_ordered: is_lattice_ordered(r),
        subtractive_hemiring: is_subtractive_hemiring(r)?,
        strongly_subtractive: is_strongly_subtractive(r)?,
        congruence_simple,
        ideal_simple,
        simple: congruence_simple && ideal_simple && identity.is_some(),
        zeroid: r.zeroid(),
    })
}

/// Flag lookup by name, used by enumeration predicates.
pub fn flag_by_name(f: &ClassificationFlags, name: &str) -> Option<bool> {
    Some(match name {
        "is_semiring" | "semiring" => f.is_semiring,
        "commutative" => f.commutative,
        "additively_idempotent" | "idempotent" => f.additively_idempotent,
        "additively_cancellative" | "cancellative" => f.additively_cancellative,
        "additively_regular" | "regular" => f.additively_regular,
        "zeroic" => f.zeroic,
        "lattice_ordered" => f.lattice_ordered,
        "subtractive" | "subtractive_hemiring" => f.subtractive_hemiring,
        "strongly_subtractive" => f.strongly_subtractive,
        "congruence_simple" => f.congruence_simple,
        "ideal_simple" => f.ideal_simple,
        "simple" => f.simple,
        // finite cancellative monoids are groups
        "ring" => f.additively_cancellative,
        _ => return None,
    })
}

pub const PREDICATE_NAMES: &[&str] = &[
    "is_semiring",
    "commutative",
    "additively_idempotent",
    "additively_cancellative",
    "additively_regular",
    "zeroic",
    "lattice_ordered",
    "subtractive",
    "strongly_subtractive",
    "congruence_simple",
    "ideal_simple",
    "simple",
    "ring",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn boolean_flags() {
        let f = classify(&catalog::boolean()).unwrap();
        assert!(f.is_semiring && f.commutative && f.additively_idempotent && f.lattice_ordered);
        assert!(f.simple && !f.additively_cancellative);
        // 1 + 1 = 1 puts the identity in the zeroid
        assert!(f.zeroic && f.zeroid.is_full());
    }

    #[test]
    fn rings_and_zeroids() {
        let f = classify(&catalog::integers_mod(4)).unwrap();
        assert!(f.additively_cancellative && f.subtractive_hemiring && !f.congruence_simple);
        assert!(!f.zeroic && f.zeroid.is_zero());
        assert!(is_lattice_ordered(&catalog::chain4()));
        assert!(!is_lattice_ordered(&catalog::integers_mod(2)));
    }

    #[test]
    fn predicates_resolve() {
        let f = classify(&catalog::integers_mod(2)).unwrap();
        for name in PREDICATE_NAMES {
            assert!(flag_by_name(&f, name).is_some(), "{name}");
        }
        assert_eq!(flag_by_name(&f, "ring"), Some(true));
        assert_eq!(flag_by_name(&f, "nonsense"), None);
    }
}
