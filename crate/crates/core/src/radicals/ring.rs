use crate::congruence::{ideal_closure, ideal_product, Sidedness};
use crate::error::{AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::structure::Additive;
use crate::subset::Subset;

/// Whether the two-sided ideal `ideal` has `ideal^k = 0` for some `k`.
pub fn is_nilpotent(r: &FiniteHemiring, ideal: &Subset) -> bool {
    let mut p = ideal.clone();
    loop {
        if p.is_zero() {
            return true;
        }
        let next = ideal_product(r, &p, ideal);
        if next == p {
            return false;
        }
        p = next;
    }
}

/// Jacobson radical of a finite ring, possibly without identity: the
/// elements whose two-sided principal ideal is nilpotent. For a finite ring
/// this is the largest nilpotent ideal.
pub fn ring_jacobson(d: &FiniteHemiring) -> Result<Subset> {
    if !d.is_group() {
        return Err(AlgebraError::NotARing(d.name().to_string()));
    }
    let n = d.len();
    let mut out = Subset::zero(n);
    for x in 1..n {
        if out.contains(x) {
            continue;
        }
        let principal = ideal_closure(d, &Subset::singleton(n, x), Sidedness::TwoSided).subset;
        if is_nilpotent(d, &principal) {
            for y in principal.iter() {
                out.insert(y);
            }
        }
    }
    Ok(out)
}
