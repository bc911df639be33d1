use crate::congruence::{quotient_unchecked, Partition};
use crate::hemiring::FiniteHemiring;
use crate::structure::Additive;

/// `m ~ m'` iff `m + x = m' + x` for some `x`, decided by adding the sum of
/// the whole carrier.
pub fn star_partition<A: Additive>(a: &A) -> Partition {
    let total = a.total();
    Partition::from_key(a.size(), |x| a.plus(x, total))
}

/// `R*` with the projection `r -> r*`. Always additively cancellative.
pub fn star_quotient(r: &FiniteHemiring) -> (FiniteHemiring, Vec<usize>) {
    let (q, proj) = quotient_unchecked(r, &star_partition(r));
    (q.with_name(format!("{}*", r.name())), proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cancellative_reducts_are_unchanged() {
        assert_eq!(star_quotient(&catalog::integers_mod(4)).0.len(), 4);
        assert_eq!(star_quotient(&catalog::boolean()).0.len(), 1);
        let (q, proj) = star_quotient(&catalog::boolean_times_z2());
        assert_eq!(q.len(), 2);
        assert_eq!(proj[0], 0);
    }
}
