use super::closure::is_compatible;
use super::ideals::{bourne_partition, is_ideal, Sidedness, SubsetIdeal};
use super::partition::Partition;
use crate::error::{AlgebraError, Result};
use crate::hemiring::FiniteHemiring;

/// Factor hemiring by a congruence, labelled by block representatives, with
/// the projection from `r`.
pub fn quotient(r: &FiniteHemiring, p: &Partition) -> Result<(FiniteHemiring, Vec<usize>)> {
    if !is_compatible(r, p) {
        return Err(AlgebraError::IncompatiblePartition);
    }
    Ok(quotient_unchecked(r, p))
}

pub(crate) fn quotient_unchecked(r: &FiniteHemiring, p: &Partition) -> (FiniteHemiring, Vec<usize>) {
    let proj = p.block_indices();
    let reps: Vec<usize> = p.reps().collect();
    let k = reps.len();
    let mut add = vec![0; k * k];
    let mut mul = vec![0; k * k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * k + j] = proj[r.add(a, b)];
            mul[i * k + j] = proj[r.mul(a, b)];
        }
    }
    let labels = reps.iter().map(|&a| r.label(a).to_string()).collect();
    let name = format!("{}/~", r.name());
    (FiniteHemiring::assemble(name, labels, add, mul), proj)
}

/// `R/I` by the Bourne congruence of a two-sided ideal.
pub fn bourne_quotient(r: &FiniteHemiring, ideal: &SubsetIdeal) -> Result<(FiniteHemiring, Vec<usize>)> {
    if !is_ideal(r, &ideal.subset, Sidedness::TwoSided) {
        return Err(AlgebraError::NotAnIdeal);
    }
    let p = bourne_partition(r, &ideal.subset);
    let (q, proj) = quotient_unchecked(r, &p);
    Ok((q.with_name(format!("{}/I", r.name())), proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::iso::are_isomorphic;
    use crate::subset::Subset;

    #[test]
    fn bourne_quotients() {
        let z4 = catalog::integers_mod(4);
        let i = SubsetIdeal::new(&z4, Subset::from_indices(4, [0, 2]), Sidedness::TwoSided).unwrap();
        let (q, proj) = bourne_quotient(&z4, &i).unwrap();
        assert!(are_isomorphic(&q, &catalog::integers_mod(2)));
        assert_eq!(proj[1], proj[3]);
        let b = catalog::boolean();
        let (q, _) = bourne_quotient(&b, &SubsetIdeal::zero(&b, Sidedness::TwoSided)).unwrap();
        assert!(are_isomorphic(&q, &b));
    }

    #[test]
    fn rejects_incompatible_partition() {
        let z4 = catalog::integers_mod(4);
        let p = Partition::from_blocks(4, &[vec![0, 1], vec![2], vec![3]]);
        assert_eq!(quotient(&z4, &p).unwrap_err(), AlgebraError::IncompatiblePartition);
    }
}
