use crate::congruence::{ideal_closure, Sidedness};
use crate::error::{AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::subset::Subset;

/// The corner `eRe` of an idempotent, with its embedding into `R`.
#[derive(Clone, Debug)]
pub struct Corner {
    pub hemiring: FiniteHemiring,
    pub idempotent: usize,
    pub embedding: Vec<usize>,
    /// `ReR = R`.
    pub is_full: bool,
}

impl Corner {
    /// A subset of `R` contained in `eRe`, re-indexed into the corner.
    pub fn pull(&self, s: &Subset) -> Option<Subset> {
        let mut out = Subset::empty(self.hemiring.len());
        for x in s.iter() {
            out.insert(self.embedding.iter().position(|&y| y == x)?);
        }
        Some(out)
    }

    /// A corner subset pushed into `R`.
    pub fn push(&self, s: &Subset, r_len: usize) -> Subset {
        Subset::from_indices(r_len, s.iter().map(|i| self.embedding[i]))
    }
}

pub fn is_full_idempotent(r: &FiniteHemiring, e: usize) -> bool {
    r.mul(e, e) == e && ideal_closure(r, &Subset::singleton(r.len(), e), Sidedness::TwoSided).subset.is_full()
}

/// Nonzero idempotents `e` with `ReR = R`.
pub fn full_idempotents(r: &FiniteHemiring) -> Vec<usize> {
    (1..r.len()).filter(|&e| is_full_idempotent(r, e)).collect()
}

/// `{ e x e | x ∈ s }`.
pub fn corner_image(r: &FiniteHemiring, e: usize, s: &Subset) -> Subset {
    Subset::from_indices(r.len(), s.iter().map(|x| r.mul(r.mul(e, x), e)))
}

pub fn corner(r: &FiniteHemiring, e: usize) -> Result<Corner> {
    if e >= r.len() {
        return Err(AlgebraError::InvalidInput(format!("element index {e} outside carrier")));
    }
    if r.mul(e, e) != e {
        return Err(AlgebraError::NotIdempotent(r.label(e).to_string()));
    }
    let carrier = corner_image(r, e, &Subset::full(r.len()));
    let (h, embedding) = r.restrict(&carrier, format!("e{}e", r.name()))?;
    Ok(Corner {
        hemiring: h,
        idempotent: e,
        embedding,
        is_full: is_full_idempotent(r, e),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::constructions::{matrix_hemiring, matrix_unit};
    use crate::iso::are_isomorphic;

    #[test]
    fn corner_of_boolean_matrices() {
        let b = catalog::boolean();
        let m = matrix_hemiring(&b, 2).unwrap();
        let e11 = matrix_unit(&b, 2, 0, 0).unwrap();
        let c = corner(&m, e11).unwrap();
        assert!(c.is_full);
        assert!(are_isomorphic(&c.hemiring, &b));
        let all = Subset::full(m.len());
        assert_eq!(corner_image(&m, e11, &all), c.push(&Subset::full(c.hemiring.len()), m.len()));
        assert!(full_idempotents(&m).contains(&e11));
    }

    #[test]
    fn non_idempotent_is_rejected() {
        let z4 = catalog::integers_mod(4);
        assert!(matches!(corner(&z4, 2), Err(AlgebraError::NotIdempotent(_))));
    }
}
