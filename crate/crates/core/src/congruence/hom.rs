use serde::Serialize;

use crate::hemiring::FiniteHemiring;
use crate::subset::Subset;

/// A map between carriers given by the image of each source index.
#[derive(Clone, Debug)]
pub struct HemiringMap<'a> {
    pub source: &'a FiniteHemiring,
    pub target: &'a FiniteHemiring,
    pub image: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub is_hom: bool,
    pub kernel: Subset,
    pub surjective: bool,
    pub injective: bool,
    pub is_semiisomorphism: bool,
}

impl<'a> HemiringMap<'a> {
    pub fn new(source: &'a FiniteHemiring, target: &'a FiniteHemiring, image: Vec<usize>) -> Self {
        HemiringMap { source, target, image }
    }

    pub fn kernel(&self) -> Subset {
        Subset::from_indices(self.source.len(), (0..self.source.len()).filter(|&x| self.image[x] == 0))
    }

    pub fn check(&self) -> HomReport {
        let (s, t, f) = (self.source, self.target, &self.image);
        let n = s.len();
        let well_formed = f.len() == n && f.iter().all(|&y| y < t.len());
        let is_hom = well_formed
            && f[0] == 0
            && (0..n).all(|a| (0..n).all(|b| f[s.add(a, b)] == t.add(f[a], f[b]) && f[s.mul(a, b)] == t.mul(f[a], f[b])));
        if !well_formed {
            return HomReport {
                is_hom: false,
                kernel: Subset::empty(n),
                surjective: false,
                injective: false,
                is_semiisomorphism: false,
            };
        }
        let mut hit = vec![false; t.len()];
        let mut injective = true;
        for &y in f {
            injective &= !std::mem::replace(&mut hit[y], true);
        }
        let surjective = hit.iter().all(|&h| h);
        let kernel = self.kernel();
        HomReport {
            is_hom,
            is_semiisomorphism: is_hom && surjective && kernel.is_zero(),
            kernel,
            surjective,
            injective,
        }
    }
}

pub fn hom_check(f: &HemiringMap<'_>) -> HomReport {
    f.check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn reduction_mod_two() {
        let z4 = catalog::integers_mod(4);
        let z2 = catalog::integers_mod(2);
        let f = HemiringMap::new(&z4, &z2, vec![0, 1, 0, 1]);
        let rep = hom_check(&f);
        assert!(rep.is_hom && rep.surjective && !rep.injective);
        assert_eq!(rep.kernel, Subset::from_indices(4, [0, 2]));
        let id = HemiringMap::new(&z4, &z4, vec![0, 1, 2, 3]);
        assert!(hom_check(&id).injective);
        assert!(!hom_check(&HemiringMap::new(&z4, &z4, vec![0, 2, 0, 2])).is_hom);
    }
}
