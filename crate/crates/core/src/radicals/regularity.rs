use crate::congruence::congruence_closure;
use crate::hemiring::FiniteHemiring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Regularity {
    G,
    F1,
}

/// Generators of the congruence attached to `r`: `(rx, x)` and `(yrz, yz)`
/// for `G`, `(rx, x)` and `(yr, y)` for `F1`. A congruence containing these
/// contains every pair of the original sets, since those are sums of them.
pub fn regularity_pairs(h: &FiniteHemiring, r: usize, kind: Regularity) -> Vec<(usize, usize)> {
    let n = h.len();
    let mut pairs: Vec<(usize, usize)> = (0..n).map(|x| (h.mul(r, x), x)).collect();
    match kind {
        Regularity::G => {
            for y in 0..n {
                for z in 0..n {
                    pairs.push((h.mul(h.mul(y, r), z), h.mul(y, z)));
                }
            }
        }
        Regularity::F1 => pairs.extend((0..n).map(|y| (h.mul(y, r), y))),
    }
    pairs
}

/// `(r, 0)` lies in the congruence generated by the regularity pairs of `r`.
pub fn regularity(h: &FiniteHemiring, r: usize, kind: Regularity) -> bool {
    congruence_closure(h, &regularity_pairs(h, r, kind)).same(r, 0)
}

pub fn is_g_regular(h: &FiniteHemiring) -> bool {
    (0..h.len()).all(|r| regularity(h, r, Regularity::G))
}

pub fn is_f1_regular(h: &FiniteHemiring) -> bool {
    (0..h.len()).all(|r| regularity(h, r, Regularity::F1))
}
