use std::sync::Arc;

use super::{radical, RadicalKind};
use crate::congruence::{enumerate_congruences, hom_check, is_ideal_simple, quotient_unchecked, HemiringMap, Partition};
use crate::constructions::density_check_maps;
use crate::error::Result;
use crate::hemiring::FiniteHemiring;
use crate::semimodule::{enumerate_irreducible_semimodules, enumerate_simple_semimodules, FiniteSemimodule};
use crate::structure::Additive;
use crate::subset::Subset;

#[derive(Clone, Debug)]
pub struct Factor {
    pub hemiring: FiniteHemiring,
    pub projection: Vec<usize>,
    pub kernel: Subset,
    pub surjective: bool,
    pub is_hom: bool,
    /// The semimodule the factor acts on, for `J` and `J_s`.
    pub module: Option<FiniteSemimodule>,
    /// Density of the image in `End(M)`, for `J_s` over additively
    /// idempotent hemirings.
    pub dense: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct SubdirectReport {
    pub kind: RadicalKind,
    pub factors: Vec<Factor>,
    /// Elements sent to zero in every factor.
    pub combined_kernel: Subset,
    pub semiisomorphism: bool,
    pub injective: bool,
}

impl SubdirectReport {
    pub fn passes(&self) -> bool {
        self.semiisomorphism && self.factors.iter().all(|f| f.surjective && f.is_hom && f.dense != Some(false))
    }
}

/// The image of `R` in `End(M, +)`: `r ~ s` iff `rm = sm` for all `m`.
fn action_partition(r: &FiniteHemiring, m: &FiniteSemimodule) -> Partition {
    Partition::from_key(r.len(), |x| (0..m.len()).map(|y| m.act(x, y)).collect::<Vec<_>>())
}

fn factor(r: &FiniteHemiring, p: &Partition, module: Option<FiniteSemimodule>, dense: Option<bool>) -> Factor {
    let (q, proj) = quotient_unchecked(r, p);
    let hom = hom_check(&HemiringMap::new(r, &q, proj.clone()));
    Factor {
        kernel: p.kernel(),
        surjective: hom.surjective,
        is_hom: hom.is_hom,
        hemiring: q,
        projection: proj,
        module,
        dense,
    }
}

/// Decompose a radical-free hemiring as a subdirect product: over
/// irreducible modules for `J`, over simple modules for `J_s`, and over
/// ideal-simple semiring quotients for `BM`. `None` if the radical is
/// nonzero.
pub fn subdirect_by_annihilators(r: &FiniteHemiring, kind: RadicalKind) -> Result<Option<SubdirectReport>> {
    if !radical(r, kind)?.subset.is_zero() {
        return Ok(None);
    }
    let shared = Arc::new(r.clone());
    let factors: Vec<Factor> = match kind {
        RadicalKind::J | RadicalKind::Js => {
            let mods = if kind == RadicalKind::J {
                enumerate_irreducible_semimodules(&shared)?
            } else {
                enumerate_simple_semimodules(&shared)?
            };
            let idempotent = r.is_idempotent();
            mods.into_iter()
                .map(|m| {
                    let p = action_partition(r, &m);
                    let dense = if kind == RadicalKind::Js && idempotent {
                        let mut maps: Vec<Vec<usize>> =
                            (0..r.len()).map(|x| (0..m.len()).map(|y| m.act(x, y)).collect()).collect();
                        maps.sort();
                        maps.dedup();
                        density_check_maps(&maps, &m).ok().map(|(_, d)| d)
                    } else {
                        None
                    };
                    factor(r, &p, Some(m), dense)
                })
                .collect()
        }
        RadicalKind::BM | RadicalKind::BMCs => enumerate_congruences(r)?
            .into_iter()
            .filter(|p| !p.is_full())
            .filter(|p| {
                let (q, _) = quotient_unchecked(r, p);
                q.identity().is_some() && is_ideal_simple(&q)
            })
            .map(|p| factor(r, &p, None, None))
            .collect(),
    };
    let n = r.len();
    let combined_kernel = factors.iter().fold(Subset::full(n), |acc, f| acc.intersection(&f.kernel));
    let injective = (0..n).all(|a| (a + 1..n).all(|b| factors.iter().any(|f| f.projection[a] != f.projection[b])));
    Ok(Some(SubdirectReport {
        kind,
        semiisomorphism: combined_kernel.is_zero(),
        combined_kernel,
        injective,
        factors,
    }))
}
