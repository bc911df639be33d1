use rayon::prelude::*;
use serde::Serialize;

use super::{RadicalKind, RadicalResult, Witness};
use crate::congruence::{enumerate_congruences, enumerate_ideals, is_congruence_simple, is_ideal_simple, quotient_unchecked, Sidedness};
use crate::error::Result;
use crate::hemiring::FiniteHemiring;
use crate::subset::Subset;

/// What "simple semiring" means for the `C_s` family of congruences.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum SimplicityReading {
    /// Congruence-simple, ideal-simple, with identity.
    #[default]
    Both,
    /// Congruence-simple with identity.
    CongruenceOnly,
}

pub fn is_simple_semiring(q: &FiniteHemiring, reading: SimplicityReading) -> bool {
    q.len() >= 2
        && q.identity().is_some()
        && is_congruence_simple(q)
        && (reading == SimplicityReading::CongruenceOnly || is_ideal_simple(q))
}

/// No congruence on `h` has a nonzero quotient that is an ideal-simple
/// semiring.
pub fn is_bm_radical(h: &FiniteHemiring) -> Result<bool> {
    let congs = enumerate_congruences(h)?;
    Ok(!congs.par_iter().any(|p| {
        if p.is_full() {
            return false;
        }
        let (q, _) = quotient_unchecked(h, p);
        q.identity().is_some() && is_ideal_simple(&q)
    }))
}

/// The largest ideal that is Brown-McCoy radical as a hemiring. Ideals are
/// tried from largest to smallest; the radical contains every other
/// radical ideal, so the first hit is the answer.
pub fn bm_radical(r: &FiniteHemiring) -> Result<RadicalResult> {
    let mut ideals: Vec<Subset> = enumerate_ideals(r, Sidedness::TwoSided, false)?.into_iter().map(|i| i.subset).collect();
    ideals.sort_by_key(|s| std::cmp::Reverse(s.count()));
    for ideal in ideals {
        let (h, _) = r.restrict(&ideal, "I")?;
        if is_bm_radical(&h)? {
            return Ok(RadicalResult {
                kind: RadicalKind::BM,
                subset: ideal.clone(),
                method: "largest_radical_ideal",
                witnesses: vec![Witness::RadicalIdeal(ideal)],
            });
        }
    }
    unreachable!("the zero ideal is always Brown-McCoy radical")
}

/// Intersection of the kernels of congruences with a nonzero simple
/// semiring quotient; the empty family gives `R`.
pub fn cs_radical(r: &FiniteHemiring, reading: SimplicityReading) -> Result<RadicalResult> {
    let congs = enumerate_congruences(r)?;
    let hits: Vec<_> = congs
        .into_par_iter()
        .filter(|p| !p.is_full() && is_simple_semiring(&quotient_unchecked(r, p).0, reading))
        .collect();
    let mut subset = Subset::full(r.len());
    let mut witnesses = Vec::new();
    for partition in hits {
        let kernel = partition.kernel();
        subset = subset.intersection(&kernel);
        witnesses.push(Witness::Congruence { partition, kernel });
    }
    Ok(RadicalResult {
        kind: RadicalKind::BMCs,
        subset,
        method: match reading {
            SimplicityReading::Both => "simple_congruences",
            SimplicityReading::CongruenceOnly => "congruence_simple_congruences",
        },
        witnesses,
    })
}
