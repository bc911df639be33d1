//! The radicals `J`, `J_s`, `R_BM` and `R_Cs`, with independent routes for
//! cross-checking.

mod bm;
mod regularity;
mod ring;
mod subdirect;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

pub use bm::{bm_radical, cs_radical, is_bm_radical, is_simple_semiring, SimplicityReading};
pub use regularity::{is_g_regular, is_f1_regular, regularity, regularity_pairs, Regularity};
pub use ring::{is_nilpotent, ring_jacobson};
pub use subdirect::{subdirect_by_annihilators, Factor, SubdirectReport};

use crate::congruence::{ideal_closure, is_ideal, Partition, Sidedness};
use crate::constructions::{differences, star_quotient};
use crate::error::{limit, AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::limits::MAX_SEMIREGULAR_CARRIER;
use crate::semimodule::{annihilator, enumerate_irreducible_semimodules, enumerate_simple_semimodules, FiniteSemimodule};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RadicalKind {
    J,
    Js,
    BM,
    BMCs,
}

impl RadicalKind {
    pub const ALL: [RadicalKind; 4] = [RadicalKind::J, RadicalKind::Js, RadicalKind::BM, RadicalKind::BMCs];

    pub fn name(self) -> &'static str {
        match self {
            RadicalKind::J => "J",
            RadicalKind::Js => "Js",
            RadicalKind::BM => "BM",
            RadicalKind::BMCs => "BMCs",
        }
    }
}

impl fmt::Display for RadicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RadicalKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        RadicalKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| AlgebraError::InvalidInput(format!("unknown radical kind `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum JacobsonMethod {
    Semiregular,
    Annihilators,
    StarDifferences,
}

impl JacobsonMethod {
    pub const ALL: [JacobsonMethod; 3] =
        [JacobsonMethod::Semiregular, JacobsonMethod::Annihilators, JacobsonMethod::StarDifferences];

    pub fn name(self) -> &'static str {
        match self {
            JacobsonMethod::Semiregular => "semiregular",
            JacobsonMethod::Annihilators => "annihilators",
            JacobsonMethod::StarDifferences => "star_differences",
        }
    }
}

impl FromStr for JacobsonMethod {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        JacobsonMethod::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| AlgebraError::InvalidInput(format!("unknown method `{s}`")))
    }
}

/// Evidence attached to a radical computation.
#[derive(Clone, Debug)]
pub enum Witness {
    /// A right semiregular right ideal.
    SemiregularIdeal(Subset),
    /// A semimodule and its annihilator.
    Module { module: FiniteSemimodule, annihilator: Subset },
    /// An ideal lying in the radical class.
    RadicalIdeal(Subset),
    /// A congruence with a simple quotient, and its kernel.
    Congruence { partition: Partition, kernel: Subset },
    /// The Jacobson radical of `D(R*)`, as a subset of that ring.
    RingRadical { ring: FiniteHemiring, radical: Subset },
}

#[derive(Clone, Debug)]
pub struct RadicalResult {
    pub kind: RadicalKind,
    pub subset: Subset,
    pub method: &'static str,
    pub witnesses: Vec<Witness>,
}

pub fn radical(r: &FiniteHemiring, kind: RadicalKind) -> Result<RadicalResult> {
    radical_with(r, kind, SimplicityReading::Both)
}

/// As [`radical`], choosing the reading of "simple semiring" for `BMCs`.
pub fn radical_with(r: &FiniteHemiring, kind: RadicalKind, reading: SimplicityReading) -> Result<RadicalResult> {
    match kind {
        RadicalKind::J => jacobson_oracle(r, JacobsonMethod::StarDifferences),
        RadicalKind::Js => js_radical(r),
        RadicalKind::BM => bm_radical(r),
        RadicalKind::BMCs => cs_radical(r, reading),
    }
}

/// Intersection of annihilators; the empty family gives `R`.
fn intersect_annihilators(r: &FiniteHemiring, mods: Vec<FiniteSemimodule>) -> (Subset, Vec<Witness>) {
    let mut subset = Subset::full(r.len());
    let mut witnesses = Vec::new();
    for module in mods {
        let ann = annihilator(&module);
        subset = subset.intersection(&ann);
        witnesses.push(Witness::Module { module, annihilator: ann });
    }
    (subset, witnesses)
}

fn js_radical(r: &FiniteHemiring) -> Result<RadicalResult> {
    let mods = enumerate_simple_semimodules(&Arc::new(r.clone()))?;
    let (subset, witnesses) = intersect_annihilators(r, mods);
    Ok(RadicalResult {
        kind: RadicalKind::Js,
        subset,
        method: "simple_annihilators",
        witnesses,
    })
}

pub fn jacobson_oracle(r: &FiniteHemiring, method: JacobsonMethod) -> Result<RadicalResult> {
    let (subset, witnesses) = match method {
        JacobsonMethod::StarDifferences => {
            let (rstar, proj) = star_quotient(r);
            let d = differences(&rstar);
            let jd = ring_jacobson(&d.ring)?;
            let subset = Subset::from_indices(r.len(), (0..r.len()).filter(|&x| jd.contains(d.xi[proj[x]])));
            (subset, vec![Witness::RingRadical { ring: d.ring, radical: jd }])
        }
        JacobsonMethod::Annihilators => {
            let mods = enumerate_irreducible_semimodules(&Arc::new(r.clone()))?;
            intersect_annihilators(r, mods)
        }
        JacobsonMethod::Semiregular => {
            let ideals = semiregular_right_ideals(r)?;
            let mut union = Subset::zero(r.len());
            for i in &ideals {
                union = union.union(i);
            }
            let subset = ideal_closure(r, &union, Sidedness::Right).subset;
            (subset, ideals.into_iter().map(Witness::SemiregularIdeal).collect())
        }
    };
    Ok(RadicalResult {
        kind: RadicalKind::J,
        subset,
        method: method.name(),
        witnesses,
    })
}

/// `for all i1, i2 in I there are j1, j2 in I with
/// i1 + j1 + i1 j1 + i2 j2 = i2 + j2 + i1 j2 + i2 j1`.
pub fn is_right_semiregular(r: &FiniteHemiring, ideal: &Subset) -> bool {
    let members: Vec<usize> = ideal.iter().collect();
    members.iter().all(|&i1| {
        members.iter().all(|&i2| {
            members.iter().any(|&j1| {
                members.iter().any(|&j2| {
                    let lhs = r.add(r.add(i1, j1), r.add(r.mul(i1, j1), r.mul(i2, j2)));
                    let rhs = r.add(r.add(i2, j2), r.add(r.mul(i1, j2), r.mul(i2, j1)));
                    lhs == rhs
                })
            })
        })
    })
}

/// Every right semiregular right ideal, by scanning all subsets containing 0.
pub fn semiregular_right_ideals(r: &FiniteHemiring) -> Result<Vec<Subset>> {
    let n = r.len();
    if n > MAX_SEMIREGULAR_CARRIER {
        return Err(limit("semiregular subset scan carrier", MAX_SEMIREGULAR_CARRIER as u64));
    }
    let count = 1u64 << (n - 1);
    let mut found: Vec<Subset> = (0..count)
        .into_par_iter()
        .filter_map(|mask| {
            let s = Subset::from_indices(n, std::iter::once(0).chain((1..n).filter(|&i| mask >> (i - 1) & 1 == 1)));
            (is_ideal(r, &s, Sidedness::Right) && is_right_semiregular(r, &s)).then_some(s)
        })
        .collect();
    crate::congruence::sort_subsets(&mut found);
    Ok(found)
}

/// True iff some irreducible semimodule is faithful; returns it.
pub fn is_primitive(r: &FiniteHemiring) -> Result<Option<FiniteSemimodule>> {
    Ok(enumerate_irreducible_semimodules(&Arc::new(r.clone()))?
        .into_iter()
        .find(|m| annihilator(m).is_zero()))
}

#[cfg(test)]
mod tests;
