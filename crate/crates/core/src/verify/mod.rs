//! Executable checks of the structure theorems on concrete hemirings, and
//! exhaustive searches for counterexamples to the open problems.

mod checks;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use search::{search_counterexample, Finding, Problem, SearchReport};

use crate::error::{AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
        })
    }
}

/// Outcome of one theorem check on one structure. `details` keeps
/// insertion order; values are human-readable renderings of the computed
/// objects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub theorem_id: String,
    pub structure: String,
    pub status: Status,
    pub details: Vec<(String, String)>,
    /// What failed, when `status` is `Fail`; the violated hypothesis when
    /// `Inapplicable`.
    pub reason: Option<String>,
}

impl VerifyReport {
    fn new(id: &str, r: &FiniteHemiring) -> Self {
        VerifyReport {
            theorem_id: id.to_string(),
            structure: r.name().to_string(),
            status: Status::Pass,
            details: Vec::new(),
            reason: None,
        }
    }

    fn detail(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.details.push((key.into(), value.to_string()));
        self
    }

    fn inapplicable(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Inapplicable;
        self.reason = Some(why.into());
        self
    }

    /// Records a failed claim. The first failure wins the `reason` slot.
    fn require(&mut self, ok: bool, claim: impl Into<String>) {
        if !ok && self.status != Status::Fail {
            self.status = Status::Fail;
            self.reason = Some(claim.into());
        }
    }
}

/// Parameters a check may need beyond the hemiring itself.
#[derive(Clone, Debug)]
pub struct VerifyInput {
    pub hemiring: FiniteHemiring,
    /// Matrix size for the matrix identities; defaults to 2.
    pub n: Option<usize>,
    /// An idempotent (index into the hemiring) for the corner checks; all
    /// nonzero idempotents are tried when absent.
    pub idempotent: Option<usize>,
}

impl VerifyInput {
    pub fn new(hemiring: FiniteHemiring) -> Self {
        VerifyInput {
            hemiring,
            n: None,
            idempotent: None,
        }
    }
}

pub const THEOREM_IDS: &[&str] = &[
    "EX_3_7",
    "COR_3_8",
    "THM_3_10",
    "THM_3_11",
    "THM_3_12",
    "EX_3_13",
    "THM_3_15",
    "COR_3_16",
    "COR_3_17",
    "THM_4_3",
    "COR_4_4",
    "COR_4_7",
    "PROP_4_8",
    "COR_5_2",
    "LEMMA_5_7",
    "COR_5_11_J",
    "COR_5_11_JS",
    "COR_5_11_BM",
    "PROP_5_15",
    "PROP_5_16",
    "THM_5_17",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    Ex37,
    Cor38,
    Thm310,
    Thm311,
    Thm312,
    Ex313,
    Thm315,
    Cor316,
    Cor317,
    Thm43,
    Cor44,
    Cor47,
    Prop48,
    Cor52,
    Lemma57,
    Cor511J,
    Cor511Js,
    Cor511Bm,
    Prop515,
    Prop516,
    Thm517,
}

impl TheoremId {
    const ALL: [TheoremId; 21] = [
        TheoremId::Ex37,
        TheoremId::Cor38,
        TheoremId::Thm310,
        TheoremId::Thm311,
        TheoremId::Thm312,
        TheoremId::Ex313,
        TheoremId::Thm315,
        TheoremId::Cor316,
        TheoremId::Cor317,
        TheoremId::Thm43,
        TheoremId::Cor44,
        TheoremId::Cor47,
        TheoremId::Prop48,
        TheoremId::Cor52,
        TheoremId::Lemma57,
        TheoremId::Cor511J,
        TheoremId::Cor511Js,
        TheoremId::Cor511Bm,
        TheoremId::Prop515,
        TheoremId::Prop516,
        TheoremId::Thm517,
    ];

    pub fn all() -> &'static [TheoremId] {
        &Self::ALL
    }

    pub fn as_str(self) -> &'static str {
        THEOREM_IDS[Self::ALL.iter().position(|&t| t == self).unwrap()]
    }
}

impl FromStr for TheoremId {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        THEOREM_IDS
            .iter()
            .position(|&id| id.eq_ignore_ascii_case(s))
            .map(|i| Self::ALL[i])
            .ok_or_else(|| AlgebraError::UnknownTheoremId(s.to_string()))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Runs one check. Accepts a theorem id as a string for convenience.
pub fn verify(id: &str, input: &VerifyInput) -> Result<VerifyReport> {
    verify_id(id.parse()?, input)
}

pub fn verify_id(id: TheoremId, input: &VerifyInput) -> Result<VerifyReport> {
    use checks::*;
    let r = &input.hemiring;
    let n = input.n.unwrap_or(2);
    let name = id.as_str();
    match id {
        TheoremId::Ex37 => example_3_7(name),
        TheoremId::Cor38 => subdirect_j(name, r),
        TheoremId::Thm310 => congruence_simple_dichotomy(name, r),
        TheoremId::Thm311 => dense_decomposition(name, r),
        TheoremId::Thm312 => regularity_equivalence(name, r),
        TheoremId::Ex313 => example_3_13(name),
        TheoremId::Thm315 => bm_equals_cs(name, r),
        TheoremId::Cor316 => commutative_factors(name, r),
        TheoremId::Cor317 => lattice_ordered_factors(name, r),
        TheoremId::Thm43 => nakayama(name, r),
        TheoremId::Cor44 => hopkins(name, r),
        TheoremId::Cor47 => double_centralizer(name, r),
        TheoremId::Prop48 => js_in_j(name, r),
        TheoremId::Cor52 => zeroic_corners(name, r, n, input.idempotent),
        TheoremId::Lemma57 => bm_semisimple_matrices(name, r, n),
        TheoremId::Cor511J => matrix_identity(name, r, n, crate::RadicalKind::J),
        TheoremId::Cor511Js => matrix_identity(name, r, n, crate::RadicalKind::Js),
        TheoremId::Cor511Bm => matrix_identity(name, r, n, crate::RadicalKind::BM),
        TheoremId::Prop515 => corner_jacobson(name, r, input.idempotent),
        TheoremId::Prop516 => corner_bm_js(name, r, input.idempotent),
        TheoremId::Thm517 => corner_semisimplicity(name, r, input.idempotent),
    }
}

/// Every check in canonical order. A resource limit names the check that hit it.
pub fn verify_all(input: &VerifyInput) -> Result<Vec<VerifyReport>> {
    TheoremId::all()
        .iter()
        .map(|&id| {
            verify_id(id, input).map_err(|e| match e {
                AlgebraError::ResourceLimit { what, limit } => AlgebraError::ResourceLimit {
                    what: format!("{id}: {what}"),
                    limit,
                },
                e => e,
            })
        })
        .collect()
}

/// `{a, b, c}` with element labels.
pub fn render_subset(r: &FiniteHemiring, s: &Subset) -> String {
    format!("{{{}}}", r.subset_labels(s).join(", "))
}
