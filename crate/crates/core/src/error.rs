use std::fmt;

use thiserror::Error;

/// The axiom families checked by the validators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    ZeroAbsorption,
    /// `(rr')m = r(r'm)`
    ActionAssociativity,
    /// `r(m+m') = rm + rm'`
    ActionAdditiveInModule,
    /// `(r+r')m = rm + r'm`
    ActionAdditiveInScalar,
    /// `r0 = 0 = 0m`
    ActionZero,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::LeftDistributivity => "distributivity",
            Axiom::RightDistributivity => "distributivity (right)",
            Axiom::ZeroAbsorption => "zero absorption",
            Axiom::ActionAssociativity => "(rr')m = r(r'm)",
            Axiom::ActionAdditiveInModule => "r(m+m') = rm+rm'",
            Axiom::ActionAdditiveInScalar => "(r+r')m = rm+r'm",
            Axiom::ActionZero => "r0 = 0 = 0m",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("axiom violated: {axiom} at ({})", witness.join(", "))]
    AxiomViolation {
        axiom: Axiom,
        /// Element labels of the offending instance, in the order the axiom names them.
        witness: Vec<String>,
    },
    #[error("malformed tables: {0}")]
    MalformedTables(String),
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("partition is not compatible with the operations")]
    IncompatiblePartition,
    #[error("element {0} is not idempotent")]
    NotIdempotent(String),
    #[error("monoid is not additively idempotent")]
    NotASemilattice,
    #[error("structure is not a ring: {0}")]
    NotARing(String),
    #[error("operation requires a multiplicative identity")]
    NoIdentity,
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: String, limit: u64 },
    #[error("unknown theorem id {0}")]
    UnknownTheoremId(String),
    #[error("{0}")]
    InvalidInput(String),
}

impl AlgebraError {
    pub(crate) fn limit(what: impl Into<String>, limit: u64) -> Self {
        AlgebraError::ResourceLimit {
            what: what.into(),
            limit,
        }
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

pub(crate) fn limit(what: impl Into<String>, limit: u64) -> AlgebraError {
    AlgebraError::limit(what, limit)
}
