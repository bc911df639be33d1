//! Exact computations on finite hemirings, semirings and their semimodules:
//! ideals and congruences, quotients, matrix and endomorphism constructions,
//! the Jacobson-Bourne, simple-semimodule and Brown-McCoy radicals, and
//! exhaustive generation of small structures.

pub mod catalog;
pub mod classify;
pub mod congruence;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod hemiring;
pub mod iso;
pub mod limits;
pub mod monoid;
pub mod radicals;
pub mod semimodule;
pub mod structure;
pub mod subset;
pub mod verify;

pub use classify::{classify, zeroid, ClassificationFlags};
pub use congruence::{HemiringMap, Partition, Sidedness, SubsetIdeal};
pub use error::{AlgebraError, Axiom, Result};
pub use hemiring::{FiniteHemiring, RawHemiring};
pub use limits::Limits;
pub use monoid::FiniteMonoid;
pub use radicals::{RadicalKind, RadicalResult};
pub use semimodule::{FiniteSemimodule, RawSemimodule, SemimoduleReport};
pub use structure::{Additive, Signature};
pub use subset::Subset;
