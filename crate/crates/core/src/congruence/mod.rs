//! Ideals, congruences, quotients and homomorphisms.

mod closure;
mod hom;
mod ideals;
mod partition;
mod quotient;

pub use closure::{
    coatoms, congruence_closure, enumerate_congruences, extend, is_compatible, is_congruence_simple, join,
    principal_congruences,
};
pub use hom::{hom_check, HemiringMap, HomReport};
pub use ideals::{
    bourne_partition, enumerate_ideals, ideal_closure, ideal_power, ideal_product, is_ideal, is_ideal_simple,
    is_subtractive, sort_subsets, subtractive_closure, subtractive_closure_of, Sidedness, SubsetIdeal,
};
pub use partition::{Partition, UnionFind};
pub use quotient::{bourne_quotient, quotient};
pub(crate) use quotient::quotient_unchecked;
