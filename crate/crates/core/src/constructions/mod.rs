//! Derived structures: matrices, products, star quotients, differences,
//! endomorphism semirings and corners.

mod corner;
mod differences;
mod endo;
mod matrix;
mod product;
mod star;

pub use corner::{corner, corner_image, full_idempotents, is_full_idempotent, Corner};
pub use differences::{difference_classes, difference_labels, differences, Differences};
pub use endo::{
    additive_endomorphisms, density_check, density_check_maps, e_endomorphism, endomorphism_hemiring, f_m_maps,
    hemiring_of_maps, DensityReport, EndomorphismHemiring, Endomorphism,
};
pub use matrix::{decode_matrix, encode_matrix, matrix_hemiring, matrix_subset, matrix_unit};
pub use product::direct_product;
pub use star::{star_partition, star_quotient};
