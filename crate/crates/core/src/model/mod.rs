//! The model Hecke symmetry on tensor powers of a d-dimensional space.

mod checks;
mod epsilon;
mod generators;
mod image;
mod operator;
mod spectrum;

pub use checks::{check_selfadjointness, selfadjoint_residual, verify_permutation_recovery, ModelPoint};
pub use epsilon::{epsilon_generator, epsilon_prime, epsilon_rep, epsilon_with};
pub use generators::{eq_from, eq_operator, gq_operator, LocalGenerator};
pub use image::image_algebra_dimension;
pub use operator::{digits_of, flip, index_of, TensorOperator, TensorVector};
pub use spectrum::{spectrum_at, spectrum_with_probes};
