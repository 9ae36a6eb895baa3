//! The Iwahori–Hecke algebra H_n(q) in the T-basis.

mod element;
mod permutation;
mod word;

pub use element::{generator, idempotent_e, multiply, Hecke, HeckeElement};
pub use permutation::{Permutation, MAX_ORDER};
pub use word::{canonical_letters, project_permutation, section_word, BasisWord};
pub(crate) use word::peel;
