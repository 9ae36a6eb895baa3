pub mod error;
pub mod field;
pub mod hecke;
pub mod intertwiners;
pub mod linalg;
pub mod markov;
pub mod model;
pub mod report;
pub mod scalar;
pub mod special;
pub mod suites;
pub mod young;
pub mod surd;

pub use error::{Error, Result};
pub use field::{Field, Involution, Ring};
pub use hecke::{Hecke, HeckeElement, Permutation};
pub use scalar::{LaurentPoly, RationalScalar};
pub use surd::Surd;
