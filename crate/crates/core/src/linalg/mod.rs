//! Exact linear algebra over prime fields.

mod field;
mod matrix;
mod system;

pub use field::{FieldSpec, Fp};
pub use matrix::Matrix;
pub use system::{BlockId, Coordinates, LinearSystem, Term};
