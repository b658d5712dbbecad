//! Exact computations with finite-dimensional modules, curved dg modules over graded algebras,
//! curved mixed complexes and matrix factorizations, over prime fields.
pub mod algebra;
pub mod corpus;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod mf;
pub mod model;
pub mod module;
pub mod oracle;
pub mod scenario;
pub mod tame;
pub mod verify;

pub use algebra::FinAlgebra;
pub use error::{Error, Result};
pub use linalg::{FieldSpec, Fp, Matrix};
pub use module::FinModule;
