//! Exact linear algebra over Q and prime fields.

pub mod echelon;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod subspace;

pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use poly::Poly;
pub use subspace::{Quotient, Subspace};
