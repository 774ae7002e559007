//! Exact computations with finite-dimensional weak Hopf algebras.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod corruption;
pub mod error;
pub mod hopf_module;
pub mod integrals;
pub mod io;
pub mod la;
pub mod nakayama;
pub mod rep;
pub mod report;
pub mod wha;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use la::{Field, Matrix, Scalar, Subspace};
pub use report::VerificationReport;
pub use wha::WeakHopfAlgebra;
