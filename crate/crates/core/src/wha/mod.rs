//! Weak Hopf algebras: data, axioms, counital maps, sums and decomposition.

pub mod counital;
pub mod data;
pub mod decompose;
pub mod sum;
pub mod verify;

pub use counital::{antipode_bijective, antipode_order, counital, CounitalData};
pub use data::WeakHopfAlgebra;
pub use decompose::{decompose, permutation_isomorphism, Decomposition, Summand};
pub use sum::direct_sum;
pub use verify::{verify_all, verify_antipode, verify_weak_bialgebra};
