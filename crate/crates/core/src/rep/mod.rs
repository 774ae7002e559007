//! Module categories over a weak Hopf algebra.

pub mod bimodule;
pub mod dual;
pub mod hom;
pub mod module;
pub mod simple;
pub mod tensor;
pub mod twist;
pub mod watts;

pub use bimodule::{
    bimodule_dual, bimodule_invertible, bimodule_tensor, underlying_bimodule, BimoduleInvertibility, BimoduleTensor,
};
pub use dual::{dual_module, left_dual, Dual};
pub use hom::{bimodule_hom, bimodules_isomorphic, hom_space, is_isomorphic, HomSpace, IsoWitness};
pub use module::{BimoduleRep, ModuleRep, Side};
pub use simple::{composition_factors, min_poly, simple_modules};
pub use tensor::{tensor_left, tensor_right, truncated_tensor, unit_object, Truncated};
pub use twist::{s_inv_twist, s_square, s_square_twist, s_twist, twist};
pub use watts::{
    check_hom_adjunction, eilenberg_watts, hom_into_bimodule, is_invertible_object, ObjectInvertibility, WattsVariant,
};
