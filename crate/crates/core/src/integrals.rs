//! Integral spaces, unimodularity and their invertibility in the module categories.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::la::{Matrix, Scalar, Subspace};
use crate::rep::hom::{hom_space, is_isomorphic, IsoWitness};
use crate::rep::tensor::{unit_object, unit_space};
use crate::rep::{is_invertible_object, s_square, s_twist, twist, ModuleRep, Side};
use crate::report::{format_element, VerificationReport};
use crate::wha::WeakHopfAlgebra;

/// `∫^ℓ` (side `Left`, carrying a right module) or `∫^r` (side `Right`, carrying a left module).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSpace {
    pub side: Side,
    pub space: Subspace,
    pub module: ModuleRep,
}

impl IntegralSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn describe(&self, labels: &[String]) -> Vec<String> {
        self.space.vectors().iter().map(|v| format_element(labels, v)).collect()
    }
}

fn stacked_kernel(f: crate::la::Field, n: usize, conds: impl Iterator<Item = Matrix>) -> Subspace {
    let m = conds.fold(Matrix::zeros(f, 0, n), |acc, c| acc.vstack(&c));
    m.kernel()
}

/// Images `T(1)` of the maps in `Hom(unit, H)`.
fn evaluated_at_one(h: &WeakHopfAlgebra, side: Side) -> Result<Subspace> {
    let unit = unit_object(h, side);
    let reg = ModuleRep::regular(h.algebra(), side);
    let hom = hom_space(&unit, &reg)?;
    let one =
        unit_space(h, side).coords(h.one()).ok_or_else(|| Error::Inconsistent("1 is not in the counital subalgebra".into()))?;
    Ok(Subspace::from_vectors(h.field(), h.dim(), hom.basis().iter().map(|t| t.apply(&one))))
}

fn integrals(h: &WeakHopfAlgebra, side: Side) -> Result<IntegralSpace> {
    let alg = h.algebra();
    let f = h.field();
    let n = h.dim();
    let space = match side {
        // b x = ε_t(b) x
        Side::Left => stacked_kernel(f, n, (0..n).map(|i| alg.left(i).sub(&alg.left_mult(&h.eps_t(&h.basis_vec(i)))))),
        // x b = x ε_s(b)
        Side::Right => stacked_kernel(f, n, (0..n).map(|i| alg.right(i).sub(&alg.right_mult(&h.eps_s(&h.basis_vec(i)))))),
    };
    let via_hom = evaluated_at_one(h, side)?;
    if via_hom != space {
        return Err(Error::Inconsistent(format!(
            "integral space of dimension {} differs from Hom(unit, H) evaluated at 1 (dimension {})",
            space.dim(),
            via_hom.dim()
        )));
    }
    let (mod_side, ops) = match side {
        Side::Left => (Side::Right, alg.rights()),
        Side::Right => (Side::Left, alg.lefts()),
    };
    let action = ops.iter().map(|op| space.restrict_operator(op)).collect::<Result<Vec<_>>>()?;
    let module = ModuleRep::new_unchecked(mod_side, space.dim(), action);
    Ok(IntegralSpace { side, space, module })
}

pub fn left_integrals(h: &WeakHopfAlgebra) -> Result<IntegralSpace> {
    integrals(h, Side::Left)
}

pub fn right_integrals(h: &WeakHopfAlgebra) -> Result<IntegralSpace> {
    integrals(h, Side::Right)
}

#[derive(Clone, Debug, Serialize)]
pub struct Unimodularity {
    pub unimodular: bool,
    /// `∫^ℓ ≅ H_s` as right modules.
    pub left_witness: IsoWitness,
    /// `∫^r ≅ H_t` as left modules.
    pub right_witness: IsoWitness,
}

pub fn unimodularity(h: &WeakHopfAlgebra) -> Result<Unimodularity> {
    let l = left_integrals(h)?;
    let r = right_integrals(h)?;
    let left_witness = is_isomorphic(&l.module, &unit_object(h, Side::Right))?;
    let right_witness = is_isomorphic(&r.module, &unit_object(h, Side::Left))?;
    if left_witness.exists != right_witness.exists {
        return Err(Error::Inconsistent(format!(
            "∫^ℓ ≅ H_s is {} but ∫^r ≅ H_t is {}",
            left_witness.exists, right_witness.exists
        )));
    }
    Ok(Unimodularity { unimodular: left_witness.exists, left_witness, right_witness })
}

pub fn is_unimodular(h: &WeakHopfAlgebra) -> Result<bool> {
    Ok(unimodularity(h)?.unimodular)
}

/// Invertibility of both integral spaces and the `S`-twist relations between them.
pub fn check_integral_invertibility(h: &WeakHopfAlgebra) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("integral_invertibility");
    let l = left_integrals(h)?;
    let rt = right_integrals(h)?;
    r.claim("equal_dimensions", l.dim() == rt.dim(), || format!("{} vs {}", l.dim(), rt.dim()));
    let li = is_invertible_object(h, &l.module)?;
    r.claim("left_integrals_invertible", li.invertible, || "∫^ℓ ⊗̄r (∫^ℓ)* is not H_s".into());
    let ri = is_invertible_object(h, &rt.module)?;
    r.claim("right_integrals_invertible", ri.invertible, || "∫^r ⊗̄ℓ (∫^r)* is not H_t".into());
    let a = is_isomorphic(&s_twist(h, &l.module), &rt.module)?;
    r.claim("s_twist_left_is_right", a.exists, || "^S(∫^ℓ) ≇ ∫^r".into());
    let b = is_isomorphic(&l.module, &s_twist(h, &rt.module))?;
    r.claim("left_is_s_twist_right", b.exists, || "∫^ℓ ≇ (∫^r)^S".into());
    let c = is_isomorphic(&twist(&l.module, &s_square(h)), &l.module)?;
    r.claim("s_square_rigid", c.exists, || "(∫^ℓ)^{S²} ≇ ∫^ℓ".into());
    Ok(r)
}

/// An element as a coordinate vector, for tests and reports.
pub fn element(h: &WeakHopfAlgebra, terms: &[(i64, usize)]) -> Vec<Scalar> {
    let f = h.field();
    let mut v = vec![f.zero(); h.dim()];
    for &(c, i) in terms {
        v[i] = &v[i] + &f.from_i64(c);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::la::Field;

    fn span(h: &WeakHopfAlgebra, vs: &[&[(i64, usize)]]) -> Subspace {
        Subspace::from_vectors(h.field(), h.dim(), vs.iter().map(|t| element(h, t)))
    }

    #[test]
    fn sweedler_integrals() {
        let h = catalog::sweedler(Field::Rational).unwrap();
        assert_eq!(left_integrals(&h).unwrap().space, span(&h, &[&[(1, 2), (1, 3)]]));
        assert_eq!(right_integrals(&h).unwrap().space, span(&h, &[&[(1, 2), (-1, 3)]]));
        assert!(!is_unimodular(&h).unwrap());
    }

    #[test]
    fn group_integrals() {
        let h = catalog::kc2(Field::Rational).unwrap();
        assert_eq!(left_integrals(&h).unwrap().space, span(&h, &[&[(1, 0), (1, 1)]]));
        assert_eq!(right_integrals(&h).unwrap().space, span(&h, &[&[(1, 0), (1, 1)]]));
        assert!(is_unimodular(&h).unwrap());
        let k = catalog::base_field(Field::Rational).unwrap();
        assert_eq!(right_integrals(&k).unwrap().space, span(&k, &[&[(1, 0)]]));
    }

    #[test]
    fn invertibility_on_catalog() {
        for name in catalog::CATALOG {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            let r = check_integral_invertibility(&h).unwrap();
            assert!(r.passed, "{name}: {:?}", r.failed_sections());
        }
    }
}
