use serde::Serialize;

use super::hom::{bimodules_isomorphic, intertwiners, IsoWitness};
use super::module::{BimoduleRep, ModuleRep};
use super::tensor::unit_space;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::la::{Matrix, Quotient, Scalar, Subspace};
use crate::wha::WeakHopfAlgebra;

/// `U1 ⊗_A U2` with the quotient presenting it inside `U1⊗U2`.
#[derive(Clone, Debug)]
pub struct BimoduleTensor {
    pub bimodule: BimoduleRep,
    pub quotient: Quotient,
}

/// Quotient of `U1⊗U2` by `u·a⊗v − u⊗a·v` over the basis of the middle algebra.
pub fn bimodule_tensor(u1: &BimoduleRep, u2: &BimoduleRep) -> Result<BimoduleTensor> {
    if u1.right.len() != u2.left.len() {
        return Err(Error::Dimension("middle algebras differ".into()));
    }
    let f = u1.field();
    let (d1, d2) = (u1.dim, u2.dim);
    let i1 = Matrix::identity(f, d1);
    let i2 = Matrix::identity(f, d2);
    let mut rel = Subspace::zero(f, d1 * d2);
    for (r, l) in u1.right.iter().zip(&u2.left) {
        rel = rel.sum(&r.kron(&i2).sub(&i1.kron(l)).image());
    }
    let quotient = Quotient::new(rel);
    let left = u1.left.iter().map(|a| quotient.induced_operator(&a.kron(&i2))).collect::<Result<Vec<_>>>()?;
    let right = u2.right.iter().map(|b| quotient.induced_operator(&i1.kron(b))).collect::<Result<Vec<_>>>()?;
    Ok(BimoduleTensor { bimodule: BimoduleRep::new_unchecked(quotient.dim(), left, right), quotient })
}

/// `U* = Hom_A(U, A)` as left modules, with `(a·f)(u) = f(u·a)` and `(f·b)(u) = f(u)b`.
pub fn bimodule_dual(alg: &Algebra, u: &BimoduleRep) -> Result<BimoduleRep> {
    let f = alg.field();
    let hom = intertwiners(f, u.dim, alg.dim(), &u.left, alg.lefts())?;
    let basis = hom.basis();
    let d = basis.len();
    let coords = |t: &Matrix| hom.coords(t).expect("stays in Hom");
    let left = u
        .right
        .iter()
        .map(|a| Matrix::from_columns(f, d, &basis.iter().map(|t| coords(&t.mul(a))).collect::<Vec<_>>()))
        .collect();
    let right = alg
        .rights()
        .iter()
        .map(|b| Matrix::from_columns(f, d, &basis.iter().map(|t| coords(&b.mul(t))).collect::<Vec<_>>()))
        .collect();
    Ok(BimoduleRep::new_unchecked(d, left, right))
}

#[derive(Clone, Debug, Serialize)]
pub struct BimoduleInvertibility {
    pub invertible: bool,
    /// `U ⊗_A U* ≅ A`
    pub left: IsoWitness,
    /// `U* ⊗_A U ≅ A`
    pub right: IsoWitness,
    #[serde(skip)]
    pub inverse: BimoduleRep,
}

/// Two-sided invertibility with the candidate inverse `Hom_A(U, A)`.
pub fn bimodule_invertible(alg: &Algebra, u: &BimoduleRep) -> Result<BimoduleInvertibility> {
    let dual = bimodule_dual(alg, u)?;
    let reg = BimoduleRep::regular(alg);
    let left = bimodules_isomorphic(&bimodule_tensor(u, &dual)?.bimodule, &reg)?;
    let right = bimodules_isomorphic(&bimodule_tensor(&dual, u)?.bimodule, &reg)?;
    Ok(BimoduleInvertibility { invertible: left.exists && right.exists, left, right, inverse: dual })
}

/// The underlying `H_t`-bimodule of a left module: `H_t` acts on the left by
/// restriction and on the right by `m*x = S^{-1}(x)m`.
pub fn underlying_bimodule(h: &WeakHopfAlgebra, m: &ModuleRep) -> Result<(Algebra, BimoduleRep)> {
    let ht = unit_space(h, super::module::Side::Left);
    let alg = h.algebra().restrict(&ht, h.one())?;
    let s_inv = h.antipode_inverse().ok_or_else(|| Error::Unsupported("antipode is not invertible".into()))?;
    let zs: Vec<Vec<Scalar>> = ht.vectors();
    let left = zs.iter().map(|z| m.act(z)).collect();
    let right = zs.iter().map(|z| m.act(&s_inv.apply(z))).collect();
    Ok((alg, BimoduleRep::new_unchecked(m.dim, left, right)))
}
