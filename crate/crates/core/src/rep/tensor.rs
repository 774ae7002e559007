use super::module::{ModuleRep, Side};
use crate::error::{Error, Result};
use crate::la::{Field, Matrix, Scalar, Subspace};
use crate::wha::WeakHopfAlgebra;

/// A truncated tensor product together with its position inside `M⊗N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncated {
    pub module: ModuleRep,
    pub image: Subspace,
}

/// `Σ c kron(ρM(b_j), ρN(b_k))` over the terms of `Δ(x)`.
pub fn diagonal_action(h: &WeakHopfAlgebra, m: &ModuleRep, n: &ModuleRep, x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(h.field(), m.dim * n.dim, m.dim * n.dim);
    for (j, k, c) in h.delta_terms(x) {
        out.add_scaled(&c, &m.action[j].kron(&n.action[k]));
    }
    out
}

/// `M ⊗̄ N` on the side of the inputs: the image of the `Δ(1)` idempotent.
pub fn truncated_tensor(h: &WeakHopfAlgebra, m: &ModuleRep, n: &ModuleRep) -> Result<Truncated> {
    if m.side != n.side {
        return Err(Error::InvalidData("tensor factors on different sides".into()));
    }
    let image = diagonal_action(h, m, n, h.one()).image();
    let action =
        (0..h.dim()).map(|i| image.restrict_operator(&diagonal_action(h, m, n, &h.basis_vec(i)))).collect::<Result<Vec<_>>>()?;
    Ok(Truncated { module: ModuleRep::new_unchecked(m.side, image.dim(), action), image })
}

pub fn tensor_left(h: &WeakHopfAlgebra, m: &ModuleRep, n: &ModuleRep) -> Result<ModuleRep> {
    if m.side != Side::Left {
        return Err(Error::InvalidData("tensor_left expects left modules".into()));
    }
    Ok(truncated_tensor(h, m, n)?.module)
}

pub fn tensor_right(h: &WeakHopfAlgebra, m: &ModuleRep, n: &ModuleRep) -> Result<ModuleRep> {
    if m.side != Side::Right {
        return Err(Error::InvalidData("tensor_right expects right modules".into()));
    }
    Ok(truncated_tensor(h, m, n)?.module)
}

/// `ε_t` image for the left unit, `ε_s` image for the right unit.
pub fn unit_space(h: &WeakHopfAlgebra, side: Side) -> Subspace {
    match side {
        Side::Left => h.eps_t_matrix().image(),
        Side::Right => h.eps_s_matrix().image(),
    }
}

/// `H_t` with `h·x = ε_t(hx)`, or `H_s` with `x·h = ε_s(xh)`.
pub fn unit_object(h: &WeakHopfAlgebra, side: Side) -> ModuleRep {
    let space = unit_space(h, side);
    let alg = h.algebra();
    let action = (0..h.dim())
        .map(|i| {
            let op = match side {
                Side::Left => h.eps_t_matrix().mul(alg.left(i)),
                Side::Right => h.eps_s_matrix().mul(alg.right(i)),
            };
            space.restrict_operator(&op).expect("unit space is stable")
        })
        .collect();
    ModuleRep::new_unchecked(side, space.dim(), action)
}

/// Unit constraints as ambient matrices. For the left unit `H_t`:
/// `H_t⊗V → V` is `z⊗v ↦ zv`, `V⊗H_t → V` is `v⊗z ↦ S^{-1}(z)v`.
/// For the right unit `H_s`: `V⊗H_s → V` is `v⊗z ↦ vz`,
/// `H_s⊗V → V` is `z⊗v ↦ vS^{-1}(z)`. Inverses come from `Δ(1)`.
#[derive(Clone, Debug)]
pub struct Unitors {
    /// `unit ⊗ V → V`
    pub l: Matrix,
    /// `V → unit ⊗ V`
    pub l_inv: Matrix,
    /// `V ⊗ unit → V`
    pub r: Matrix,
    /// `V → V ⊗ unit`
    pub r_inv: Matrix,
}

fn column(f: Field, v: &[Scalar]) -> Matrix {
    Matrix::from_columns(f, v.len(), &[v.to_vec()])
}

pub fn unitors(h: &WeakHopfAlgebra, v: &ModuleRep) -> Result<Unitors> {
    let f = h.field();
    let side = v.side;
    let space = unit_space(h, side);
    let t = space.dim();
    let m = v.dim;
    let s_inv = h.antipode_inverse().ok_or_else(|| Error::Unsupported("antipode is not invertible".into()))?;
    let counital = match side {
        Side::Left => h.eps_t_matrix(),
        Side::Right => h.eps_s_matrix(),
    };
    let coords = |x: &[Scalar]| space.coords(x).expect("counital image");
    let zs: Vec<Vec<Scalar>> = space.vectors();
    let direct: Vec<Matrix> = zs.iter().map(|z| v.act(z)).collect();
    let twisted: Vec<Matrix> = zs.iter().map(|z| v.act(&s_inv.apply(z))).collect();
    // unit ⊗ V → V, index a*m + b
    let mut l = Matrix::zeros(f, m, t * m);
    // V ⊗ unit → V, index b*t + a
    let mut r = Matrix::zeros(f, m, m * t);
    let (left_ops, right_ops) = match side {
        Side::Left => (&direct, &twisted),
        Side::Right => (&twisted, &direct),
    };
    for a in 0..t {
        for b in 0..m {
            for row in 0..m {
                l[(row, a * m + b)] = left_ops[a][(row, b)].clone();
                r[(row, b * t + a)] = right_ops[a][(row, b)].clone();
            }
        }
    }
    let mut l_inv = Matrix::zeros(f, t * m, m);
    let mut r_inv = Matrix::zeros(f, m * t, m);
    for (j, k, c) in h.delta_one_terms() {
        let ej = column(f, &coords(&counital.column(j)));
        let ek = column(f, &coords(&counital.column(k)));
        l_inv.add_scaled(&c, &ej.kron(&v.action[k]));
        r_inv.add_scaled(&c, &v.action[j].kron(&ek));
    }
    Ok(Unitors { l, l_inv, r, r_inv })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rep::hom::is_isomorphic;

    #[test]
    fn unit_tensor_dimensions_pair_groupoid() {
        let h = catalog::pair_groupoid(Field::Rational, 2).unwrap();
        for side in [Side::Left, Side::Right] {
            let u = unit_object(&h, side);
            u.check(h.algebra()).unwrap();
            assert_eq!(u.dim, 2);
            let uu = truncated_tensor(&h, &u, &u).unwrap();
            assert_eq!(uu.module.dim, 2);
            assert!(is_isomorphic(&uu.module, &u).unwrap().exists);
        }
    }

    #[test]
    fn group_algebra_tensor_is_plain() {
        let h = catalog::kc2(Field::Rational).unwrap();
        let reg = ModuleRep::regular(h.algebra(), Side::Left);
        let t = tensor_left(&h, &reg, &reg).unwrap();
        assert_eq!(t.dim, 4);
        assert_eq!(t.action[1], reg.action[1].kron(&reg.action[1]));
    }

    #[test]
    fn unitors_invert() {
        for name in ["pairgpd2", "sweedler", "sum:kc2,pairgpd2"] {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            for side in [Side::Left, Side::Right] {
                let v = ModuleRep::regular(h.algebra(), side);
                let u = unitors(&h, &v).unwrap();
                assert!(u.l.mul(&u.l_inv).is_identity(), "{name}");
                assert!(u.r.mul(&u.r_inv).is_identity(), "{name}");
            }
        }
    }
}
