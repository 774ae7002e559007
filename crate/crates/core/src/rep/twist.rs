use super::module::{BimoduleRep, ModuleRep};
use crate::error::{Error, Result};
use crate::la::Matrix;
use crate::wha::WeakHopfAlgebra;

/// `M^S` for a left module or `^S M` for a right one: the side flips and
/// `b` acts as `S(b)` did.
pub fn s_twist(h: &WeakHopfAlgebra, m: &ModuleRep) -> ModuleRep {
    let mut t = m.pullback(h.antipode_matrix());
    t.side = m.side.flip();
    t
}

/// The same with `S^{-1}`.
pub fn s_inv_twist(h: &WeakHopfAlgebra, m: &ModuleRep) -> Result<ModuleRep> {
    let s_inv = h.antipode_inverse().ok_or_else(|| Error::Unsupported("antipode is not invertible".into()))?;
    let mut t = m.pullback(&s_inv);
    t.side = m.side.flip();
    Ok(t)
}

/// Same side, action composed with `σ`.
pub fn twist(m: &ModuleRep, sigma: &Matrix) -> ModuleRep {
    m.pullback(sigma)
}

/// `H^σ`: regular on the left, `x·b = xσ(b)` on the right.
pub fn right_twisted_regular(h: &WeakHopfAlgebra, sigma: &Matrix) -> BimoduleRep {
    BimoduleRep::twisted(h.algebra(), &Matrix::identity(h.field(), h.dim()), sigma)
}

/// `S²` as a matrix.
pub fn s_square(h: &WeakHopfAlgebra) -> Matrix {
    h.antipode_matrix().mul(h.antipode_matrix())
}

/// `H^{S²}` (right side twisted) and `^{S²}H` (left side twisted).
pub fn s_square_twist(h: &WeakHopfAlgebra) -> (BimoduleRep, BimoduleRep) {
    let s2 = s_square(h);
    let id = Matrix::identity(h.field(), h.dim());
    (BimoduleRep::twisted(h.algebra(), &id, &s2), BimoduleRep::twisted(h.algebra(), &s2, &id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::la::Field;
    use crate::rep::hom::is_isomorphic;
    use crate::rep::module::Side;
    use crate::rep::tensor::unit_object;

    #[test]
    fn twisting_units() {
        for name in ["pairgpd2", "sweedler", "sum:sweedler,fun-c2"] {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            let ht = unit_object(&h, Side::Left);
            let hs = unit_object(&h, Side::Right);
            let t = s_twist(&h, &ht);
            t.check(h.algebra()).unwrap();
            assert!(is_isomorphic(&t, &hs).unwrap().exists, "{name}");
            assert!(is_isomorphic(&s_twist(&h, &hs), &ht).unwrap().exists, "{name}");
            assert_eq!(s_inv_twist(&h, &t).unwrap(), ht);
        }
    }

    #[test]
    fn sweedler_s_square_negates_x() {
        let h = catalog::sweedler(Field::Rational).unwrap();
        let s2 = s_square(&h);
        let x = h.basis_vec(2);
        let minus_x: Vec<_> = x.iter().map(|c| -c).collect();
        assert_eq!(s2.apply(&x), minus_x);
        let (right, left) = s_square_twist(&h);
        right.check(h.algebra(), h.algebra()).unwrap();
        left.check(h.algebra(), h.algebra()).unwrap();
    }
}
