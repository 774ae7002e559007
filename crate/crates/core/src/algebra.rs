//! Finite-dimensional unital associative algebras by structure constants.

use crate::error::{Error, Result};
use crate::la::{Field, Matrix, Scalar, Subspace};

/// `b_i b_j = sum_k mult[(i*n + j)*n + k] b_k`, with cached left and right
/// regular representations.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.dim == o.dim && self.mult == o.mult && self.unit == o.unit
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Rejects the zero algebra and data whose `unit` is not a two-sided unit.
    pub fn new(field: Field, dim: usize, mult: Vec<Scalar>, unit: Vec<Scalar>) -> Result<Self> {
        let alg = Algebra::new_unchecked(field, dim, mult, unit)?;
        let lu = alg.left_mult(&alg.unit);
        let ru = alg.right_mult(&alg.unit);
        if !lu.is_identity() || !ru.is_identity() {
            return Err(Error::InvalidData("unit vector is not a two-sided unit".into()));
        }
        Ok(alg)
    }

    /// Shape checks only; the axioms are left to the verifier.
    pub fn new_unchecked(field: Field, dim: usize, mult: Vec<Scalar>, unit: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidData("the zero algebra is not unital".into()));
        }
        if mult.len() != dim * dim * dim {
            return Err(Error::Dimension(format!("multiplication has {} constants, expected {}", mult.len(), dim * dim * dim)));
        }
        if unit.len() != dim {
            return Err(Error::Dimension(format!("unit has length {}, expected {dim}", unit.len())));
        }
        if mult.iter().chain(&unit).any(|s| s.field() != field) {
            return Err(Error::InvalidData(format!("scalar outside field {field}")));
        }
        let n = dim;
        let left: Vec<Matrix> = (0..n).map(|i| Matrix::from_fn(field, n, n, |k, j| mult[(i * n + j) * n + k].clone())).collect();
        let right: Vec<Matrix> = (0..n).map(|j| Matrix::from_fn(field, n, n, |k, i| mult[(i * n + j) * n + k].clone())).collect();
        Ok(Algebra { field, dim, mult, unit, left, right })
    }

    /// Builds from a closure giving `b_i b_j` as a coordinate vector.
    pub fn from_products(
        field: Field,
        dim: usize,
        unit: Vec<Scalar>,
        mut prod: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = prod(i, j);
                assert_eq!(v.len(), dim);
                mult.extend(v);
            }
        }
        Algebra::new(field, dim, mult, unit)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult_constants(&self) -> &[Scalar] {
        &self.mult
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn one(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    /// Left multiplication by `b_i`.
    pub fn left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// Right multiplication by `b_i`.
    pub fn right(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn lefts(&self) -> &[Matrix] {
        &self.left
    }

    pub fn rights(&self) -> &[Matrix] {
        &self.right
    }

    fn combine(&self, x: &[Scalar], mats: &[Matrix]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (c, a) in x.iter().zip(mats) {
            m.add_scaled(c, a);
        }
        m
    }

    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        self.combine(x, &self.left)
    }

    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        self.combine(x, &self.right)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vec();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                let base = (i * self.dim + j) * self.dim;
                for (k, o) in out.iter_mut().enumerate() {
                    o.add_mul(&s, &self.mult[base + k]);
                }
            }
        }
        out
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let base = (i * self.dim + j) * self.dim;
        self.mult[base..base + self.dim].to_vec()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// Elements commuting with every basis element.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            let d = self.left[i].sub(&self.right[i]);
            for r in 0..n {
                rows.push(d.row(r).to_vec());
            }
        }
        Matrix::from_rows(self.field, rows).unwrap().kernel()
    }

    /// The algebra with reversed multiplication.
    pub fn opposite(&self) -> Algebra {
        Algebra::from_products(self.field, self.dim, self.unit.clone(), |i, j| self.mul_basis(j, i)).unwrap()
    }

    /// `A ⊗ B` with `(a⊗b)(a'⊗b') = aa' ⊗ bb'`; basis index of `a_i⊗b_j` is `i*dim(B) + j`.
    pub fn tensor(&self, b: &Algebra) -> Algebra {
        let (n, m) = (self.dim, b.dim);
        let mut unit = Vec::with_capacity(n * m);
        for x in &self.unit {
            for y in &b.unit {
                unit.push(x * y);
            }
        }
        Algebra::from_products(self.field, n * m, unit, |p, q| {
            let (i, j) = (p / m, p % m);
            let (k, l) = (q / m, q % m);
            let u = self.mul_basis(i, k);
            let v = b.mul_basis(j, l);
            let mut out = Vec::with_capacity(n * m);
            for x in &u {
                for y in &v {
                    out.push(x * y);
                }
            }
            out
        })
        .unwrap()
    }

    /// The algebra structure on a multiplicatively closed subspace with its own unit.
    pub fn restrict(&self, sub: &Subspace, unit: &[Scalar]) -> Result<Algebra> {
        let m = sub.dim();
        let vecs = sub.vectors();
        let unit_c = sub.coords(unit).ok_or_else(|| Error::NotInvariant("unit outside subspace".into()))?;
        let mut mult = Vec::with_capacity(m * m * m);
        for a in &vecs {
            for b in &vecs {
                let p = self.mul(a, b);
                mult.extend(
                    sub.coords(&p).ok_or_else(|| Error::NotInvariant("subspace not closed under multiplication".into()))?,
                );
            }
        }
        Algebra::new(self.field, m, mult, unit_c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn c2() -> Algebra {
        Algebra::from_products(Q, 2, vec![Q.one(), Q.zero()], |i, j| {
            let mut v = vec![Q.zero(); 2];
            v[(i + j) % 2] = Q.one();
            v
        })
        .unwrap()
    }

    #[test]
    fn rejects_degenerate() {
        assert!(Algebra::new(Q, 0, vec![], vec![]).is_err());
        assert!(Algebra::new(Q, 1, vec![Q.one()], vec![Q.from_i64(2)]).is_err());
        assert!(Algebra::new(Q, 1, vec![Q.zero()], vec![Q.one()]).is_err());
    }

    #[test]
    fn regular_representations() {
        let a = c2();
        assert_eq!(a.left(1), &Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]));
        assert_eq!(a.center().dim(), 2);
        assert!(a.is_commutative());
        let t = a.tensor(&a.opposite());
        assert_eq!(t.dim(), 4);
        assert_eq!(t.one(), &[Q.one(), Q.zero(), Q.zero(), Q.zero()][..]);
    }

    #[test]
    fn matrix_algebra_center_is_scalars() {
        // 2x2 matrix units e_ij, index 2i + j
        let a = Algebra::from_products(Q, 4, vec![Q.one(), Q.zero(), Q.zero(), Q.one()], |p, q| {
            let mut v = vec![Q.zero(); 4];
            if p % 2 == q / 2 {
                v[2 * (p / 2) + q % 2] = Q.one();
            }
            v
        })
        .unwrap();
        assert_eq!(a.center().vectors(), vec![vec![Q.one(), Q.zero(), Q.zero(), Q.one()]]);
        assert!(!a.is_commutative());
    }
}
