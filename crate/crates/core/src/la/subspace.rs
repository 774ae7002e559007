use super::echelon::{sparse_from_dense, Echelon};
use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace of `field^ambient` in canonical reduced echelon form, so two
/// subspaces are equal exactly when their bases are entry-wise equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors<I>(field: Field, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator,
        I::Item: AsRef<[Scalar]>,
    {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            let v = v.as_ref();
            assert_eq!(v.len(), ambient, "vector length mismatch");
            if e.is_full() {
                break;
            }
            e.insert(&sparse_from_dense(v));
        }
        Self::from_echelon(&e)
    }

    pub(crate) fn from_echelon(e: &Echelon) -> Self {
        Subspace { field: e.field(), ambient: e.ncols(), rows: e.rref_dense(), pivots: e.pivots() }
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Self::from_vectors(field, ambient, Matrix::identity(field, ambient).columns())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical basis vectors.
    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.rows.clone()
    }

    pub fn vector(&self, i: usize) -> &[Scalar] {
        &self.rows[i]
    }

    /// Basis as the columns of an `ambient x dim` matrix.
    pub fn basis(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.rows)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (ci, row) in c.iter().zip(&self.rows) {
            if ci.is_zero() {
                continue;
            }
            let neg = -ci;
            for (x, y) in r.iter_mut().zip(row) {
                x.add_mul(&neg, y);
            }
        }
        r.iter().all(Scalar::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        o.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient);
        Subspace::from_vectors(self.field, self.ambient, self.rows.iter().chain(&o.rows))
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient);
        // x = A a = B b  <=>  [A | -B] (a, b) = 0
        let (k, l) = (self.dim(), o.dim());
        let sys =
            Matrix::from_fn(
                self.field,
                self.ambient,
                k + l,
                |i, j| {
                    if j < k {
                        self.rows[j][i].clone()
                    } else {
                        -&o.rows[j - k][i]
                    }
                },
            );
        let ker = sys.kernel();
        let vecs: Vec<Vec<Scalar>> = ker
            .rows
            .iter()
            .map(|ab| {
                let mut x = vec![self.field.zero(); self.ambient];
                for (a, row) in ab[..k].iter().zip(&self.rows) {
                    for (xi, r) in x.iter_mut().zip(row) {
                        xi.add_mul(a, r);
                    }
                }
                x
            })
            .collect();
        Subspace::from_vectors(self.field, self.ambient, vecs)
    }

    /// Image of the subspace under `op`.
    pub fn map(&self, op: &Matrix) -> Subspace {
        Subspace::from_vectors(self.field, op.rows(), self.rows.iter().map(|v| op.apply(v)))
    }

    /// Matrix of `op` restricted to this subspace, in canonical coordinates.
    pub fn restrict_operator(&self, op: &Matrix) -> Result<Matrix> {
        if op.rows() != self.ambient || op.cols() != self.ambient {
            return Err(Error::Dimension(format!("operator {}x{} on ambient {}", op.rows(), op.cols(), self.ambient)));
        }
        let mut cols = Vec::with_capacity(self.dim());
        for v in &self.rows {
            let w = op.apply(v);
            cols.push(self.coords(&w).ok_or_else(|| Error::NotInvariant("subspace is not stable under operator".into()))?);
        }
        Ok(Matrix::from_columns(self.field, self.dim(), &cols))
    }

    /// Matrix of a map from this subspace into `target`, given on the ambient spaces.
    pub fn restrict_map(&self, op: &Matrix, target: &Subspace) -> Result<Matrix> {
        let mut cols = Vec::with_capacity(self.dim());
        for v in &self.rows {
            let w = op.apply(v);
            cols.push(target.coords(&w).ok_or_else(|| Error::NotInvariant("map leaves the target subspace".into()))?);
        }
        Ok(Matrix::from_columns(self.field, target.dim(), &cols))
    }

    /// The ambient vector with the given coordinates.
    pub fn embed(&self, c: &[Scalar]) -> Vec<Scalar> {
        let mut x = vec![self.field.zero(); self.ambient];
        for (a, row) in c.iter().zip(&self.rows) {
            for (xi, r) in x.iter_mut().zip(row) {
                xi.add_mul(a, r);
            }
        }
        x
    }
}

/// `field^ambient / R` with basis the standard vectors at non-pivot positions of `R`.
#[derive(Clone, Debug)]
pub struct Quotient {
    relations: Subspace,
    free: Vec<usize>,
}

impl Quotient {
    pub fn new(relations: Subspace) -> Self {
        let mut is_pivot = vec![false; relations.ambient];
        for &p in &relations.pivots {
            is_pivot[p] = true;
        }
        let free = (0..relations.ambient).filter(|&i| !is_pivot[i]).collect();
        Quotient { relations, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (row, &p) in self.relations.rows.iter().zip(&self.relations.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let neg = -&r[p];
            for (x, y) in r.iter_mut().zip(row) {
                x.add_mul(&neg, y);
            }
        }
        self.free.iter().map(|&i| r[i].clone()).collect()
    }

    pub fn lift(&self, c: &[Scalar]) -> Vec<Scalar> {
        let f = self.relations.field;
        let mut x = vec![f.zero(); self.relations.ambient];
        for (ci, &i) in c.iter().zip(&self.free) {
            x[i] = ci.clone();
        }
        x
    }

    /// Projection as a `dim x ambient` matrix.
    pub fn projection(&self) -> Matrix {
        let f = self.relations.field;
        let cols: Vec<Vec<Scalar>> = (0..self.relations.ambient)
            .map(|j| {
                let mut e = vec![f.zero(); self.relations.ambient];
                e[j] = f.one();
                self.project(&e)
            })
            .collect();
        Matrix::from_columns(f, self.dim(), &cols)
    }

    /// Operator induced on the quotient; fails unless `op` preserves the relations.
    pub fn induced_operator(&self, op: &Matrix) -> Result<Matrix> {
        for r in &self.relations.rows {
            if !self.relations.contains(&op.apply(r)) {
                return Err(Error::NotInvariant("operator does not preserve the relations".into()));
            }
        }
        let f = self.relations.field;
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| {
                let mut e = vec![f.zero(); self.dim()];
                e[k] = f.one();
                self.project(&op.apply(&self.lift(&e)))
            })
            .collect();
        Ok(Matrix::from_columns(f, self.dim(), &cols))
    }
}
