use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::echelon::{sparse_from_dense, Echelon};
use super::field::{Field, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Integer entries, mostly for tests and catalog constructors.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Columns given as vectors of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }))
    }

    fn same_shape(&self, o: &Matrix, what: &str) {
        assert!(self.field == o.field, "field mismatch in {what}");
        assert!(
            self.rows == o.rows && self.cols == o.cols,
            "shape mismatch in {what}: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            o.rows,
            o.cols
        );
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        self.same_shape(o, "add");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.same_shape(o, "sub");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// `self += s * o`.
    pub fn add_scaled(&mut self, s: &Scalar, o: &Matrix) {
        self.same_shape(o, "add_scaled");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            a.add_mul(s, b);
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert!(self.field == o.field, "field mismatch in mul");
        assert!(self.cols == o.rows, "shape mismatch in mul: {}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols);
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let orow = &o.data[k * o.cols..(k + 1) * o.cols];
                let crow = &mut out.data[i * o.cols..(i + 1) * o.cols];
                for (c, b) in crow.iter_mut().zip(orow) {
                    c.add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut s = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    s.add_mul(a, b);
                }
                s
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut r = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Kronecker product; row index of (i, k) is i * rows(b) + k.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        assert!(self.field == b.field, "field mismatch in kron");
        let (r, c) = (self.rows * b.rows, self.cols * b.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let v = &b[(k, l)];
                        if !v.is_zero() {
                            out[(i * b.rows + k, j * b.cols + l)] = a * v;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                o[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Matrix::from_fn(self.field, r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    fn row_echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            if e.is_full() {
                break;
            }
            e.insert(&sparse_from_dense(self.row(i)));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().rank()
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> Matrix {
        let rows = self.row_echelon().rref_dense();
        Matrix { field: self.field, rows: rows.len(), cols: self.cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn kernel(&self) -> Subspace {
        let e = self.row_echelon();
        Subspace::from_vectors(self.field, self.cols, e.null_space())
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.rows, self.columns())
    }

    /// Some `x` with `self · x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("right-hand side has length {}, expected {}", b.len(), self.rows)));
        }
        let n = self.cols;
        let mut e = Echelon::new(self.field, n + 1);
        for i in 0..self.rows {
            let mut row = sparse_from_dense(self.row(i));
            if !b[i].is_zero() {
                row.push((n, b[i].clone()));
            }
            e.insert(&row);
        }
        let mut x = vec![self.field.zero(); n];
        for (c, r) in e.rref() {
            if c == n {
                return Ok(None);
            }
            if let Some((_, v)) = r.iter().find(|(k, _)| *k == n) {
                x[c] = v.clone();
            }
        }
        Ok(Some(x))
    }

    /// Inverse if the matrix is invertible.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("inverse of non-square {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut e = Echelon::new(self.field, 2 * n);
        for i in 0..n {
            let mut row = sparse_from_dense(self.row(i));
            row.push((n + i, self.field.one()));
            e.insert(&row);
        }
        let rref = e.rref();
        if rref.len() < n || rref[n - 1].0 >= n {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for (i, (_, r)) in rref.iter().enumerate() {
            for (c, v) in r.iter() {
                if *c >= n {
                    inv[(i, c - n)] = v.clone();
                }
            }
        }
        Ok(Some(inv))
    }

    pub fn is_invertible(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("non-square {}x{} matrix", self.rows, self.cols)));
        }
        Ok(!self.determinant()?.is_zero())
    }

    /// Determinant: fraction-free Bareiss over Q, Gaussian elimination over Fp.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("determinant of non-square {}x{} matrix", self.rows, self.cols)));
        }
        match self.field {
            Field::Rational => Ok(self.bareiss()),
            Field::Prime(_) => Ok(self.gauss_det()),
        }
    }

    fn bareiss(&self) -> Scalar {
        let n = self.rows;
        let f = self.field;
        if n == 0 {
            return f.one();
        }
        // clear denominators row by row; det(A) = det(M) / prod(lcm_i)
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row: Vec<_> = self.row(i).iter().map(|x| x.to_rational().unwrap()).collect();
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            m.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
        }
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = !sign;
                    }
                    None => return f.zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        let mut d = f.from_bigint(&m[n - 1][n - 1]);
        if sign {
            d = -d;
        }
        d * f.from_bigint(&scale).inv().unwrap()
    }

    fn gauss_det(&self) -> Scalar {
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[(i, k)].is_zero()) else {
                return self.field.zero();
            };
            if p != k {
                for j in 0..n {
                    m.data.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let piv = m[(k, k)].clone();
            det *= &piv;
            let inv = piv.inv().unwrap();
            for i in k + 1..n {
                let factor = -(&m[(i, k)] * &inv);
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = m[(k, j)].clone();
                    m[(i, j)].add_mul(&factor, &v);
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
