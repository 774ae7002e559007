//! Incremental reduced row echelon form over sparse rows.
//!
//! Rows are inserted one at a time and kept fully reduced, so the rank is
//! known after every insertion and tall systems stop as soon as the rank
//! saturates.

use super::field::{Field, Scalar};

pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
    acc: Vec<Scalar>,
}

pub fn sparse_from_dense(v: &[Scalar]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn entry(row: &SparseRow, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

/// `a + coef * b` on sorted sparse rows.
fn axpy(a: &SparseRow, coef: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, coef * &b[j].1));
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            v.add_mul(coef, &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_row: vec![None; ncols], acc: vec![field.zero(); ncols] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    fn reduce_into_acc(&mut self, row: &SparseRow) {
        for (c, v) in row {
            self.acc[*c] = v.clone();
        }
        for (c, v) in row {
            if let Some(r) = self.pivot_row[*c] {
                let neg = -v;
                for (j, w) in &self.rows[r] {
                    self.acc[*j].add_mul(&neg, w);
                }
            }
        }
    }

    fn drain_acc(&mut self, support_hint: &SparseRow) -> SparseRow {
        // every nonzero of the reduced row lies in the support of the input
        // or of one of the pivot rows that were subtracted
        let mut cols: Vec<usize> = support_hint.iter().map(|e| e.0).collect();
        for (c, _) in support_hint {
            if let Some(r) = self.pivot_row[*c] {
                cols.extend(self.rows[r].iter().map(|e| e.0));
            }
        }
        cols.sort_unstable();
        cols.dedup();
        let zero = self.field.zero();
        let mut out = Vec::new();
        for c in cols {
            let v = std::mem::replace(&mut self.acc[c], zero.clone());
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        out
    }

    /// Reduces `row` against the current basis without inserting it.
    pub fn reduce(&mut self, row: &SparseRow) -> SparseRow {
        self.reduce_into_acc(row);
        self.drain_acc(row)
    }

    /// Inserts a row; returns true when it was independent of the basis.
    pub fn insert(&mut self, row: &SparseRow) -> bool {
        if self.is_full() || row.is_empty() {
            return false;
        }
        let mut red = self.reduce(row);
        if red.is_empty() {
            return false;
        }
        let p = red[0].0;
        let inv = red[0].1.inv().expect("nonzero pivot");
        for e in red.iter_mut() {
            e.1 = &e.1 * &inv;
        }
        for r in self.rows.iter_mut() {
            if let Some(v) = entry(r, p) {
                let neg = -v;
                *r = axpy(r, &neg, &red);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(red);
        true
    }

    pub fn insert_dense(&mut self, row: &[Scalar]) -> bool {
        self.insert(&sparse_from_dense(row))
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// The reduced rows ordered by pivot column.
    pub fn rref(&self) -> Vec<(usize, &SparseRow)> {
        (0..self.ncols).filter_map(|c| self.pivot_row[c].map(|r| (c, &self.rows[r]))).collect()
    }

    /// Dense reduced rows ordered by pivot.
    pub fn rref_dense(&self) -> Vec<Vec<Scalar>> {
        self.rref()
            .into_iter()
            .map(|(_, r)| {
                let mut d = vec![self.field.zero(); self.ncols];
                for (c, v) in r {
                    d[*c] = v.clone();
                }
                d
            })
            .collect()
    }

    /// Basis of the solution space of `row · x = 0` for all inserted rows.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref();
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivot_row[f].is_some() {
                continue;
            }
            let mut x = vec![self.field.zero(); self.ncols];
            x[f] = self.field.one();
            for (c, r) in &rref {
                if let Some(v) = entry(r, f) {
                    x[*c] = -v;
                }
            }
            out.push(x);
        }
        out
    }
}
