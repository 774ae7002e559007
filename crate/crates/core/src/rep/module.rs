use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::la::echelon::{sparse_from_dense, Echelon};
use crate::la::{Field, Matrix, Quotient, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A one-sided module: `action[i]` is the matrix of `b_i` acting on column
/// vectors. Left modules satisfy `ρ(a)ρ(b) = ρ(ab)`, right modules `ρ(a)ρ(b) = ρ(ba)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    pub side: Side,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

fn combine(field: Field, dim: usize, mats: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(field, dim, dim);
    for (c, a) in x.iter().zip(mats) {
        m.add_scaled(c, a);
    }
    m
}

/// Checks `ρ(1) = id` and the multiplication law on basis pairs.
fn check_action(alg: &Algebra, side: Side, dim: usize, action: &[Matrix]) -> Result<()> {
    let n = alg.dim();
    if action.len() != n {
        return Err(Error::Dimension(format!("{} action matrices for algebra of dimension {n}", action.len())));
    }
    if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::Dimension(format!("action matrix is not {dim}x{dim}")));
    }
    let f = alg.field();
    if !combine(f, dim, action, alg.one()).is_identity() {
        return Err(Error::InvalidData("unit does not act as the identity".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = action[i].mul(&action[j]);
            let p = match side {
                Side::Left => alg.mul_basis(i, j),
                Side::Right => alg.mul_basis(j, i),
            };
            if lhs != combine(f, dim, action, &p) {
                return Err(Error::InvalidData(format!("action is not multiplicative at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// Smallest subspace containing `seeds` and stable under `ops`.
pub fn spin(field: Field, dim: usize, seeds: &[Vec<Scalar>], ops: &[Matrix]) -> Subspace {
    let mut e = Echelon::new(field, dim);
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for s in seeds {
        if e.insert(&sparse_from_dense(s)) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if e.is_full() {
            break;
        }
        for op in ops {
            let w = op.apply(&v);
            if e.insert(&sparse_from_dense(&w)) {
                queue.push(w);
            }
        }
    }
    Subspace::from_echelon(&e)
}

impl ModuleRep {
    pub fn new(alg: &Algebra, side: Side, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        check_action(alg, side, dim, &action)?;
        Ok(ModuleRep { side, dim, action })
    }

    /// Skips validation; for constructions that are correct by design.
    pub fn new_unchecked(side: Side, dim: usize, action: Vec<Matrix>) -> Self {
        ModuleRep { side, dim, action }
    }

    pub fn check(&self, alg: &Algebra) -> Result<()> {
        check_action(alg, self.side, self.dim, &self.action)
    }

    pub fn field(&self) -> Field {
        self.action[0].field()
    }

    /// The action of an arbitrary element.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim, &self.action, x)
    }

    pub fn regular(alg: &Algebra, side: Side) -> Self {
        let action = match side {
            Side::Left => alg.lefts().to_vec(),
            Side::Right => alg.rights().to_vec(),
        };
        ModuleRep { side, dim: alg.dim(), action }
    }

    pub fn zero(alg: &Algebra, side: Side) -> Self {
        ModuleRep { side, dim: 0, action: vec![Matrix::zeros(alg.field(), 0, 0); alg.dim()] }
    }

    pub fn submodule(&self, sub: &Subspace) -> Result<ModuleRep> {
        let action = self.action.iter().map(|a| sub.restrict_operator(a)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleRep { side: self.side, dim: sub.dim(), action })
    }

    pub fn quotient(&self, sub: &Subspace) -> Result<ModuleRep> {
        let q = Quotient::new(sub.clone());
        let action = self.action.iter().map(|a| q.induced_operator(a)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleRep { side: self.side, dim: q.dim(), action })
    }

    pub fn direct_sum(&self, o: &ModuleRep) -> ModuleRep {
        assert_eq!(self.side, o.side);
        let (m, n) = (self.dim, o.dim);
        let f = self.field();
        let action = self
            .action
            .iter()
            .zip(&o.action)
            .map(|(a, b)| {
                Matrix::from_fn(f, m + n, m + n, |i, j| {
                    if i < m && j < m {
                        a[(i, j)].clone()
                    } else if i >= m && j >= m {
                        b[(i - m, j - m)].clone()
                    } else {
                        f.zero()
                    }
                })
            })
            .collect();
        ModuleRep { side: self.side, dim: m + n, action }
    }

    /// Same side, action precomposed with an algebra endomorphism `σ`.
    pub fn pullback(&self, sigma: &Matrix) -> ModuleRep {
        let action = (0..self.action.len()).map(|i| self.act(&sigma.column(i))).collect();
        ModuleRep { side: self.side, dim: self.dim, action }
    }

    /// Submodule generated by the given vectors.
    pub fn generated(&self, seeds: &[Vec<Scalar>]) -> Subspace {
        spin(self.field(), self.dim, seeds, &self.action)
    }

    /// Restriction to a subalgebra given by the columns of `emb`.
    pub fn restrict_scalars(&self, emb: &Matrix) -> ModuleRep {
        let action = (0..emb.cols()).map(|i| self.act(&emb.column(i))).collect();
        ModuleRep { side: self.side, dim: self.dim, action }
    }
}

/// A bimodule over `(A, B)`: `left[i]` is `a_i` acting on the left,
/// `right[j]` is `b_j` acting on the right. Both act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleRep {
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl BimoduleRep {
    pub fn new(a: &Algebra, b: &Algebra, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        let m = BimoduleRep { dim, left, right };
        m.check(a, b)?;
        Ok(m)
    }

    pub fn new_unchecked(dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Self {
        BimoduleRep { dim, left, right }
    }

    pub fn check(&self, a: &Algebra, b: &Algebra) -> Result<()> {
        check_action(a, Side::Left, self.dim, &self.left)?;
        check_action(b, Side::Right, self.dim, &self.right)?;
        for (i, l) in self.left.iter().enumerate() {
            for (j, r) in self.right.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::InvalidData(format!("left and right actions do not commute at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.left[0].field()
    }

    pub fn left_module(&self) -> ModuleRep {
        ModuleRep::new_unchecked(Side::Left, self.dim, self.left.clone())
    }

    pub fn right_module(&self) -> ModuleRep {
        ModuleRep::new_unchecked(Side::Right, self.dim, self.right.clone())
    }

    /// `H` as an `(H, H)`-bimodule.
    pub fn regular(alg: &Algebra) -> Self {
        BimoduleRep { dim: alg.dim(), left: alg.lefts().to_vec(), right: alg.rights().to_vec() }
    }

    /// `^τ H^σ`: `a·x·b = τ(a) x σ(b)` for linear endomorphisms `τ`, `σ`.
    pub fn twisted(alg: &Algebra, tau: &Matrix, sigma: &Matrix) -> Self {
        let n = alg.dim();
        let left = (0..n).map(|i| alg.left_mult(&tau.column(i))).collect();
        let right = (0..n).map(|i| alg.right_mult(&sigma.column(i))).collect();
        BimoduleRep { dim: n, left, right }
    }

    /// Both actions, left first; used for Hom and isomorphism computations.
    pub fn actions(&self) -> Vec<Matrix> {
        self.left.iter().chain(&self.right).cloned().collect()
    }

    pub fn substructure(&self, sub: &Subspace) -> Result<BimoduleRep> {
        let left = self.left.iter().map(|a| sub.restrict_operator(a)).collect::<Result<Vec<_>>>()?;
        let right = self.right.iter().map(|a| sub.restrict_operator(a)).collect::<Result<Vec<_>>>()?;
        Ok(BimoduleRep { dim: sub.dim(), left, right })
    }
}
