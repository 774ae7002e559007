use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::module::{BimoduleRep, ModuleRep};
use crate::error::{Error, Result};
use crate::la::echelon::{Echelon, SparseRow};
use crate::la::{Field, Matrix, Scalar, Subspace};

/// Largest Hom-space dimension for which the coefficient grid is searched.
pub const ISO_SEARCH_CAP: usize = 8;

const RANDOM_TRIALS: usize = 8;

/// Basis of `{T : T·src_i = dst_i·T for all i}`, each `T` a `dst × src` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub src_dim: usize,
    pub dst_dim: usize,
    /// Row-major flattenings of the basis maps.
    pub space: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn to_matrix(&self, flat: &[Scalar]) -> Matrix {
        let f = self.space.field();
        Matrix::from_fn(f, self.dst_dim, self.src_dim, |r, c| flat[r * self.src_dim + c].clone())
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.space.vectors().iter().map(|v| self.to_matrix(v)).collect()
    }

    /// Coordinates of a map in this Hom space, if it belongs to it.
    pub fn coords(&self, t: &Matrix) -> Option<Vec<Scalar>> {
        self.space.coords(t.entries())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub exists: bool,
    #[serde(skip)]
    pub map: Option<Matrix>,
}

impl IsoWitness {
    fn none() -> Self {
        IsoWitness { exists: false, map: None }
    }
}

/// Solves the intertwining equations for paired action lists.
pub fn intertwiners(field: Field, src_dim: usize, dst_dim: usize, src: &[Matrix], dst: &[Matrix]) -> Result<HomSpace> {
    if src.len() != dst.len() {
        return Err(Error::Dimension(format!("{} source actions vs {} target actions", src.len(), dst.len())));
    }
    let unknowns = src_dim * dst_dim;
    let mut e = Echelon::new(field, unknowns);
    let mut acc: Vec<Scalar> = vec![field.zero(); unknowns];
    let mut touched: Vec<usize> = Vec::new();
    'outer: for (a, b) in src.iter().zip(dst) {
        if a.rows() != src_dim || b.rows() != dst_dim {
            return Err(Error::Dimension("action matrix does not match module dimension".into()));
        }
        for r in 0..dst_dim {
            for c in 0..src_dim {
                // (T a)[r][c] - (b T)[r][c]
                for k in 0..src_dim {
                    let x = &a[(k, c)];
                    if !x.is_zero() {
                        let u = r * src_dim + k;
                        if acc[u].is_zero() {
                            touched.push(u);
                        }
                        acc[u].add_mul(&field.one(), x);
                    }
                }
                for k in 0..dst_dim {
                    let x = &b[(r, k)];
                    if !x.is_zero() {
                        let u = k * src_dim + c;
                        if acc[u].is_zero() {
                            touched.push(u);
                        }
                        acc[u].add_mul(&-field.one(), x);
                    }
                }
                touched.sort_unstable();
                touched.dedup();
                let row: SparseRow = touched
                    .iter()
                    .filter_map(|&u| {
                        let v = std::mem::replace(&mut acc[u], field.zero());
                        (!v.is_zero()).then_some((u, v))
                    })
                    .collect();
                touched.clear();
                if !row.is_empty() {
                    e.insert(&row);
                    if e.is_full() {
                        break 'outer;
                    }
                }
            }
        }
    }
    let space = Subspace::from_vectors(field, unknowns, e.null_space());
    Ok(HomSpace { src_dim, dst_dim, space })
}

pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace> {
    if m.side != n.side {
        return Err(Error::InvalidData("modules on different sides".into()));
    }
    intertwiners(m.field(), m.dim, n.dim, &m.action, &n.action)
}

pub fn bimodule_hom(m: &BimoduleRep, n: &BimoduleRep) -> Result<HomSpace> {
    intertwiners(m.field(), m.dim, n.dim, &m.actions(), &n.actions())
}

fn invertible(t: &Matrix) -> Result<bool> {
    t.is_invertible()
}

/// Looks for an invertible element of a Hom space.
pub fn find_invertible(hom: &HomSpace) -> Result<IsoWitness> {
    if hom.src_dim != hom.dst_dim {
        return Ok(IsoWitness::none());
    }
    let d = hom.src_dim;
    let f = hom.space.field();
    if d == 0 {
        return Ok(IsoWitness { exists: true, map: Some(Matrix::zeros(f, 0, 0)) });
    }
    let basis = hom.basis();
    let k = basis.len();
    if k == 0 {
        return Ok(IsoWitness::none());
    }
    for t in &basis {
        if invertible(t)? {
            return Ok(IsoWitness { exists: true, map: Some(t.clone()) });
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let t = basis[i].add(&basis[j]);
            if invertible(&t)? {
                return Ok(IsoWitness { exists: true, map: Some(t) });
            }
        }
    }
    // Exact obstructions: a common kernel vector or a deficient joint image.
    let stacked = basis.iter().skip(1).fold(basis[0].clone(), |acc, t| acc.vstack(t));
    if stacked.rank() < d {
        return Ok(IsoWitness::none());
    }
    let joined = basis.iter().skip(1).fold(basis[0].clone(), |acc, t| acc.hstack(t));
    if joined.rank() < d {
        return Ok(IsoWitness::none());
    }
    // Seeded random combinations; each misses with probability ≤ d/1000.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_TRIALS {
        let mut m = Matrix::zeros(f, d, d);
        for b in &basis {
            m.add_scaled(&f.from_i64(rng.gen_range(1..=1000)), b);
        }
        if invertible(&m)? {
            return Ok(IsoWitness { exists: true, map: Some(m) });
        }
    }
    if k > ISO_SEARCH_CAP {
        return Err(Error::Undecided(k));
    }
    let side = match f {
        Field::Rational => d + 1,
        Field::Prime(p) => (d + 1).min(p as usize),
    };
    let mut coeffs = vec![0usize; k];
    loop {
        let mut pos = 0;
        while pos < k {
            coeffs[pos] += 1;
            if coeffs[pos] < side {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
        if pos == k {
            return Ok(IsoWitness::none());
        }
        let mut t = Matrix::zeros(f, d, d);
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                t.add_scaled(&f.from_i64(*c as i64), b);
            }
        }
        if invertible(&t)? {
            return Ok(IsoWitness { exists: true, map: Some(t) });
        }
    }
}

pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<IsoWitness> {
    if m.side != n.side {
        return Err(Error::InvalidData("modules on different sides".into()));
    }
    if m.dim != n.dim {
        return Ok(IsoWitness::none());
    }
    find_invertible(&hom_space(m, n)?)
}

pub fn bimodules_isomorphic(m: &BimoduleRep, n: &BimoduleRep) -> Result<IsoWitness> {
    if m.dim != n.dim {
        return Ok(IsoWitness::none());
    }
    find_invertible(&bimodule_hom(m, n)?)
}

/// Whether `t` intertwines the paired actions and is invertible.
pub fn is_iso_map(t: &Matrix, src: &[Matrix], dst: &[Matrix]) -> Result<bool> {
    if !t.is_square() || !invertible(t)? {
        return Ok(false);
    }
    Ok(src.iter().zip(dst).all(|(a, b)| t.mul(a) == b.mul(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rep::module::Side;

    fn one_dim(h: &crate::WeakHopfAlgebra, values: &[i64]) -> ModuleRep {
        let f = h.field();
        let action = values.iter().map(|&v| Matrix::from_i64(f, &[&[v]])).collect();
        ModuleRep::new(h.algebra(), Side::Left, 1, action).unwrap()
    }

    #[test]
    fn trivial_into_regular_c2() {
        let h = catalog::kc2(Field::Rational).unwrap();
        let triv = one_dim(&h, &[1, 1]);
        let reg = ModuleRep::regular(h.algebra(), Side::Left);
        let hom = hom_space(&triv, &reg).unwrap();
        assert_eq!(hom.dim(), 1);
        let t = &hom.basis()[0];
        assert_eq!(t[(0, 0)], t[(1, 0)]);
        let sign = one_dim(&h, &[1, -1]);
        assert_eq!(hom_space(&triv, &sign).unwrap().dim(), 0);
        assert!(!is_isomorphic(&triv, &sign).unwrap().exists);
    }

    #[test]
    fn identity_is_an_endomorphism() {
        let h = catalog::sweedler(Field::Rational).unwrap();
        let reg = ModuleRep::regular(h.algebra(), Side::Left);
        let hom = hom_space(&reg, &reg).unwrap();
        assert_eq!(hom.dim(), 4);
        assert!(hom.coords(&Matrix::identity(h.field(), 4)).is_some());
        let w = is_isomorphic(&reg, &reg).unwrap();
        assert!(w.exists);
        assert!(is_iso_map(w.map.as_ref().unwrap(), &reg.action, &reg.action).unwrap());
    }

    #[test]
    fn conjugated_module_is_found() {
        let h = catalog::pair_groupoid(Field::Rational, 2).unwrap();
        let reg = ModuleRep::regular(h.algebra(), Side::Left);
        let p = Matrix::from_i64(h.field(), &[&[1, 2, 0, 0], &[0, 1, 0, 3], &[1, 0, 1, 0], &[0, 0, 0, 1]]);
        let pi = p.inverse().unwrap().unwrap();
        let conj = ModuleRep::new_unchecked(Side::Left, 4, reg.action.iter().map(|a| p.mul(a).mul(&pi)).collect());
        let w = is_isomorphic(&reg, &conj).unwrap();
        assert!(w.exists);
        assert!(is_iso_map(w.map.as_ref().unwrap(), &reg.action, &conj.action).unwrap());
    }
}
