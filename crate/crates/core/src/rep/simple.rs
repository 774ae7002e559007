use super::hom::is_isomorphic;
use super::module::{spin, ModuleRep, Side};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::la::{Matrix, Poly, Scalar, Subspace};

/// Minimal polynomial of a square matrix.
pub fn min_poly(a: &Matrix) -> Poly {
    let f = a.field();
    let n = a.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Matrix::identity(f, n).entries().to_vec()];
    let mut p = Matrix::identity(f, n);
    loop {
        p = p.mul(a);
        let target = p.entries().to_vec();
        let sys = Matrix::from_columns(f, n * n, &powers);
        if let Some(c) = sys.solve(&target).expect("consistent shapes") {
            let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
            coeffs.push(f.one());
            return Poly::new(f, coeffs);
        }
        powers.push(target);
    }
}

enum Split {
    Proper(Subspace),
    Irreducible,
    Unknown,
}

/// Candidate elements: basis elements, pairwise sums and pairwise products.
fn candidates(alg: &Algebra) -> Vec<Vec<Scalar>> {
    let n = alg.dim();
    let f = alg.field();
    let mut out: Vec<Vec<Scalar>> = (0..n).map(|i| alg.basis_vec(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = alg.basis_vec(i);
            v[j] = f.one();
            out.push(v.clone());
            v[j] = f.from_i64(2);
            out.push(v);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let p = alg.mul_basis(i, j);
            if p.iter().any(|c| !c.is_zero()) {
                out.push(p);
            }
        }
    }
    out
}

fn split(alg: &Algebra, m: &ModuleRep) -> Split {
    let f = m.field();
    let d = m.dim;
    if d <= 1 {
        return Split::Irreducible;
    }
    let transposed: Vec<Matrix> = m.action.iter().map(|a| a.transpose()).collect();
    for x in candidates(alg) {
        let a = m.act(&x);
        let Some(roots) = min_poly(&a).roots() else { continue };
        for lambda in roots {
            let nmat = a.sub(&Matrix::identity(f, d).scale(&lambda));
            let ker = nmat.kernel();
            for v in ker.vectors() {
                let s = spin(f, d, &[v], &m.action);
                if s.dim() < d {
                    return Split::Proper(s);
                }
            }
            let coker = nmat.transpose().kernel();
            for w in coker.vectors() {
                let s = spin(f, d, &[w], &transposed);
                if s.dim() < d {
                    // annihilator of a proper dual submodule
                    return Split::Proper(s.basis().transpose().kernel());
                }
            }
            if ker.dim() == 1 {
                return Split::Irreducible;
            }
        }
    }
    Split::Unknown
}

/// Composition factors of a module, each certified irreducible.
pub fn composition_factors(alg: &Algebra, m: &ModuleRep) -> Result<Vec<ModuleRep>> {
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    match split(alg, m) {
        Split::Irreducible => Ok(vec![m.clone()]),
        Split::Proper(s) => {
            let mut out = composition_factors(alg, &m.submodule(&s)?)?;
            out.extend(composition_factors(alg, &m.quotient(&s)?)?);
            Ok(out)
        }
        Split::Unknown => Err(Error::Unsupported(format!("could not certify irreducibility of a {}-dimensional module", m.dim))),
    }
}

/// One representative of each simple module on the given side, by dimension.
pub fn simple_modules(alg: &Algebra, side: Side) -> Result<Vec<ModuleRep>> {
    let factors = composition_factors(alg, &ModuleRep::regular(alg, side))?;
    let mut out: Vec<ModuleRep> = Vec::new();
    for s in factors {
        let mut seen = false;
        for t in &out {
            if is_isomorphic(&s, t)?.exists {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.dim);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::la::Field;

    fn dims(name: &str) -> Vec<usize> {
        let h = catalog::builtin(name, Field::Rational).unwrap();
        let s = simple_modules(h.algebra(), Side::Left).unwrap();
        for m in &s {
            m.check(h.algebra()).unwrap();
        }
        s.iter().map(|m| m.dim).collect()
    }

    #[test]
    fn simples_of_catalog() {
        assert_eq!(dims("k"), vec![1]);
        assert_eq!(dims("kc2"), vec![1, 1]);
        assert_eq!(dims("fun-c2"), vec![1, 1]);
        assert_eq!(dims("sweedler"), vec![1, 1]);
        assert_eq!(dims("pairgpd2"), vec![2]);
        assert_eq!(dims("pairgpd3"), vec![3]);
        assert_eq!(dims("sum:kc2,pairgpd2"), vec![1, 1, 2]);
    }

    #[test]
    fn min_poly_of_projection() {
        let f = Field::Rational;
        let p = Matrix::from_i64(f, &[&[1, 1], &[0, 0]]);
        assert_eq!(min_poly(&p).degree(), Some(2));
        assert_eq!(min_poly(&Matrix::identity(f, 3)).degree(), Some(1));
    }
}
