use super::module::{ModuleRep, Side};
use super::tensor::{diagonal_action, truncated_tensor, unit_object, unit_space, unitors, Truncated};
use crate::error::{Error, Result};
use crate::la::{Matrix, Scalar};
use crate::report::VerificationReport;
use crate::wha::WeakHopfAlgebra;

/// A dual object with its structure maps, all on canonical bases.
///
/// Left modules: `ev: V*⊗̄V → H_t`, `coev: H_t → V⊗̄V*`.
/// Right modules: `ev: V⊗̄V* → H_s`, `coev: H_s → V*⊗̄V`.
#[derive(Clone, Debug)]
pub struct Dual {
    pub module: ModuleRep,
    pub ev_domain: Truncated,
    pub coev_target: Truncated,
    pub ev: Matrix,
    pub coev: Matrix,
    pub report: VerificationReport,
}

/// `ρ*(h) = ρ(S(h))^T` on the same side.
pub fn dual_module(h: &WeakHopfAlgebra, v: &ModuleRep) -> ModuleRep {
    let s = h.antipode_matrix();
    let action = (0..h.dim()).map(|i| v.act(&s.column(i)).transpose()).collect();
    ModuleRep::new_unchecked(v.side, v.dim, action)
}

/// Evaluation on the ambient tensor space, valued in unit coordinates.
fn evaluation(h: &WeakHopfAlgebra, v: &ModuleRep) -> Matrix {
    let f = h.field();
    let n = h.dim();
    let m = v.dim;
    let space = unit_space(h, v.side);
    let terms = h.delta_one_terms();
    let mut cols = Vec::with_capacity(m * m);
    // left: φ_a⊗v_b at a*m+b ↦ φ_a(1_1 v_b) 1_2
    // right: v_b⊗φ_a at b*m+a ↦ 1_1 φ_a(v_b 1_2)
    for x in 0..m {
        for y in 0..m {
            let (a, b) = match v.side {
                Side::Left => (x, y),
                Side::Right => (y, x),
            };
            let mut w = vec![f.zero(); n];
            for (j, k, c) in &terms {
                let (act, out) = match v.side {
                    Side::Left => (*j, *k),
                    Side::Right => (*k, *j),
                };
                let e = &v.action[act][(a, b)];
                if !e.is_zero() {
                    w[out].add_mul(c, e);
                }
            }
            cols.push(space.coords(&w).expect("evaluation lands in the unit"));
        }
    }
    Matrix::from_columns(f, space.dim(), &cols)
}

pub fn left_dual(h: &WeakHopfAlgebra, v: &ModuleRep) -> Result<Dual> {
    let f = h.field();
    let m = v.dim;
    let side = v.side;
    let dual = dual_module(h, v);
    let unit = unit_object(h, side);
    let space = unit_space(h, side);
    let zs = space.vectors();
    let (ev_domain, coev_target) = match side {
        Side::Left => (truncated_tensor(h, &dual, v)?, truncated_tensor(h, v, &dual)?),
        Side::Right => (truncated_tensor(h, v, &dual)?, truncated_tensor(h, &dual, v)?),
    };
    let (cl, cr) = match side {
        Side::Left => (v, &dual),
        Side::Right => (&dual, v),
    };
    let e_amb = evaluation(h, v);
    let uv = unitors(h, v)?;
    let ud = unitors(h, &dual)?;
    let id = Matrix::identity(f, m);
    let z_ops: Vec<Matrix> = zs.iter().map(|z| diagonal_action(h, cl, cr, z)).collect();
    let coev_amb = |x: &[Scalar]| {
        let cols: Vec<Vec<Scalar>> = z_ops.iter().map(|op| op.apply(x)).collect();
        Matrix::from_columns(f, m * m, &cols)
    };
    let zigzag_a = |c: &Matrix| match side {
        Side::Left => uv.r.mul(&id.kron(&e_amb)).mul(&c.kron(&id)).mul(&uv.l_inv),
        Side::Right => uv.l.mul(&e_amb.kron(&id)).mul(&id.kron(c)).mul(&uv.r_inv),
    };
    let zigzag_b = |c: &Matrix| match side {
        Side::Left => ud.l.mul(&e_amb.kron(&id)).mul(&id.kron(c)).mul(&ud.r_inv),
        Side::Right => ud.r.mul(&id.kron(&e_amb)).mul(&c.kron(&id)).mul(&ud.l_inv),
    };

    // Linear system in x = coev(1) ∈ image: zigzag A plus H-linearity of z ↦ z·x.
    let img = &coev_target.image;
    let q = img.dim();
    let alg = h.algebra();
    let counital = match side {
        Side::Left => h.eps_t_matrix(),
        Side::Right => h.eps_s_matrix(),
    };
    let mut lin_ops: Vec<Matrix> = Vec::new();
    for i in 0..h.dim() {
        let bi = diagonal_action(h, cl, cr, &h.basis_vec(i));
        for (z, zop) in zs.iter().zip(&z_ops) {
            let prod = match side {
                Side::Left => alg.mul(&h.basis_vec(i), z),
                Side::Right => alg.mul(z, &h.basis_vec(i)),
            };
            let moved = diagonal_action(h, cl, cr, &counital.apply(&prod));
            lin_ops.push(moved.sub(&bi.mul(zop)));
        }
    }
    let mut columns = Vec::with_capacity(q);
    for p in 0..q {
        let x = img.vector(p).to_vec();
        let mut col = zigzag_a(&coev_amb(&x)).entries().to_vec();
        for op in &lin_ops {
            col.extend(op.apply(&x));
        }
        columns.push(col);
    }
    let rows = m * m + lin_ops.len() * m * m;
    let mut rhs = id.entries().to_vec();
    rhs.resize(rows, f.zero());
    let sys = Matrix::from_columns(f, rows, &columns);
    let y = sys.solve(&rhs)?.ok_or_else(|| Error::Inconsistent("no coevaluation satisfies the first zigzag identity".into()))?;
    let x = img.embed(&y);
    let c_amb = coev_amb(&x);

    let mut report = VerificationReport::new("dual");
    let ev = e_amb.mul(&ev_domain.image.basis());
    let coev_cols: Vec<Vec<Scalar>> = c_amb.columns().iter().map(|c| img.coords(c).expect("coev lands in image")).collect();
    let coev = Matrix::from_columns(f, q, &coev_cols);
    for i in 0..h.dim() {
        let l = ev.mul(&ev_domain.module.action[i]);
        let r = unit.action[i].mul(&ev);
        report.record("ev_linear", &[i], l == r, || l.to_string(), || r.to_string());
        let l = coev.mul(&unit.action[i]);
        let r = coev_target.module.action[i].mul(&coev);
        report.record("coev_linear", &[i], l == r, || l.to_string(), || r.to_string());
    }
    let a = zigzag_a(&c_amb);
    report.claim("zigzag_a", a.is_identity(), || a.to_string());
    let b = zigzag_b(&c_amb);
    report.claim("zigzag_b", b.is_identity(), || b.to_string());
    Ok(Dual { module: dual, ev_domain, coev_target, ev, coev, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::la::Field;
    use crate::rep::hom::is_isomorphic;

    #[test]
    fn rigidity_holds_on_catalog() {
        for name in ["k", "kc2", "sweedler", "pairgpd2", "sum:kc2,pairgpd2"] {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            for side in [Side::Left, Side::Right] {
                for v in [ModuleRep::regular(h.algebra(), side), unit_object(&h, side)] {
                    let d = left_dual(&h, &v).unwrap();
                    assert!(d.report.passed, "{name} {side:?}: {:?}", d.report.failed_sections());
                }
            }
        }
    }

    #[test]
    fn unit_is_self_dual() {
        let h = catalog::pair_groupoid(Field::Rational, 3).unwrap();
        for side in [Side::Left, Side::Right] {
            let u = unit_object(&h, side);
            assert!(is_isomorphic(&dual_module(&h, &u), &u).unwrap().exists);
        }
    }
}
