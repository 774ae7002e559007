//! Left-left Hopf modules and the fundamental theorem.

use crate::error::{Error, Result};
use crate::la::{Matrix, Quotient, Scalar, Subspace};
use crate::rep::tensor::{truncated_tensor, unit_space};
use crate::rep::{eilenberg_watts, s_twist, BimoduleRep, ModuleRep, Side, WattsVariant};
use crate::report::VerificationReport;
use crate::wha::WeakHopfAlgebra;

/// A left module with a left coaction `ρ: M → H⊗M`, stored as an
/// `(n·m) × m` matrix with `b_j⊗e_a` at row `j*m + a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModuleRep {
    pub module: ModuleRep,
    pub coaction: Matrix,
}

fn counit_row(h: &WeakHopfAlgebra) -> Matrix {
    Matrix::from_fn(h.field(), 1, h.dim(), |_, j| h.counit_vec()[j].clone())
}

/// `m ↦ 1_1 ⊗ 1_2 m`
fn trivial_coaction(h: &WeakHopfAlgebra, m: &ModuleRep) -> Matrix {
    let f = h.field();
    let n = h.dim();
    let mut out = Matrix::zeros(f, n * m.dim, m.dim);
    for (j, k, c) in h.delta_one_terms() {
        let ej = Matrix::from_columns(f, n, &[h.basis_vec(j)]);
        out.add_scaled(&c, &ej.kron(&m.action[k]));
    }
    out
}

/// `Σ c kron(ρ_A(b_j), ρ_B(b_k))` over `Δ(x)`, for action lists.
fn delta_kron(h: &WeakHopfAlgebra, a: &[Matrix], b: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(h.field(), a[0].rows() * b[0].rows(), a[0].cols() * b[0].cols());
    for (j, k, c) in h.delta_terms(x) {
        out.add_scaled(&c, &a[j].kron(&b[k]));
    }
    out
}

impl HopfModuleRep {
    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// Comodule laws, compatibility with the action, and `ρ(M) ⊆ H⊗̄ℓM`.
    pub fn check(&self, h: &WeakHopfAlgebra) -> VerificationReport {
        let f = h.field();
        let n = h.dim();
        let m = self.dim();
        let c = &self.coaction;
        let mut r = VerificationReport::new("hopf_module");
        let im = Matrix::identity(f, m);
        let lhs = h.delta_matrix().kron(&im).mul(c);
        let rhs = Matrix::identity(f, n).kron(c).mul(c);
        r.claim("coassociative", lhs == rhs, || "(Δ⊗1)ρ ≠ (1⊗ρ)ρ".into());
        let e = counit_row(h).kron(&im).mul(c);
        r.claim("counital", e.is_identity(), || e.to_string());
        let lefts = h.algebra().lefts();
        for i in 0..n {
            let l = c.mul(&self.module.action[i]);
            let rr = delta_kron(h, lefts, &self.module.action, &h.basis_vec(i)).mul(c);
            r.record("compatible", &[i], l == rr, || l.to_string(), || rr.to_string());
        }
        let p = delta_kron(h, lefts, &self.module.action, h.one()).mul(c);
        r.claim("truncated", &p == c, || "coaction leaves Δ(1)(H⊗M)".into());
        r
    }
}

/// `{m : ρ(m) = 1_1 ⊗ 1_2 m}`.
pub fn coinvariants(h: &WeakHopfAlgebra, m: &HopfModuleRep) -> Subspace {
    m.coaction.sub(&trivial_coaction(h, &m.module)).kernel()
}

/// `(H, Δ)` as a Hopf module over itself.
pub fn regular_hopf_module(h: &WeakHopfAlgebra) -> HopfModuleRep {
    HopfModuleRep { module: ModuleRep::regular(h.algebra(), Side::Left), coaction: h.delta_matrix().clone() }
}

/// `H ⊗̄ℓ W` with coaction `Δ⊗1`.
pub fn free_hopf_module(h: &WeakHopfAlgebra, w: &ModuleRep) -> Result<HopfModuleRep> {
    if w.side != Side::Left {
        return Err(Error::InvalidData("free Hopf modules need a left module".into()));
    }
    let f = h.field();
    let n = h.dim();
    let reg = ModuleRep::regular(h.algebra(), Side::Left);
    let t = truncated_tensor(h, &reg, w)?;
    let amb = h.delta_matrix().kron(&Matrix::identity(f, w.dim));
    let d = t.image.dim();
    let block = n * w.dim;
    let mut cols = Vec::with_capacity(d);
    for v in t.image.vectors() {
        let u = amb.apply(&v);
        let mut col = Vec::with_capacity(n * d);
        for j in 0..n {
            let slice = &u[j * block..(j + 1) * block];
            col.extend(t.image.coords(slice).ok_or_else(|| Error::NotInvariant("coaction leaves H⊗̄ℓW".into()))?);
        }
        cols.push(col);
    }
    Ok(HopfModuleRep { module: t.module, coaction: Matrix::from_columns(f, n * d, &cols) })
}

/// The mutually inverse maps `f: H ⊗_{H_s} M^coinv → M` and `g: M → H ⊗_{H_s} M^coinv`.
#[derive(Clone, Debug)]
pub struct FundamentalIsos {
    pub coinvariants: Subspace,
    pub quotient: Quotient,
    pub f: Matrix,
    pub g: Matrix,
    pub report: VerificationReport,
}

pub fn fundamental_isos(h: &WeakHopfAlgebra, m: &HopfModuleRep) -> Result<FundamentalIsos> {
    let fld = h.field();
    let n = h.dim();
    let md = m.dim();
    let alg = h.algebra();
    let mut report = VerificationReport::new("fundamental_theorem");
    report.absorb("", m.check(h));
    let coinv = coinvariants(h, m);
    let c = coinv.dim();
    let hs = unit_space(h, Side::Right);
    let ic = Matrix::identity(fld, c);
    let i_n = Matrix::identity(fld, n);
    let mut rel = Subspace::zero(fld, n * c);
    for s in hs.vectors() {
        let on_coinv = coinv.restrict_operator(&m.module.act(&s))?;
        rel = rel.sum(&alg.right_mult(&s).kron(&ic).sub(&i_n.kron(&on_coinv)).image());
    }
    let quotient = Quotient::new(rel);
    let q = quotient.dim();
    let lift = Matrix::from_columns(fld, n * c, &(0..q).map(|p| quotient.lift(&unit_vec(fld, q, p))).collect::<Vec<_>>());
    let proj = quotient.projection();

    // f(b_i ⊗ coinv_a) = b_i · coinv_a
    let cv = coinv.basis();
    let f_amb = Matrix::from_columns(
        fld,
        md,
        &(0..n)
            .flat_map(|i| {
                let act = m.module.action[i].mul(&cv);
                (0..c).map(move |a| act.column(a))
            })
            .collect::<Vec<_>>(),
    );
    let f = f_amb.mul(&lift);

    // g(m) = m_{[-2]} ⊗ S(m_{[-1]}) m_{[0]}
    let s = h.antipode_matrix();
    let apply_s = (0..n).map(|k| m.module.act(&s.column(k))).fold(Matrix::zeros(fld, md, 0), |acc, a| acc.hstack(&a));
    let y = i_n.kron(&apply_s).mul(&h.delta_matrix().kron(&Matrix::identity(fld, md))).mul(&m.coaction);
    let mut g_cols = Vec::with_capacity(md);
    for col in y.columns() {
        let mut v = Vec::with_capacity(n * c);
        for j in 0..n {
            v.extend(coinv.coords(&col[j * md..(j + 1) * md]).ok_or_else(|| Error::Inconsistent("g leaves H⊗M^coinv".into()))?);
        }
        g_cols.push(quotient.project(&v));
    }
    let g = Matrix::from_columns(fld, q, &g_cols);

    let fg = f.mul(&g);
    report.claim("f_after_g", fg.is_identity(), || fg.to_string());
    let gf = g.mul(&f);
    report.claim("g_after_f", gf.is_identity(), || gf.to_string());
    // actions and coactions on the quotient
    for i in 0..n {
        let qa = quotient.induced_operator(&alg.left(i).kron(&ic))?;
        let l = f.mul(&qa);
        let r = m.module.action[i].mul(&f);
        report.record("f_linear", &[i], l == r, || l.to_string(), || r.to_string());
        let l = g.mul(&m.module.action[i]);
        let r = qa.mul(&g);
        report.record("g_linear", &[i], l == r, || l.to_string(), || r.to_string());
    }
    let q_coaction = i_n.kron(&proj).mul(&h.delta_matrix().kron(&ic)).mul(&lift);
    let l = m.coaction.mul(&f);
    let r = i_n.kron(&f).mul(&q_coaction);
    report.claim("f_colinear", l == r, || format!("{l} vs {r}"));
    let l = q_coaction.mul(&g);
    let r = i_n.kron(&g).mul(&m.coaction);
    report.claim("g_colinear", l == r, || format!("{l} vs {r}"));
    Ok(FundamentalIsos { coinvariants: coinv, quotient, f, g, report })
}

fn unit_vec(f: crate::la::Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// `φ(g⊗w) = g_1 ⊗ g_2 w` on all of `H⊗W`.
pub fn phi_ambient(h: &WeakHopfAlgebra, w: &ModuleRep) -> Matrix {
    let n = h.dim();
    let wd = w.dim;
    let mut phi = Matrix::zeros(h.field(), n * wd, n * wd);
    for i in 0..n {
        for (j, k, c) in h.delta_terms(&h.basis_vec(i)) {
            for x in 0..wd {
                let col = w.action[k].column(x);
                for (y, v) in col.iter().enumerate() {
                    if !v.is_zero() {
                        phi[(j * wd + y, i * wd + x)].add_mul(&c, v);
                    }
                }
            }
        }
    }
    phi
}

/// `φ` from `H ⊗̄r W^S` to `H ⊗̄ℓ W`, checked to be a
/// bimodule isomorphism; the right action of `H ⊗̄r W^S` is checked to be
/// `(g⊗w)*h = gh_1 ⊗ S(h_2)w`.
pub fn free_module_twist_iso(h: &WeakHopfAlgebra, w: &ModuleRep) -> Result<VerificationReport> {
    let n = h.dim();
    let alg = h.algebra();
    let mut r = VerificationReport::new("free_module_twist");
    let reg_l = ModuleRep::regular(alg, Side::Left);
    let reg_r = ModuleRep::regular(alg, Side::Right);
    let ws = s_twist(h, w);
    let a = truncated_tensor(h, &reg_l, w)?;
    let b = truncated_tensor(h, &reg_r, &ws)?;
    let fr: BimoduleRep = eilenberg_watts(h, w, WattsVariant::FR)?;
    let gr: BimoduleRep = eilenberg_watts(h, &ws, WattsVariant::GR)?;
    let phi = phi_ambient(h, w);
    let phi_r = b.image.restrict_map(&phi, &a.image)?;
    let inv = phi_r.is_square() && phi_r.is_invertible()?;
    r.claim("phi_invertible", inv, || format!("{}x{} of rank {}", phi_r.rows(), phi_r.cols(), phi_r.rank()));
    for i in 0..n {
        let l = phi_r.mul(&gr.left[i]);
        let rr = fr.left[i].mul(&phi_r);
        r.record("phi_left_linear", &[i], l == rr, || l.to_string(), || rr.to_string());
        let l = phi_r.mul(&gr.right[i]);
        let rr = fr.right[i].mul(&phi_r);
        r.record("phi_right_linear", &[i], l == rr, || l.to_string(), || rr.to_string());
        let s_act: Vec<Matrix> = (0..n).map(|k| w.act(&h.antipode_matrix().column(k))).collect();
        let formula = b.image.restrict_operator(&delta_kron(h, alg.rights(), &s_act, &h.basis_vec(i)))?;
        r.record("right_action_formula", &[i], formula == gr.right[i], || formula.to_string(), || gr.right[i].to_string());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::la::Field;
    use crate::rep::unit_object;

    #[test]
    fn regular_hopf_module_coinvariants_are_hs() {
        for name in ["kc2", "sweedler", "pairgpd2", "sum:sweedler,fun-c2"] {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            let m = regular_hopf_module(&h);
            assert!(m.check(&h).passed, "{name}");
            assert_eq!(coinvariants(&h, &m), unit_space(&h, Side::Right), "{name}");
            let iso = fundamental_isos(&h, &m).unwrap();
            assert!(iso.report.passed, "{name}: {:?}", iso.report.failed_sections());
        }
    }

    #[test]
    fn free_modules_roundtrip() {
        for name in catalog::CATALOG {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            let mut ws = vec![unit_object(&h, Side::Left), ModuleRep::regular(h.algebra(), Side::Left)];
            ws.extend(crate::rep::simple_modules(h.algebra(), Side::Left).unwrap());
            for w in ws {
                let m = free_hopf_module(&h, &w).unwrap();
                let iso = fundamental_isos(&h, &m).unwrap();
                assert!(iso.report.passed, "{name}: {:?}", iso.report.failed_sections());
                assert_eq!(iso.coinvariants.dim(), w.dim);
                let r = free_module_twist_iso(&h, &w).unwrap();
                assert!(r.passed, "{name}: {:?}", r.failed_sections());
            }
        }
    }

    #[test]
    fn phi_is_natural() {
        for name in ["sweedler", "pairgpd2", "sum:kc2,pairgpd2"] {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            let w1 = unit_object(&h, Side::Left);
            let w2 = ModuleRep::regular(h.algebra(), Side::Left);
            let (p1, p2) = (phi_ambient(&h, &w1), phi_ambient(&h, &w2));
            let i_n = Matrix::identity(h.field(), h.dim());
            let hom = crate::rep::hom_space(&w1, &w2).unwrap();
            assert!(hom.dim() > 0);
            for t in hom.basis() {
                let it = i_n.kron(&t);
                assert_eq!(it.mul(&p1), p2.mul(&it), "{name}");
            }
        }
    }
}
