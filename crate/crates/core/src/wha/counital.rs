use super::data::WeakHopfAlgebra;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::la::{Matrix, Scalar, Subspace};
use crate::report::{format_element, format_tensor, VerificationReport};

/// The counital maps and their images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounitalData {
    pub eps_s: Matrix,
    pub eps_t: Matrix,
    pub hs: Subspace,
    pub ht: Subspace,
}

/// `{h : Δ(h) = 1_1 ⊗ h 1_2}` when `source`, else `{h : Δ(h) = 1_1 h ⊗ 1_2}`.
fn characterized(h: &WeakHopfAlgebra, source: bool) -> Subspace {
    let n = h.dim();
    let alg = h.algebra();
    let terms = h.delta_one_terms();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut v = h.delta(&h.basis_vec(i));
            for (j, k, c) in &terms {
                if source {
                    let p = alg.mul_basis(i, *k);
                    for (m, x) in p.iter().enumerate() {
                        v[j * n + m].add_mul(&-c, x);
                    }
                } else {
                    let p = alg.mul_basis(*j, i);
                    for (m, x) in p.iter().enumerate() {
                        v[m * n + k].add_mul(&-c, x);
                    }
                }
            }
            v
        })
        .collect();
    Matrix::from_columns(h.field(), n * n, &cols).kernel()
}

/// Counital maps with their images, cross-checked against the coproduct
/// characterizations of `H_s` and `H_t`.
pub fn counital(h: &WeakHopfAlgebra) -> Result<CounitalData> {
    let eps_s = h.eps_s_matrix().clone();
    let eps_t = h.eps_t_matrix().clone();
    let hs = eps_s.image();
    let ht = eps_t.image();
    if characterized(h, true) != hs {
        return Err(Error::Inconsistent("image of ε_s differs from {h : Δ(h) = 1_1 ⊗ h1_2}".into()));
    }
    if characterized(h, false) != ht {
        return Err(Error::Inconsistent("image of ε_t differs from {h : Δ(h) = 1_1h ⊗ 1_2}".into()));
    }
    Ok(CounitalData { eps_s, eps_t, hs, ht })
}

/// `H_s` as an algebra on its canonical basis.
pub fn source_algebra(h: &WeakHopfAlgebra) -> Result<(Algebra, Subspace)> {
    let hs = h.eps_s_matrix().image();
    Ok((h.algebra().restrict(&hs, h.one())?, hs))
}

/// `H_t` as an algebra on its canonical basis.
pub fn target_algebra(h: &WeakHopfAlgebra) -> Result<(Algebra, Subspace)> {
    let ht = h.eps_t_matrix().image();
    Ok((h.algebra().restrict(&ht, h.one())?, ht))
}

/// Structural identities of the counital maps.
pub fn check_counital(h: &WeakHopfAlgebra) -> VerificationReport {
    let n = h.dim();
    let labels = h.labels();
    let alg = h.algebra();
    let el = |v: &[Scalar]| format_element(labels, v);
    let mut r = VerificationReport::new("counital");
    let es = h.eps_s_matrix();
    let et = h.eps_t_matrix();
    r.claim("eps_s_idempotent", es.mul(es) == *es, || format!("ε_s∘ε_s = {}", es.mul(es)));
    r.claim("eps_t_idempotent", et.mul(et) == *et, || format!("ε_t∘ε_t = {}", et.mul(et)));
    let one = h.one().to_vec();
    let s1 = h.eps_s(&one);
    let t1 = h.eps_t(&one);
    r.record("eps_of_one", &[0], s1 == one, || el(&s1), || el(&one));
    r.record("eps_of_one", &[1], t1 == one, || el(&t1), || el(&one));
    match counital(h) {
        Ok(c) => {
            let s_ht = c.ht.map(h.antipode_matrix());
            let s_hs = c.hs.map(h.antipode_matrix());
            r.claim("antipode_swaps_counital", s_ht == c.hs && s_hs == c.ht, || "S(H_t) ≠ H_s or S(H_s) ≠ H_t".into());
            for (a, x) in c.hs.vectors().iter().enumerate() {
                for (b, y) in c.ht.vectors().iter().enumerate() {
                    let xy = alg.mul(x, y);
                    let yx = alg.mul(y, x);
                    r.record("counital_commute", &[a, b], xy == yx, || el(&xy), || el(&yx));
                }
            }
        }
        Err(e) => r.claim("characterization", false, || e.to_string()),
    }
    // h_1 ⊗ ε_t(h_2) = 1_1 h ⊗ 1_2
    let id = Matrix::identity(h.field(), n);
    let d1 = h.delta_one();
    for i in 0..n {
        let b = h.basis_vec(i);
        let lhs = h.map2(&h.delta(&b), &id, et);
        let rhs = h.map2(&d1, &alg.right(i).clone(), &id);
        r.record("delta_eps_t", &[i], lhs == rhs, || format_tensor(labels, 2, &lhs), || format_tensor(labels, 2, &rhs));
    }
    r
}

/// `S^{-1}` when the antipode is bijective.
pub fn antipode_bijective(h: &WeakHopfAlgebra) -> Option<Matrix> {
    h.antipode_inverse()
}

/// Smallest `k ≥ 1` with `S^k = id`, searched up to `bound`.
pub fn antipode_order(h: &WeakHopfAlgebra, bound: u32) -> Option<u32> {
    let s = h.antipode_matrix();
    let mut p = s.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(s);
    }
    None
}
