use serde::Serialize;

use super::data::WeakHopfAlgebra;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::la::{Field, Matrix, Poly, Scalar, Subspace};
use crate::report::format_element;

/// One weak Hopf summand `e·H` with its central idempotent.
#[derive(Clone, Debug)]
pub struct Summand {
    pub algebra: WeakHopfAlgebra,
    pub idempotent: Vec<Scalar>,
    pub space: Subspace,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// Some minimal polynomial had a factor that could not be split over the field.
    pub field_limited: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionSummary {
    pub dims: Vec<usize>,
    pub idempotents: Vec<String>,
    pub field_limited: bool,
}

impl Decomposition {
    pub fn summary(&self, labels: &[String]) -> DecompositionSummary {
        DecompositionSummary {
            dims: self.summands.iter().map(|s| s.algebra.dim()).collect(),
            idempotents: self.summands.iter().map(|s| format_element(labels, &s.idempotent)).collect(),
            field_limited: self.field_limited,
        }
    }
}

/// Coprime factors of a monic polynomial available over the field, each
/// raised high enough to give generalized kernels. Sets `limited` when a
/// factor may be reducible but cannot be split.
fn coprime_factors(p: &Poly, limited: &mut bool) -> Vec<Poly> {
    let f = p.coeffs()[0].field();
    let mut rest = p.monic();
    let mut out = Vec::new();
    let roots = match rest.roots() {
        Some(r) => r,
        None => {
            *limited = true;
            return vec![rest];
        }
    };
    for r in roots {
        let lin = Poly::linear(&r);
        let mut pow = Poly::constant(f.one());
        loop {
            let (q, rem) = rest.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            pow = pow.mul(&lin);
        }
        out.push(pow);
    }
    let rd = rest.degree().unwrap_or(0);
    if rd == 0 {
        return out;
    }
    match f {
        Field::Rational => {
            // without rational roots, degrees 2 and 3 are irreducible
            if rest.squarefree().degree().unwrap_or(0) >= 4 {
                *limited = true;
            }
            out.push(rest);
        }
        Field::Prime(_) => {
            let sq = rest.gcd(&rest.derivative());
            if sq.degree().unwrap_or(0) > 0 {
                *limited = true;
                out.push(rest);
            } else {
                for (d, part) in rest.distinct_degree() {
                    if part.degree().unwrap_or(0) > d {
                        *limited = true;
                    }
                    out.push(part);
                }
            }
        }
    }
    out
}

/// Splits the idempotent `e` using multiplication by `z` on `eZ`.
fn split_idempotent(
    alg: &Algebra,
    center: &Subspace,
    e: &[Scalar],
    z: &[Scalar],
    limited: &mut bool,
) -> Result<Vec<Vec<Scalar>>> {
    let f = alg.field();
    let ez = Subspace::from_vectors(f, alg.dim(), center.vectors().iter().map(|c| alg.mul(e, c)));
    let k = ez.dim();
    if k <= 1 {
        return Ok(vec![e.to_vec()]);
    }
    let op = ez.restrict_operator(&alg.left_mult(z))?;
    let factors = coprime_factors(&crate::rep::min_poly(&op), limited);
    if factors.len() <= 1 {
        return Ok(vec![e.to_vec()]);
    }
    let pieces: Vec<Subspace> = factors.iter().map(|g| g.eval_matrix(&op).pow(k as u32).kernel()).collect();
    let ec = ez.coords(e).ok_or_else(|| Error::Inconsistent("idempotent outside its ideal".into()))?;
    let mut cols = Vec::new();
    for p in &pieces {
        cols.extend(p.vectors());
    }
    let sys = Matrix::from_columns(f, k, &cols);
    let sol = sys.solve(&ec)?.ok_or_else(|| Error::Inconsistent("generalized eigenspaces do not span".into()))?;
    let mut out = Vec::new();
    let mut pos = 0;
    for p in &pieces {
        let mut v = vec![f.zero(); k];
        for (i, b) in p.vectors().iter().enumerate() {
            for (o, x) in v.iter_mut().zip(b) {
                o.add_mul(&sol[pos + i], x);
            }
        }
        pos += p.dim();
        let w = ez.embed(&v);
        if w.iter().any(|c| !c.is_zero()) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Primitive central idempotents over the field, as far as it allows.
pub fn central_idempotents(alg: &Algebra) -> Result<(Vec<Vec<Scalar>>, bool)> {
    let center = alg.center();
    let mut limited = false;
    let mut idems = vec![alg.one().to_vec()];
    'again: loop {
        for (i, e) in idems.iter().enumerate() {
            for z in center.vectors() {
                let parts = split_idempotent(alg, &center, e, &z, &mut limited)?;
                if parts.len() > 1 {
                    idems.splice(i..=i, parts);
                    continue 'again;
                }
            }
        }
        break;
    }
    Ok((idems, limited))
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Restricts the structure to `e·H`.
pub fn summand(h: &WeakHopfAlgebra, e: &[Scalar]) -> Result<Summand> {
    let alg = h.algebra();
    let space = alg.left_mult(e).image();
    let sub_alg = alg.restrict(&space, e)?;
    let vecs = space.vectors();
    let m = vecs.len();
    let mut comult = Vec::with_capacity(m * m * m);
    for v in &vecs {
        let d = h.delta(v);
        // coordinates in the basis vecs⊗vecs
        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(m);
        let n = h.dim();
        // Δ(v) = Σ_a vecs[a] ⊗ w_a; first the columns, then each w_a
        for q in 0..n {
            let col: Vec<Scalar> = (0..n).map(|p| d[p * n + q].clone()).collect();
            rows.push(space.coords(&col).ok_or_else(|| Error::NotInvariant("coproduct leaves the summand".into()))?);
        }
        // rows[q][a]: coefficient of vecs[a] ⊗ e_q
        for a in 0..m {
            let w: Vec<Scalar> = (0..n).map(|q| rows[q][a].clone()).collect();
            let wc = space.coords(&w).ok_or_else(|| Error::NotInvariant("coproduct leaves the summand".into()))?;
            comult.extend(wc);
        }
    }
    let counit = vecs.iter().map(|v| h.counit(v)).collect();
    let antipode = space.restrict_operator(h.antipode_matrix())?;
    let labels = vecs
        .iter()
        .map(|v| {
            let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            if nz.len() == 1 && v[nz[0]].is_one() {
                h.labels()[nz[0]].clone()
            } else {
                format!("({})", format_element(h.labels(), v))
            }
        })
        .collect();
    let algebra = WeakHopfAlgebra::new(sub_alg, labels, comult, counit, antipode)?;
    Ok(Summand { algebra, idempotent: e.to_vec(), space })
}

/// Splits `H` into weak Hopf summands.
pub fn decompose(h: &WeakHopfAlgebra) -> Result<Decomposition> {
    let alg = h.algebra();
    let (prims, field_limited) = central_idempotents(alg)?;
    let r = prims.len();
    let mut parent: Vec<usize> = (0..r).collect();
    for i in 0..r {
        let d = h.delta(&prims[i]);
        for j in 0..r {
            for k in 0..r {
                let fjk: Vec<Scalar> = prims[j].iter().flat_map(|a| prims[k].iter().map(move |b| a * b)).collect();
                if h.tensor_mul(2, &fjk, &d).iter().any(|c| !c.is_zero()) {
                    union(&mut parent, i, j);
                    union(&mut parent, i, k);
                }
            }
        }
        let s = h.antipode(&prims[i]);
        for j in 0..r {
            if alg.mul(&prims[j], &s).iter().any(|c| !c.is_zero()) {
                union(&mut parent, i, j);
            }
        }
    }
    let mut blocks: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for i in 0..r {
        let root = find(&mut parent, i);
        match blocks.iter_mut().find(|(b, _)| *b == root) {
            Some((_, e)) => {
                for (o, x) in e.iter_mut().zip(&prims[i]) {
                    *o = &*o + x;
                }
            }
            None => blocks.push((root, prims[i].clone())),
        }
    }
    let mut summands = blocks.iter().map(|(_, e)| summand(h, e)).collect::<Result<Vec<_>>>()?;
    // order by the first basis index each summand touches
    summands.sort_by_key(|s| s.space.pivots().first().copied().unwrap_or(0));
    Ok(Decomposition { summands, field_limited })
}

/// A basis permutation `π` with `b_i ↦ b'_{π(i)}` carrying every structure
/// tensor of `a` to that of `b`, if one exists. Labels are ignored.
pub fn permutation_isomorphism(a: &WeakHopfAlgebra, b: &WeakHopfAlgebra) -> Option<Vec<usize>> {
    let n = a.dim();
    if n != b.dim() || a.field() != b.field() {
        return None;
    }
    fn consistent(a: &WeakHopfAlgebra, b: &WeakHopfAlgebra, pi: &[usize]) -> bool {
        let m = pi.len();
        let last = m - 1;
        let (sa, sb) = (a.antipode_matrix(), b.antipode_matrix());
        if a.counit_vec()[last] != b.counit_vec()[pi[last]] || a.one()[last] != b.one()[pi[last]] {
            return false;
        }
        for i in 0..m {
            for j in 0..m {
                if sa[(i, j)] != sb[(pi[i], pi[j])] {
                    return false;
                }
                for k in 0..m {
                    if i != last && j != last && k != last {
                        continue;
                    }
                    if a.algebra().c(i, j, k) != b.algebra().c(pi[i], pi[j], pi[k]) || a.d(i, j, k) != b.d(pi[i], pi[j], pi[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(a: &WeakHopfAlgebra, b: &WeakHopfAlgebra, pi: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = a.dim();
        if pi.len() == n {
            return true;
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            pi.push(t);
            used[t] = true;
            if consistent(a, b, pi) && go(a, b, pi, used) {
                return true;
            }
            pi.pop();
            used[t] = false;
        }
        false
    }
    let mut pi = Vec::with_capacity(n);
    let mut used = vec![false; n];
    go(a, b, &mut pi, &mut used).then_some(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::wha::{direct_sum, verify_all};

    #[test]
    fn roundtrip_direct_sums() {
        let q = Field::Rational;
        for (x, y) in [("kc2", "pairgpd2"), ("sweedler", "fun-c2")] {
            let a = catalog::builtin(x, q).unwrap();
            let b = catalog::builtin(y, q).unwrap();
            let s = direct_sum(&a, &b).unwrap();
            let d = decompose(&s).unwrap();
            assert_eq!(d.summands.len(), 2);
            assert!(!d.field_limited);
            assert!(permutation_isomorphism(&d.summands[0].algebra, &a).is_some());
            assert!(permutation_isomorphism(&d.summands[1].algebra, &b).is_some());
            for p in &d.summands {
                assert!(verify_all(&p.algebra).passed);
                assert_eq!(s.antipode(&p.idempotent), p.idempotent);
            }
        }
    }

    #[test]
    fn indecomposables_stay_whole() {
        for name in ["k", "kc2", "sweedler", "pairgpd2", "fun-c2"] {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            let d = decompose(&h).unwrap();
            assert_eq!(d.summands.len(), 1, "{name}");
            assert_eq!(d.summands[0].idempotent, h.one());
        }
    }

    #[test]
    fn permutation_search_rejects_different_algebras() {
        let q = Field::Rational;
        let a = catalog::kc2(q).unwrap();
        let b = catalog::fun_c2(q).unwrap();
        assert!(permutation_isomorphism(&a, &a).is_some());
        assert!(permutation_isomorphism(&a, &b).is_none());
    }
}
