//! Exhaustive axiom checks over basis tuples.

use super::data::WeakHopfAlgebra;
use crate::la::{Matrix, Scalar};
use crate::report::{format_element, format_tensor, VerificationReport};

pub const BIALGEBRA_AXIOMS: [&str; 7] =
    ["associativity", "unit", "coassociativity", "counit", "multiplicativity", "weak_unitality", "weak_counit"];

pub const ANTIPODE_AXIOMS: [&str; 7] = [
    "antipode_target",
    "antipode_source",
    "antipode_sandwich",
    "anti_multiplicative",
    "anti_comultiplicative",
    "antipode_counital_s",
    "antipode_counital_t",
];

fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Every weak bialgebra axiom on every basis tuple.
pub fn verify_weak_bialgebra(h: &WeakHopfAlgebra) -> VerificationReport {
    let n = h.dim();
    let f = h.field();
    let alg = h.algebra();
    let labels = h.labels();
    let el = |v: &[Scalar]| format_element(labels, v);
    let t2 = |v: &[Scalar]| format_tensor(labels, 2, v);
    let t3 = |v: &[Scalar]| format_tensor(labels, 3, v);
    let mut r = VerificationReport::new("weak_bialgebra");

    let prods: Vec<Vec<Scalar>> = (0..n * n).map(|ij| alg.mul_basis(ij / n, ij % n)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = alg.right(k).apply(&prods[i * n + j]);
                let rhs = alg.left(i).apply(&prods[j * n + k]);
                r.record("associativity", &[i, j, k], lhs == rhs, || el(&lhs), || el(&rhs));
            }
        }
    }

    for i in 0..n {
        let b = h.basis_vec(i);
        let l = alg.mul(h.one(), &b);
        let rr = alg.mul(&b, h.one());
        r.record("unit", &[i], l == b && rr == b, || format!("{} / {}", el(&l), el(&rr)), || el(&b));
    }

    let deltas: Vec<Vec<Scalar>> = (0..n).map(|i| h.delta(&h.basis_vec(i))).collect();
    for (i, d) in deltas.iter().enumerate() {
        let lhs = h.delta_first(d);
        let rhs = h.delta_second(d);
        r.record("coassociativity", &[i], lhs == rhs, || t3(&lhs), || t3(&rhs));
    }

    let eps_row = Matrix::from_columns(f, 1, &h.counit_vec().iter().map(|c| vec![c.clone()]).collect::<Vec<_>>());
    let id = Matrix::identity(f, n);
    for (i, d) in deltas.iter().enumerate() {
        let b = h.basis_vec(i);
        let left = h.map2(d, &eps_row, &id);
        let right = h.map2(d, &id, &eps_row);
        r.record("counit", &[i, 0], left == b, || el(&left), || el(&b));
        r.record("counit", &[i, 1], right == b, || el(&right), || el(&b));
    }

    for i in 0..n {
        for j in 0..n {
            let lhs = h.delta(&prods[i * n + j]);
            let rhs = h.tensor_mul(2, &deltas[i], &deltas[j]);
            r.record("multiplicativity", &[i, j], lhs == rhs, || t2(&lhs), || t2(&rhs));
        }
    }

    let d1 = h.delta_one();
    let lhs = h.delta_first(&d1);
    let a = kron_vec(&d1, h.one());
    let b = kron_vec(h.one(), &d1);
    let ab = h.tensor_mul(3, &a, &b);
    let ba = h.tensor_mul(3, &b, &a);
    r.record("weak_unitality", &[0], lhs == ab, || t3(&lhs), || t3(&ab));
    r.record("weak_unitality", &[1], lhs == ba, || t3(&lhs), || t3(&ba));

    // E[a][b] = ε(b_a b_b)
    let e = Matrix::from_fn(f, n, n, |a, b| h.counit(&prods[a * n + b]));
    let triple = |i: usize, j: usize, k: usize| {
        let mut s = f.zero();
        for (m, c) in prods[i * n + j].iter().enumerate() {
            s.add_mul(c, &e[(m, k)]);
        }
        s
    };
    for j in 0..n {
        let dj = Matrix::from_fn(f, n, n, |p, q| h.d(j, p, q).clone());
        let first = e.mul(&dj).mul(&e);
        let second = e.mul(&dj.transpose()).mul(&e);
        for i in 0..n {
            for k in 0..n {
                let lhs = triple(i, j, k);
                let a = &first[(i, k)];
                let b = &second[(i, k)];
                r.record("weak_counit", &[i, j, k], &lhs == a && &lhs == b, || lhs.to_string(), || format!("{a} / {b}"));
            }
        }
    }
    r
}

/// The antipode axioms, anti-(co)multiplicativity and compatibility with
/// the counital maps.
pub fn verify_antipode(h: &WeakHopfAlgebra) -> VerificationReport {
    let n = h.dim();
    let f = h.field();
    let alg = h.algebra();
    let labels = h.labels();
    let el = |v: &[Scalar]| format_element(labels, v);
    let t2 = |v: &[Scalar]| format_tensor(labels, 2, v);
    let s = h.antipode_matrix();
    let id = Matrix::identity(f, n);
    let mut r = VerificationReport::new("antipode");

    let deltas: Vec<Vec<Scalar>> = (0..n).map(|i| h.delta(&h.basis_vec(i))).collect();
    for (i, d) in deltas.iter().enumerate() {
        let lhs = h.contract2(&h.map2(d, &id, s));
        let rhs = h.eps_t(&h.basis_vec(i));
        r.record("antipode_target", &[i], lhs == rhs, || el(&lhs), || el(&rhs));
    }
    for (i, d) in deltas.iter().enumerate() {
        let lhs = h.contract2(&h.map2(d, s, &id));
        let rhs = h.eps_s(&h.basis_vec(i));
        r.record("antipode_source", &[i], lhs == rhs, || el(&lhs), || el(&rhs));
    }
    let s_cols = s.columns();
    for i in 0..n {
        let d2 = h.delta2(&h.basis_vec(i));
        let mut lhs = alg.zero_vec();
        for (abc, c) in d2.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b, cc) = (abc / (n * n), (abc / n) % n, abc % n);
            let p = alg.mul(&alg.mul(&s_cols[a], &h.basis_vec(b)), &s_cols[cc]);
            for (o, x) in lhs.iter_mut().zip(&p) {
                o.add_mul(c, x);
            }
        }
        let rhs = s_cols[i].clone();
        r.record("antipode_sandwich", &[i], lhs == rhs, || el(&lhs), || el(&rhs));
    }

    for i in 0..n {
        for j in 0..n {
            let lhs = h.antipode(&alg.mul_basis(i, j));
            let rhs = alg.mul(&s_cols[j], &s_cols[i]);
            r.record("anti_multiplicative", &[i, j], lhs == rhs, || el(&lhs), || el(&rhs));
        }
    }
    let s1 = h.antipode(h.one());
    r.record("anti_multiplicative", &[], s1 == h.one(), || el(&s1), || el(h.one()));

    for (i, d) in deltas.iter().enumerate() {
        let lhs = h.delta(&s_cols[i]);
        let ss = h.map2(d, s, s);
        let rhs: Vec<Scalar> = (0..n * n).map(|jk| ss[(jk % n) * n + jk / n].clone()).collect();
        r.record("anti_comultiplicative", &[i, 0], lhs == rhs, || t2(&lhs), || t2(&rhs));
        let a = h.counit(&s_cols[i]);
        let b = h.counit(&h.basis_vec(i));
        r.record("anti_comultiplicative", &[i, 1], a == b, || a.to_string(), || b.to_string());
    }

    for i in 0..n {
        let lhs = h.antipode(&h.eps_s(&h.basis_vec(i)));
        let rhs = h.eps_t(&s_cols[i]);
        r.record("antipode_counital_s", &[i], lhs == rhs, || el(&lhs), || el(&rhs));
    }
    for i in 0..n {
        let lhs = h.antipode(&h.eps_t(&h.basis_vec(i)));
        let rhs = h.eps_s(&s_cols[i]);
        r.record("antipode_counital_t", &[i], lhs == rhs, || el(&lhs), || el(&rhs));
    }
    r
}

/// Both suites in one report.
pub fn verify_all(h: &WeakHopfAlgebra) -> VerificationReport {
    let mut r = VerificationReport::new("axioms");
    r.absorb("", verify_weak_bialgebra(h));
    r.absorb("", verify_antipode(h));
    r
}
