//! Brute-force reference implementations over `BigRational`, sharing no code
//! with the engine beyond the file format.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use weak_hopf::io::AlgebraFile;

type Q = BigRational;
type V = Vec<Q>;

pub const DEFINING_AXIOMS: [&str; 10] = [
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "multiplicativity",
    "weak_unitality",
    "weak_counit",
    "antipode_target",
    "antipode_source",
    "antipode_sandwich",
];

pub struct Dense {
    pub n: usize,
    m: Vec<Q>,
    d: Vec<Q>,
    pub one: V,
    eps: V,
    /// `s[i][j]`: coefficient of `b_i` in `S(b_j)`.
    s: Vec<V>,
}

fn q(s: &str) -> Q {
    s.parse().unwrap_or_else(|_| panic!("bad scalar {s:?}"))
}

impl Dense {
    pub fn from_file(f: &AlgebraFile) -> Self {
        assert_eq!(f.field, "Q");
        let n = f.dim;
        let mut m = vec![Q::zero(); n * n * n];
        let mut d = vec![Q::zero(); n * n * n];
        for (i, j, k, c) in &f.mult {
            m[(i * n + j) * n + k] = q(c);
        }
        for (i, j, k, c) in &f.comult {
            d[(i * n + j) * n + k] = q(c);
        }
        let mut s = vec![vec![Q::zero(); n]; n];
        for (i, j, c) in &f.antipode {
            s[*i][*j] = q(c);
        }
        Dense { n, m, d, one: f.unit.iter().map(|c| q(c)).collect(), eps: f.counit.iter().map(|c| q(c)).collect(), s }
    }

    pub fn basis(&self, i: usize) -> V {
        let mut v = vec![Q::zero(); self.n];
        v[i] = Q::one();
        v
    }

    pub fn mul(&self, a: &V, b: &V) -> V {
        let n = self.n;
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..n {
                    out[k] += &ab * &self.m[(i * n + j) * n + k];
                }
            }
        }
        out
    }

    pub fn counit(&self, a: &V) -> Q {
        a.iter().zip(&self.eps).map(|(x, y)| x * y).sum()
    }

    pub fn antipode(&self, a: &V) -> V {
        (0..self.n).map(|i| (0..self.n).map(|j| &self.s[i][j] * &a[j]).sum()).collect()
    }

    /// `Δ(a)` as a map `(j, k) ↦ coefficient`.
    pub fn delta(&self, a: &V) -> V {
        let n = self.n;
        let mut out = vec![Q::zero(); n * n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for jk in 0..n * n {
                out[jk] += &a[i] * &self.d[i * n * n + jk];
            }
        }
        out
    }

    fn terms2(&self, t: &V) -> Vec<(usize, usize, Q)> {
        let n = self.n;
        t.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(x, c)| (x / n, x % n, c.clone())).collect()
    }

    /// Product in `H^{⊗k}`, computed factor by factor on basis tensors.
    fn mul_tensor(&self, k: usize, a: &V, b: &V) -> V {
        let n = self.n;
        let digits = |mut x: usize| {
            let mut d = vec![0; k];
            for slot in d.iter_mut().rev() {
                *slot = x % n;
                x /= n;
            }
            d
        };
        let mut out = vec![Q::zero(); n.pow(k as u32)];
        for (x, ca) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (y, cb) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let mut acc: Vec<(usize, Q)> = vec![(0, ca * cb)];
                for (p, r) in digits(x).into_iter().zip(digits(y)) {
                    let prod = self.mul(&self.basis(p), &self.basis(r));
                    let mut next = Vec::new();
                    for (idx, c) in &acc {
                        for (z, cz) in prod.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            next.push((idx * n + z, c * cz));
                        }
                    }
                    acc = next;
                }
                for (idx, c) in acc {
                    out[idx] += c;
                }
            }
        }
        out
    }

    fn kron(&self, a: &V, b: &V) -> V {
        a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
    }

    fn delta_left(&self, t: &V) -> V {
        let n = self.n;
        let mut out = vec![Q::zero(); n * n * n];
        for (j, k, c) in self.terms2(t) {
            let dj = self.delta(&self.basis(j));
            for ab in 0..n * n {
                out[ab * n + k] += &c * &dj[ab];
            }
        }
        out
    }

    fn delta_right(&self, t: &V) -> V {
        let n = self.n;
        let mut out = vec![Q::zero(); n * n * n];
        for (j, k, c) in self.terms2(t) {
            let dk = self.delta(&self.basis(k));
            for ab in 0..n * n {
                out[j * n * n + ab] += &c * &dk[ab];
            }
        }
        out
    }

    fn scale_add(out: &mut V, c: &Q, v: &V) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }

    pub fn eps_t(&self, h: &V) -> V {
        let mut out = vec![Q::zero(); self.n];
        for (j, k, c) in self.terms2(&self.delta(&self.one)) {
            let e = &c * self.counit(&self.mul(&self.basis(j), h));
            Self::scale_add(&mut out, &e, &self.basis(k));
        }
        out
    }

    pub fn eps_s(&self, h: &V) -> V {
        let mut out = vec![Q::zero(); self.n];
        for (j, k, c) in self.terms2(&self.delta(&self.one)) {
            let e = &c * self.counit(&self.mul(h, &self.basis(k)));
            Self::scale_add(&mut out, &e, &self.basis(j));
        }
        out
    }

    /// The defining axioms that fail on some basis input.
    pub fn failing_axioms(&self) -> BTreeSet<&'static str> {
        let n = self.n;
        let mut bad = BTreeSet::new();
        let b: Vec<V> = (0..n).map(|i| self.basis(i)).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.mul(&self.mul(&b[i], &b[j]), &b[k]) != self.mul(&b[i], &self.mul(&b[j], &b[k])) {
                        bad.insert("associativity");
                    }
                }
            }
        }
        for x in &b {
            if &self.mul(&self.one, x) != x || &self.mul(x, &self.one) != x {
                bad.insert("unit");
            }
            let d = self.delta(x);
            if self.delta_left(&d) != self.delta_right(&d) {
                bad.insert("coassociativity");
            }
            let mut l = vec![Q::zero(); n];
            let mut r = vec![Q::zero(); n];
            for (j, k, c) in self.terms2(&d) {
                l[k] += &c * &self.eps[j];
                r[j] += &c * &self.eps[k];
            }
            if &l != x || &r != x {
                bad.insert("counit");
            }
        }
        for x in &b {
            for y in &b {
                if self.delta(&self.mul(x, y)) != self.mul_tensor(2, &self.delta(x), &self.delta(y)) {
                    bad.insert("multiplicativity");
                }
            }
        }
        let d1 = self.delta(&self.one);
        let dd = self.delta_left(&d1);
        let a = self.kron(&d1, &self.one);
        let c = self.kron(&self.one, &d1);
        if dd != self.mul_tensor(3, &a, &c) || dd != self.mul_tensor(3, &c, &a) {
            bad.insert("weak_unitality");
        }
        for x in &b {
            for y in &b {
                let dy = self.terms2(&self.delta(y));
                for z in &b {
                    let lhs = self.counit(&self.mul(&self.mul(x, y), z));
                    let mut first = Q::zero();
                    let mut second = Q::zero();
                    for (p, r, cc) in &dy {
                        first += cc * self.counit(&self.mul(x, &b[*p])) * self.counit(&self.mul(&b[*r], z));
                        second += cc * self.counit(&self.mul(x, &b[*r])) * self.counit(&self.mul(&b[*p], z));
                    }
                    if lhs != first || lhs != second {
                        bad.insert("weak_counit");
                    }
                }
            }
        }
        for x in &b {
            let d = self.terms2(&self.delta(x));
            let mut t = vec![Q::zero(); n];
            let mut s = vec![Q::zero(); n];
            for (p, r, cc) in &d {
                Self::scale_add(&mut t, cc, &self.mul(&b[*p], &self.antipode(&b[*r])));
                Self::scale_add(&mut s, cc, &self.mul(&self.antipode(&b[*p]), &b[*r]));
            }
            if t != self.eps_t(x) {
                bad.insert("antipode_target");
            }
            if s != self.eps_s(x) {
                bad.insert("antipode_source");
            }
            let mut sandwich = vec![Q::zero(); n];
            for (p, r, cc) in &d {
                for (u, w, c2) in self.terms2(&self.delta(&b[*r])) {
                    let v = self.mul(&self.mul(&self.antipode(&b[*p]), &b[u]), &self.antipode(&b[w]));
                    Self::scale_add(&mut sandwich, &(cc * &c2), &v);
                }
            }
            if sandwich != self.antipode(x) {
                bad.insert("antipode_sandwich");
            }
        }
        bad
    }

    /// Solutions of `b_i x = ε_t(b_i) x` (left) or `x b_i = x ε_s(b_i)` (right)
    /// as a reduced basis.
    pub fn integrals(&self, left: bool) -> Vec<V> {
        kernel(self.integral_conditions(left), self.n)
    }

    /// One row per basis element `b_i` and output coordinate.
    pub fn integral_conditions(&self, left: bool) -> Vec<V> {
        let n = self.n;
        let mut rows = Vec::new();
        for i in 0..n {
            let bi = self.basis(i);
            let (a, c) = if left { (bi.clone(), self.eps_t(&bi)) } else { (bi.clone(), self.eps_s(&bi)) };
            // column j of the condition matrix is the image of b_j
            let cols: Vec<V> = (0..n)
                .map(|j| {
                    let bj = self.basis(j);
                    let (p, r) =
                        if left { (self.mul(&a, &bj), self.mul(&c, &bj)) } else { (self.mul(&bj, &a), self.mul(&bj, &c)) };
                    p.iter().zip(&r).map(|(x, y)| x - y).collect()
                })
                .collect();
            for k in 0..n {
                rows.push((0..n).map(|j| cols[j][k].clone()).collect::<V>());
            }
        }
        rows
    }
}

/// Reduced kernel basis by plain Gauss-Jordan.
pub fn kernel(mut rows: Vec<V>, n: usize) -> Vec<V> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][f].clone();
            }
            v
        })
        .collect()
}

/// Counts solutions of a linear system over `F_p` by enumeration.
pub fn brute_force_kernel_size(p: u64, rows: &[Vec<u64>], n: usize) -> u64 {
    let total = p.pow(n as u32);
    let mut count = 0;
    let mut x = vec![0u64; n];
    for code in 0..total {
        let mut c = code;
        for xi in x.iter_mut() {
            *xi = c % p;
            c /= p;
        }
        if rows.iter().all(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<u64>() % p == 0) {
            count += 1;
        }
    }
    count
}

pub fn to_i64(v: &V) -> Vec<i64> {
    v.iter()
        .map(|c| {
            assert!(c.is_integer());
            c.to_integer().try_into().expect("small")
        })
        .collect()
}
