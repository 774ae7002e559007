use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::la::{Field, Matrix, Scalar};

/// A finite-dimensional algebra with coproduct, counit and antipode, all
/// given by structure constants on one basis. Nothing here is assumed to
/// satisfy the axioms; see [`crate::wha::verify`].
#[derive(Clone, Debug)]
pub struct WeakHopfAlgebra {
    alg: Algebra,
    labels: Vec<String>,
    comult: Vec<Scalar>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    delta: Matrix,
    eps_s: Matrix,
    eps_t: Matrix,
}

impl PartialEq for WeakHopfAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.alg == o.alg
            && self.labels == o.labels
            && self.comult == o.comult
            && self.counit == o.counit
            && self.antipode == o.antipode
    }
}

impl Eq for WeakHopfAlgebra {}

impl WeakHopfAlgebra {
    /// `comult[(i*n + j)*n + k]` is the coefficient of `b_j⊗b_k` in `Δ(b_i)`;
    /// column `i` of `antipode` is `S(b_i)`.
    pub fn new(alg: Algebra, labels: Vec<String>, comult: Vec<Scalar>, counit: Vec<Scalar>, antipode: Matrix) -> Result<Self> {
        let n = alg.dim();
        let f = alg.field();
        if labels.len() != n {
            return Err(Error::Dimension(format!("{} basis labels for dimension {n}", labels.len())));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if l.is_empty() || !seen.insert(l.as_str()) {
                return Err(Error::InvalidData(format!("basis label {l:?} is empty or repeated")));
            }
        }
        if comult.len() != n * n * n {
            return Err(Error::Dimension(format!("comultiplication has {} constants, expected {}", comult.len(), n * n * n)));
        }
        if counit.len() != n {
            return Err(Error::Dimension(format!("counit has length {}, expected {n}", counit.len())));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Dimension(format!("antipode is {}x{}, expected {n}x{n}", antipode.rows(), antipode.cols())));
        }
        if comult.iter().chain(&counit).any(|s| s.field() != f) || antipode.field() != f {
            return Err(Error::InvalidData(format!("scalar outside field {f}")));
        }
        let delta = Matrix::from_fn(f, n * n, n, |jk, i| comult[i * n * n + jk].clone());
        let placeholder = Matrix::zeros(f, n, n);
        let mut h =
            WeakHopfAlgebra { alg, labels, comult, counit, antipode, delta, eps_s: placeholder.clone(), eps_t: placeholder };
        h.eps_t = h.compute_eps_t();
        h.eps_s = h.compute_eps_s();
        Ok(h)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn comult_constants(&self) -> &[Scalar] {
        &self.comult
    }

    pub fn d(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.comult[(i * n + j) * n + k]
    }

    pub fn counit_vec(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    /// `Δ` as an `n² x n` matrix.
    pub fn delta_matrix(&self) -> &Matrix {
        &self.delta
    }

    pub fn eps_s_matrix(&self) -> &Matrix {
        &self.eps_s
    }

    pub fn eps_t_matrix(&self) -> &Matrix {
        &self.eps_t
    }

    pub fn one(&self) -> &[Scalar] {
        self.alg.one()
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        self.alg.basis_vec(i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.alg.mul(x, y)
    }

    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.delta.apply(x)
    }

    pub fn delta_one(&self) -> Vec<Scalar> {
        self.delta(self.one())
    }

    pub fn counit(&self, x: &[Scalar]) -> Scalar {
        let mut s = self.field().zero();
        for (a, b) in self.counit.iter().zip(x) {
            s.add_mul(a, b);
        }
        s
    }

    pub fn antipode(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(x)
    }

    pub fn eps_s(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.eps_s.apply(x)
    }

    pub fn eps_t(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.eps_t.apply(x)
    }

    /// Nonzero terms `(j, k, c)` of `Δ(1) = Σ c b_j⊗b_k`.
    pub fn delta_one_terms(&self) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        self.delta_one().into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(jk, c)| (jk / n, jk % n, c)).collect()
    }

    /// Nonzero terms of `Δ(x)`.
    pub fn delta_terms(&self, x: &[Scalar]) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        self.delta(x).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(jk, c)| (jk / n, jk % n, c)).collect()
    }

    // ε_t(h) = ε(1_1 h) 1_2
    fn compute_eps_t(&self) -> Matrix {
        let n = self.dim();
        let f = self.field();
        let mut m = Matrix::zeros(f, n, n);
        for (j, k, c) in self.delta_one_terms() {
            for i in 0..n {
                let e = self.counit(&self.alg.mul_basis(j, i));
                if !e.is_zero() {
                    m[(k, i)].add_mul(&c, &e);
                }
            }
        }
        m
    }

    // ε_s(h) = 1_1 ε(h 1_2)
    fn compute_eps_s(&self) -> Matrix {
        let n = self.dim();
        let f = self.field();
        let mut m = Matrix::zeros(f, n, n);
        for (j, k, c) in self.delta_one_terms() {
            for i in 0..n {
                let e = self.counit(&self.alg.mul_basis(i, k));
                if !e.is_zero() {
                    m[(j, i)].add_mul(&c, &e);
                }
            }
        }
        m
    }

    /// Product in the k-fold tensor power `H^{⊗k}`.
    pub fn tensor_mul(&self, k: usize, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        tensor_mul(&self.alg, k, u, v)
    }

    /// `(Δ⊗id)` on `H⊗H`.
    pub fn delta_first(&self, u: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n * n];
        for (ab, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            for jk in 0..n * n {
                let d = &self.comult[a * n * n + jk];
                if !d.is_zero() {
                    out[jk * n + b].add_mul(c, d);
                }
            }
        }
        out
    }

    /// `(id⊗Δ)` on `H⊗H`.
    pub fn delta_second(&self, u: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n * n];
        for (ab, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            for jk in 0..n * n {
                let d = &self.comult[b * n * n + jk];
                if !d.is_zero() {
                    out[a * n * n + jk].add_mul(c, d);
                }
            }
        }
        out
    }

    /// `Δ²(x) = (Δ⊗id)Δ(x)` in `H^{⊗3}`.
    pub fn delta2(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.delta_first(&self.delta(x))
    }

    /// Applies linear maps factorwise to an element of `H⊗H`.
    pub fn map2(&self, u: &[Scalar], f: &Matrix, g: &Matrix) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); f.rows() * g.rows()];
        for (ab, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            for p in 0..f.rows() {
                let x = &f[(p, a)];
                if x.is_zero() {
                    continue;
                }
                let cx = c * x;
                for q in 0..g.rows() {
                    let y = &g[(q, b)];
                    if !y.is_zero() {
                        out[p * g.rows() + q].add_mul(&cx, y);
                    }
                }
            }
        }
        out
    }

    /// Multiplies the factors of `u ∈ H⊗H` together.
    pub fn contract2(&self, u: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.alg.zero_vec();
        for (ab, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.alg.mul_basis(ab / n, ab % n);
            for (o, x) in out.iter_mut().zip(&p) {
                o.add_mul(c, x);
            }
        }
        out
    }

    /// Multiplies the three factors of `u ∈ H^{⊗3}` together.
    pub fn contract3(&self, u: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.alg.zero_vec();
        for (abc, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b, d) = (abc / (n * n), (abc / n) % n, abc % n);
            let p = self.alg.mul(&self.alg.mul_basis(a, b), &self.alg.basis_vec(d));
            for (o, x) in out.iter_mut().zip(&p) {
                o.add_mul(c, x);
            }
        }
        out
    }

    /// `S^{-1}`, when `S` is invertible.
    pub fn antipode_inverse(&self) -> Option<Matrix> {
        self.antipode.inverse().expect("square")
    }

    /// Renames the basis; used by constructors and direct sums.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::Dimension("label count".into()));
        }
        self.labels = labels;
        Ok(self)
    }
}

/// Product in the k-fold tensor power of an algebra.
pub fn tensor_mul(alg: &Algebra, k: usize, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let n = alg.dim();
    let total = n.pow(k as u32);
    assert_eq!(u.len(), total);
    assert_eq!(v.len(), total);
    let f = alg.field();
    let mut out = vec![f.zero(); total];
    let digits = |mut idx: usize| {
        let mut d = vec![0; k];
        for t in (0..k).rev() {
            d[t] = idx % n;
            idx /= n;
        }
        d
    };
    let nz_v: Vec<(Vec<usize>, &Scalar)> =
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (digits(i), c)).collect();
    for (iu, cu) in u.iter().enumerate() {
        if cu.is_zero() {
            continue;
        }
        let du = digits(iu);
        for (dv, cv) in &nz_v {
            // sparse tensor product of the factor products
            let mut acc: Vec<(usize, Scalar)> = vec![(0, cu * *cv)];
            for t in 0..k {
                let p = alg.mul_basis(du[t], dv[t]);
                let mut next = Vec::new();
                for (idx, c) in &acc {
                    for (m, x) in p.iter().enumerate() {
                        if !x.is_zero() {
                            next.push((idx * n + m, c * x));
                        }
                    }
                }
                acc = next;
                if acc.is_empty() {
                    break;
                }
            }
            for (idx, c) in acc {
                out[idx] += c;
            }
        }
    }
    out
}
