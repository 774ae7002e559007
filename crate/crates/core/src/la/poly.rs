//! Univariate polynomials, just enough to find roots and coprime factors of
//! minimal polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Field, Scalar};

/// Coefficients from the constant term upward, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    c: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(Scalar::is_zero) {
            c.pop();
        }
        Poly { field, c }
    }

    pub fn x(field: Field) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn constant(s: Scalar) -> Self {
        Poly::new(s.field(), vec![s])
    }

    /// `x - a`.
    pub fn linear(a: &Scalar) -> Self {
        Poly::new(a.field(), vec![-a, a.field().one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn lead(&self) -> &Scalar {
        self.c.last().expect("zero polynomial")
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().unwrap();
        Poly::new(self.field, self.c.iter().map(|a| a * &inv).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let z = self.field.zero();
        Poly::new(self.field, (0..n).map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let z = self.field.zero();
        Poly::new(self.field, (0..n).map(|i| self.c.get(i).unwrap_or(&z) - o.c.get(i).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        let mut out = vec![self.field.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().inv().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::new(self.field, vec![]), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &inv;
            if coef.is_zero() {
                continue;
            }
            let neg = -&coef;
            for (j, b) in d.c.iter().enumerate() {
                r[k + j].add_mul(&neg, b);
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.field, self.c.iter().enumerate().skip(1).map(|(i, a)| a * self.field.from_i64(i as i64)).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for a in self.c.iter().rev() {
            acc = &acc * x + a;
        }
        acc
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut r = Poly::constant(self.field.one()).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        r
    }

    /// Square-free part over Q (characteristic zero only).
    pub fn squarefree(&self) -> Poly {
        assert_eq!(self.field, Field::Rational);
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Distinct roots in the base field, sorted. `None` when the search space
    /// is too large to enumerate (only possible over Q with huge coefficients).
    pub fn roots(&self) -> Option<Vec<Scalar>> {
        if self.degree().is_none_or(|d| d == 0) {
            return Some(Vec::new());
        }
        match self.field {
            Field::Rational => rational_roots(self),
            Field::Prime(p) => Some(prime_roots(self, p)),
        }
    }

    /// Distinct-degree factorization over Fp: `(d, product of the distinct
    /// irreducible factors of degree d)`.
    pub fn distinct_degree(&self) -> Vec<(usize, Poly)> {
        let Field::Prime(p) = self.field else { panic!("distinct-degree factorization needs a prime field") };
        let mut f = self.monic();
        let x = Poly::x(self.field);
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut d = 0;
        while f.degree().unwrap_or(0) > 0 {
            d += 1;
            if 2 * d > f.degree().unwrap() {
                // every factor left has degree >= d > deg/2, so f is irreducible
                out.push((f.degree().unwrap(), f));
                break;
            }
            h = h.powmod(p, &f);
            let g = f.gcd(&h.sub(&x));
            if g.degree().unwrap_or(0) > 0 {
                while f.gcd(&g).degree().unwrap_or(0) > 0 {
                    let c = f.gcd(&g);
                    f = f.divrem(&c).0;
                }
                out.push((d, g));
                h = h.rem(&f.clone().max_one());
            }
        }
        out
    }

    fn max_one(self) -> Poly {
        if self.is_zero() {
            Poly::constant(self.field.one())
        } else {
            self
        }
    }

    /// Evaluates at a square matrix via Horner's scheme.
    pub fn eval_matrix(&self, m: &super::matrix::Matrix) -> super::matrix::Matrix {
        let n = m.rows();
        let mut acc = super::matrix::Matrix::zeros(self.field, n, n);
        let id = super::matrix::Matrix::identity(self.field, n);
        for a in self.c.iter().rev() {
            acc = acc.mul(m);
            acc.add_scaled(a, &id);
        }
        acc
    }
}

fn prime_roots(f: &Poly, p: u64) -> Vec<Scalar> {
    let field = f.field;
    if p <= 1 << 16 {
        return (0..p).map(|v| field.from_i64(v as i64)).filter(|x| f.eval(x).is_zero()).collect();
    }
    let x = Poly::x(field);
    let g = f.gcd(&x.powmod(p, f).sub(&x));
    let mut roots = Vec::new();
    split_linear(&g, p, &mut roots);
    roots.sort_by_key(|r| r.to_i64());
    roots
}

fn split_linear(g: &Poly, p: u64, out: &mut Vec<Scalar>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let m = g.monic();
            out.push(-&m.c[0]);
        }
        Some(_) => {
            let field = g.field;
            for c in 0.. {
                let shift = Poly::new(field, vec![field.from_i64(c), field.one()]);
                let h = shift.powmod((p - 1) / 2, g).sub(&Poly::constant(field.one()));
                let d = g.gcd(&h);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < g.degree().unwrap() {
                    split_linear(&d, p, out);
                    split_linear(&g.divrem(&d).0, p, out);
                    return;
                }
            }
        }
    }
}

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

fn rational_roots(f: &Poly) -> Option<Vec<Scalar>> {
    let field = f.field;
    let rats: Vec<_> = f.c.iter().map(|a| a.to_rational().unwrap()).collect();
    let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&l / r.denom())).collect();
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(field.zero());
        while ints.first().is_some_and(|a| a.is_zero()) {
            ints.remove(0);
        }
    }
    if ints.len() > 1 {
        let ps = divisors(&ints[0])?;
        let qs = divisors(ints.last().unwrap())?;
        let reduced = Poly::new(field, ints.iter().map(|a| field.from_bigint(a)).collect());
        let mut cand = Vec::new();
        for &a in &ps {
            for &b in &qs {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let r = field.from_bigint(&BigInt::from(a)) * field.from_bigint(&BigInt::from(b)).inv().unwrap();
                cand.push(r.clone());
                cand.push(-r);
            }
        }
        for r in cand {
            if reduced.eval(&r).is_zero() {
                roots.push(r);
            }
        }
    }
    roots.sort_by_key(|r| r.to_rational().unwrap());
    roots.dedup();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly {
        Poly::new(Field::Rational, c.iter().map(|&a| Field::Rational.from_i64(a)).collect())
    }

    #[test]
    fn rational_roots_found() {
        // (2x - 1)(x + 3)(x^2 + 1) = 2x^4 + 5x^3 - x^2 + 5x - 3
        let f = q(&[-3, 5, -1, 5, 2]);
        let r = f.roots().unwrap();
        let qf = Field::Rational;
        assert_eq!(r, vec![qf.from_i64(-3), qf.ratio(1, 2)]);
        assert_eq!(q(&[0, 0, 1]).roots().unwrap(), vec![qf.zero()]);
        assert!(q(&[1, 0, 1]).roots().unwrap().is_empty());
    }

    #[test]
    fn division_and_gcd() {
        let a = q(&[-1, 0, 1]);
        let b = q(&[1, 1]);
        let (d, r) = a.divrem(&b);
        assert_eq!(d, q(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&q(&[-1, 1]).mul(&q(&[2, 1]))), q(&[-1, 1]));
        assert_eq!(q(&[1, 2, 1]).squarefree(), q(&[1, 1]));
    }

    #[test]
    fn prime_field_roots() {
        let f7 = Field::prime(7).unwrap();
        // x^2 + 1 over F7 has no roots, over F5 it has 2 and 3
        let p7 = Poly::new(f7, vec![f7.one(), f7.zero(), f7.one()]);
        assert!(p7.roots().unwrap().is_empty());
        let f5 = Field::prime(5).unwrap();
        let p5 = Poly::new(f5, vec![f5.one(), f5.zero(), f5.one()]);
        assert_eq!(p5.roots().unwrap(), vec![f5.from_i64(2), f5.from_i64(3)]);
        let big = Field::prime(1_000_003).unwrap();
        let roots = [big.from_i64(5), big.from_i64(77), big.from_i64(999_999)];
        let f = roots.iter().fold(Poly::constant(big.one()), |acc, r| acc.mul(&Poly::linear(r)));
        let mut got = f.roots().unwrap();
        got.sort_by_key(|r| r.to_i64());
        assert_eq!(got, roots.to_vec());
    }

    #[test]
    fn distinct_degree_parts() {
        let f3 = Field::prime(3).unwrap();
        let p = |c: &[i64]| Poly::new(f3, c.iter().map(|&a| f3.from_i64(a)).collect());
        // (x - 1)^2 (x^2 + 1): x^2+1 is irreducible over F3
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 0, 1]));
        let dd = f.distinct_degree();
        assert_eq!(dd, vec![(1, p(&[-1, 1])), (2, p(&[1, 0, 1]))]);
    }
}
