//! Constructors for groupoid algebras, function algebras and Sweedler's algebra,
//! plus the builtin catalog.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::la::{Field, Matrix, Scalar};
use crate::wha::{direct_sum, WeakHopfAlgebra};

/// A finite groupoid. `compose[a][b]` is `a∘b` (first `b`, then `a`), defined
/// exactly when `source(a) == target(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    pub objects: usize,
    /// `(source, target)` per arrow.
    pub arrows: Vec<(usize, usize)>,
    pub compose: Vec<Vec<Option<usize>>>,
    pub labels: Vec<String>,
}

impl Groupoid {
    /// One object, arrows given by a group multiplication table.
    pub fn from_group(table: &[Vec<usize>], labels: Vec<String>) -> Self {
        let n = table.len();
        Groupoid {
            objects: 1,
            arrows: vec![(0, 0); n],
            compose: table.iter().map(|row| row.iter().map(|&c| Some(c)).collect()).collect(),
            labels,
        }
    }

    /// The pair groupoid: one arrow `g_ij : j → i` for every pair of objects.
    pub fn pair(n: usize) -> Self {
        let idx = |i: usize, j: usize| i * n + j;
        let mut arrows = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                arrows.push((j, i));
                labels.push(format!("g{}{}", i + 1, j + 1));
            }
        }
        let compose = (0..n * n)
            .map(|a| (0..n * n).map(|b| if a % n == b / n { Some(idx(a / n, b % n)) } else { None }).collect())
            .collect();
        Groupoid { objects: n, arrows, compose, labels }
    }

    pub fn disjoint_union(&self, o: &Groupoid) -> Self {
        let na = self.arrows.len();
        let nb = o.arrows.len();
        let mut arrows = self.arrows.clone();
        arrows.extend(o.arrows.iter().map(|&(s, t)| (s + self.objects, t + self.objects)));
        let mut compose = vec![vec![None; na + nb]; na + nb];
        for a in 0..na {
            for b in 0..na {
                compose[a][b] = self.compose[a][b];
            }
        }
        for a in 0..nb {
            for b in 0..nb {
                compose[na + a][na + b] = o.compose[a][b].map(|c| c + na);
            }
        }
        let collide = self.labels.iter().any(|l| o.labels.contains(l));
        let labels = if collide {
            self.labels.iter().map(|l| format!("1.{l}")).chain(o.labels.iter().map(|l| format!("2.{l}"))).collect()
        } else {
            self.labels.iter().chain(&o.labels).cloned().collect()
        };
        Groupoid { objects: self.objects + o.objects, arrows, compose, labels }
    }

    fn source(&self, a: usize) -> usize {
        self.arrows[a].0
    }

    fn target(&self, a: usize) -> usize {
        self.arrows[a].1
    }

    /// Identity arrow per object and inverse per arrow.
    fn validate(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        let n = self.arrows.len();
        let bad = |m: String| Err(Error::InvalidData(format!("not a groupoid: {m}")));
        if n == 0 {
            return bad("no arrows".into());
        }
        if self.labels.len() != n || self.compose.len() != n || self.compose.iter().any(|r| r.len() != n) {
            return bad("table shape".into());
        }
        if self.arrows.iter().any(|&(s, t)| s >= self.objects || t >= self.objects) {
            return bad("arrow endpoint out of range".into());
        }
        for a in 0..n {
            for b in 0..n {
                let composable = self.source(a) == self.target(b);
                match self.compose[a][b] {
                    Some(c) if composable => {
                        if c >= n || self.source(c) != self.source(b) || self.target(c) != self.target(a) {
                            return bad(format!("composite of {a} and {b} has wrong endpoints"));
                        }
                    }
                    None if !composable => {}
                    _ => return bad(format!("composability of {a} and {b} disagrees with endpoints")),
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if let (Some(ab), Some(bc)) = (self.compose[a][b], self.compose[b][c]) {
                        if self.compose[ab][c] != self.compose[a][bc] {
                            return bad(format!("composition not associative at ({a}, {b}, {c})"));
                        }
                    }
                }
            }
        }
        let mut ids = Vec::with_capacity(self.objects);
        for o in 0..self.objects {
            let id = (0..n).find(|&e| {
                self.arrows[e] == (o, o)
                    && (0..n).all(|x| {
                        (self.source(x) != o || self.compose[x][e] == Some(x))
                            && (self.target(x) != o || self.compose[e][x] == Some(x))
                    })
            });
            match id {
                Some(e) => ids.push(e),
                None => return bad(format!("object {o} has no identity")),
            }
        }
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let i = (0..n)
                .find(|&b| self.compose[a][b] == Some(ids[self.source(b)]) && self.compose[b][a] == Some(ids[self.source(a)]));
            match i {
                Some(b) => inv.push(b),
                None => return bad(format!("arrow {a} has no inverse")),
            }
        }
        Ok((ids, inv))
    }
}

fn unit_vec(f: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Groupoid algebra: product is composition (zero when not composable),
/// `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g^{-1}`.
pub fn groupoid_algebra(field: Field, g: &Groupoid) -> Result<WeakHopfAlgebra> {
    let (ids, inv) = g.validate()?;
    let n = g.arrows.len();
    let mut unit = vec![field.zero(); n];
    for &e in &ids {
        unit[e] = field.one();
    }
    let alg = Algebra::from_products(field, n, unit, |a, b| match g.compose[a][b] {
        Some(c) => unit_vec(field, n, c),
        None => vec![field.zero(); n],
    })?;
    let mut comult = vec![field.zero(); n * n * n];
    for a in 0..n {
        comult[(a * n + a) * n + a] = field.one();
    }
    let counit = vec![field.one(); n];
    let antipode = Matrix::from_fn(field, n, n, |i, j| if inv[j] == i { field.one() } else { field.zero() });
    WeakHopfAlgebra::new(alg, g.labels.clone(), comult, counit, antipode)
}

pub fn group_algebra(field: Field, table: &[Vec<usize>], labels: Vec<String>) -> Result<WeakHopfAlgebra> {
    groupoid_algebra(field, &Groupoid::from_group(table, labels))
}

/// Dual of the group algebra on the basis of point masses `δ_g`.
pub fn function_algebra(field: Field, table: &[Vec<usize>], labels: Vec<String>) -> Result<WeakHopfAlgebra> {
    let (ids, inv) = Groupoid::from_group(table, labels.clone()).validate()?;
    let e = ids[0];
    let n = table.len();
    let unit = vec![field.one(); n];
    let alg = Algebra::from_products(field, n, unit, |a, b| if a == b { unit_vec(field, n, a) } else { vec![field.zero(); n] })?;
    let mut comult = vec![field.zero(); n * n * n];
    for b in 0..n {
        for c in 0..n {
            comult[(table[b][c] * n + b) * n + c] = field.one();
        }
    }
    let counit = unit_vec(field, n, e);
    let antipode = Matrix::from_fn(field, n, n, |i, j| if inv[j] == i { field.one() } else { field.zero() });
    let labels = labels.iter().map(|l| format!("d{l}")).collect();
    WeakHopfAlgebra::new(alg, labels, comult, counit, antipode)
}

/// Sweedler's 4-dimensional Hopf algebra on `1, g, x, gx` with `g² = 1`,
/// `x² = 0`, `xg = -gx`, `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`, `S(x) = -gx`.
pub fn sweedler(field: Field) -> Result<WeakHopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("Sweedler's algebra needs characteristic different from 2".into()));
    }
    // basis element g^a x^b has index 2b + a: 1, g, x, gx
    let n = 4;
    let z = |i: usize, c: i64| {
        let mut v = vec![field.zero(); n];
        v[i] = field.from_i64(c);
        v
    };
    let alg = Algebra::from_products(field, n, z(0, 1), |i, j| {
        let (a, b) = (i % 2, i / 2);
        let (c, d) = (j % 2, j / 2);
        if b + d > 1 {
            return vec![field.zero(); n];
        }
        // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
        let sign = if b * c == 1 { -1 } else { 1 };
        z(2 * (b + d) + (a + c) % 2, sign)
    })?;
    let mut comult = vec![field.zero(); n * n * n];
    let mut put = |i: usize, j: usize, k: usize, c: i64| comult[(i * n + j) * n + k] = field.from_i64(c);
    put(0, 0, 0, 1);
    put(1, 1, 1, 1);
    put(2, 2, 0, 1);
    put(2, 1, 2, 1);
    put(3, 3, 1, 1);
    put(3, 0, 3, 1);
    let counit = vec![field.one(), field.one(), field.zero(), field.zero()];
    let antipode = Matrix::from_i64(field, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    let labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    WeakHopfAlgebra::new(alg, labels, comult, counit, antipode)
}

pub fn c2_table() -> Vec<Vec<usize>> {
    vec![vec![0, 1], vec![1, 0]]
}

fn c2_labels() -> Vec<String> {
    vec!["1".into(), "g".into()]
}

pub fn base_field(field: Field) -> Result<WeakHopfAlgebra> {
    group_algebra(field, &[vec![0]], vec!["1".into()])
}

pub fn kc2(field: Field) -> Result<WeakHopfAlgebra> {
    group_algebra(field, &c2_table(), c2_labels())
}

pub fn fun_c2(field: Field) -> Result<WeakHopfAlgebra> {
    function_algebra(field, &c2_table(), c2_labels())
}

pub fn pair_groupoid(field: Field, n: usize) -> Result<WeakHopfAlgebra> {
    groupoid_algebra(field, &Groupoid::pair(n))
}

pub const BUILTIN_NAMES: [&str; 6] = ["k", "kc2", "fun-c2", "sweedler", "pairgpd2", "pairgpd3"];

/// The catalog used by `check` and the acceptance suite.
pub const CATALOG: [&str; 8] =
    ["k", "kc2", "fun-c2", "sweedler", "pairgpd2", "pairgpd3", "sum:kc2,pairgpd2", "sum:sweedler,fun-c2"];

/// Resolves a builtin name, including `sum:<a>,<b>`.
pub fn builtin(name: &str, field: Field) -> Result<WeakHopfAlgebra> {
    if let Some(rest) = name.strip_prefix("sum:") {
        let (a, b) = split_sum(rest).ok_or_else(|| Error::InvalidData(format!("expected sum:<a>,<b>, got {name:?}")))?;
        return direct_sum(&builtin(a, field)?, &builtin(b, field)?);
    }
    match name {
        "k" => base_field(field),
        "kc2" => kc2(field),
        "fun-c2" => fun_c2(field),
        "sweedler" => sweedler(field),
        "pairgpd2" => pair_groupoid(field, 2),
        "pairgpd3" => pair_groupoid(field, 3),
        _ => Err(Error::InvalidData(format!("unknown builtin {name:?}"))),
    }
}

/// The two operands of a `sum:<a>,<b>` name.
pub fn sum_operands(name: &str) -> Option<(&str, &str)> {
    split_sum(name.strip_prefix("sum:")?)
}

/// Length of the first operand, where `sum:` consumes two.
fn operand_len(s: &str) -> Option<usize> {
    match s.strip_prefix("sum:") {
        Some(r) => {
            let a = operand_len(r)?;
            if r.as_bytes().get(a) != Some(&b',') {
                return None;
            }
            Some(4 + a + 1 + operand_len(&r[a + 1..])?)
        }
        None => Some(s.find(',').unwrap_or(s.len())),
    }
}

/// Splits `<a>,<b>` at the top-level comma, so nested sums work.
fn split_sum(s: &str) -> Option<(&str, &str)> {
    let a = operand_len(s)?;
    s[a..].strip_prefix(',').map(|rest| (&s[..a], rest))
}
