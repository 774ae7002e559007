//! The `.wha.json` file format.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::la::{Field, Matrix, Scalar};
use crate::wha::WeakHopfAlgebra;

pub const FORMAT_VERSION: u32 = 1;

/// On-disk layout. Indices are 0-based; scalars are strings such as `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub version: u32,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `[i, j, k, c]`: `b_i b_j` has coefficient `c` on `b_k`.
    pub mult: Vec<(usize, usize, usize, String)>,
    /// `[i, j, k, c]`: `Δ(b_i)` has coefficient `c` on `b_j⊗b_k`.
    pub comult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    /// `[i, j, c]`: `S(b_j)` has coefficient `c` on `b_i`.
    pub antipode: Vec<(usize, usize, String)>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn scalar(f: Field, location: String, text: &str) -> Result<Scalar> {
    f.parse_scalar(text).map_err(|e| parse_err(location, e.to_string()))
}

fn index(location: &str, i: usize, n: usize) -> Result<usize> {
    if i >= n {
        return Err(parse_err(location, format!("index {i} out of range for dimension {n}")));
    }
    Ok(i)
}

fn dense(f: Field, name: &str, v: &[String], n: usize) -> Result<Vec<Scalar>> {
    if v.len() != n {
        return Err(parse_err(name, format!("length {} but dim is {n}", v.len())));
    }
    v.iter().enumerate().map(|(i, s)| scalar(f, format!("{name}[{i}]"), s)).collect()
}

fn triples(f: Field, name: &str, entries: &[(usize, usize, usize, String)], n: usize) -> Result<Vec<Scalar>> {
    let mut out = vec![f.zero(); n * n * n];
    let mut seen = BTreeSet::new();
    for (e, (i, j, k, c)) in entries.iter().enumerate() {
        let loc = format!("{name}[{e}]");
        for &x in [i, j, k] {
            index(&loc, x, n)?;
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(parse_err(loc, format!("duplicate entry for ({i}, {j}, {k})")));
        }
        out[(i * n + j) * n + k] = scalar(f, loc, c)?;
    }
    Ok(out)
}

impl AlgebraFile {
    pub fn from_algebra(h: &WeakHopfAlgebra) -> Self {
        let n = h.dim();
        let sparse3 = |c: &[Scalar]| {
            let mut v = Vec::new();
            for (idx, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    v.push((idx / (n * n), (idx / n) % n, idx % n, x.to_string()));
                }
            }
            v
        };
        let s = h.antipode_matrix();
        let mut antipode = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !s[(i, j)].is_zero() {
                    antipode.push((i, j, s[(i, j)].to_string()));
                }
            }
        }
        AlgebraFile {
            version: FORMAT_VERSION,
            field: h.field().to_string(),
            dim: n,
            basis: h.labels().to_vec(),
            mult: sparse3(h.algebra().mult_constants()),
            comult: sparse3(h.comult_constants()),
            unit: h.one().iter().map(|x| x.to_string()).collect(),
            counit: h.counit_vec().iter().map(|x| x.to_string()).collect(),
            antipode,
        }
    }

    pub fn to_algebra(&self) -> Result<WeakHopfAlgebra> {
        if self.version != FORMAT_VERSION {
            return Err(parse_err("version", format!("unsupported version {}, expected {FORMAT_VERSION}", self.version)));
        }
        let f = Field::parse(&self.field).map_err(|e| parse_err("field", e.to_string()))?;
        let n = self.dim;
        if n == 0 {
            return Err(parse_err("dim", "dimension must be positive"));
        }
        if self.basis.len() != n {
            return Err(parse_err("basis", format!("{} labels but dim is {n}", self.basis.len())));
        }
        let mult = triples(f, "mult", &self.mult, n)?;
        let comult = triples(f, "comult", &self.comult, n)?;
        let unit = dense(f, "unit", &self.unit, n)?;
        let counit = dense(f, "counit", &self.counit, n)?;
        let mut s = Matrix::zeros(f, n, n);
        let mut seen = BTreeSet::new();
        for (e, (i, j, c)) in self.antipode.iter().enumerate() {
            let loc = format!("antipode[{e}]");
            index(&loc, *i, n)?;
            index(&loc, *j, n)?;
            if !seen.insert((*i, *j)) {
                return Err(parse_err(loc, format!("duplicate entry for ({i}, {j})")));
            }
            s[(*i, *j)] = scalar(f, loc, c)?;
        }
        let alg = Algebra::new_unchecked(f, n, mult, unit).map_err(|e| parse_err("mult", e.to_string()))?;
        WeakHopfAlgebra::new(alg, self.basis.clone(), comult, counit, s).map_err(|e| parse_err("basis", e.to_string()))
    }
}

pub fn to_json(h: &WeakHopfAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_algebra(h)).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<WeakHopfAlgebra> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    file.to_algebra()
}

pub fn save(h: &WeakHopfAlgebra, path: &Path) -> Result<()> {
    std::fs::write(path, to_json(h)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path) -> Result<WeakHopfAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn roundtrip_catalog() {
        for f in [Field::Rational, Field::Prime(5)] {
            for name in catalog::CATALOG {
                let h = catalog::builtin(name, f).unwrap();
                assert_eq!(from_json(&to_json(&h)).unwrap(), h, "{name}");
            }
        }
    }

    fn sweedler_text() -> String {
        to_json(&catalog::sweedler(Field::Rational).unwrap())
    }

    fn location(r: Result<WeakHopfAlgebra>) -> String {
        match r {
            Err(Error::Parse { location, .. }) => location,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn zero_denominator_rejected() {
        let mut file = AlgebraFile::from_algebra(&catalog::sweedler(Field::Rational).unwrap());
        file.counit[1] = "1/0".into();
        assert_eq!(location(file.to_algebra()), "counit[1]");
    }

    #[test]
    fn duplicate_entry_rejected() {
        let mut file = AlgebraFile::from_algebra(&catalog::sweedler(Field::Rational).unwrap());
        let first = file.mult[0].clone();
        file.mult.push(first);
        let loc = location(file.to_algebra());
        assert_eq!(loc, format!("mult[{}]", file.mult.len() - 1));
    }

    #[test]
    fn unknown_field_rejected() {
        let t = sweedler_text().replacen("{", "{\n  \"extra\": 1,", 1);
        assert!(location(from_json(&t)).starts_with("line 2"));
    }

    #[test]
    fn out_of_range_index_rejected() {
        let mut file = AlgebraFile::from_algebra(&catalog::kc2(Field::Rational).unwrap());
        file.antipode.push((0, 7, "1".into()));
        assert_eq!(location(file.to_algebra()), format!("antipode[{}]", file.antipode.len() - 1));
    }
}
