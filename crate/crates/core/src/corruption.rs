//! Single-entry corruptions of catalog algebras, one per targeted axiom.

use crate::catalog;
use crate::error::Result;
use crate::io::AlgebraFile;
use crate::la::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Entry {
    Mult(usize, usize, usize),
    Comult(usize, usize, usize),
    Unit(usize),
    Counit(usize),
    /// `(i, j)`: coefficient of `b_i` in `S(b_j)`.
    Antipode(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corruption {
    pub target: &'static str,
    pub base: &'static str,
    pub entry: Entry,
    pub value: &'static str,
    /// Every section of `verify_all` that fails afterwards.
    pub failing: &'static [&'static str],
}

fn set3(list: &mut Vec<(usize, usize, usize, String)>, (i, j, k): (usize, usize, usize), value: &str) {
    list.retain(|e| (e.0, e.1, e.2) != (i, j, k));
    if value != "0" {
        list.push((i, j, k, value.to_string()));
        list.sort();
    }
}

impl Corruption {
    pub fn apply(&self, field: Field) -> Result<AlgebraFile> {
        let mut file = AlgebraFile::from_algebra(&catalog::builtin(self.base, field)?);
        let v = self.value;
        match self.entry {
            Entry::Mult(i, j, k) => set3(&mut file.mult, (i, j, k), v),
            Entry::Comult(i, j, k) => set3(&mut file.comult, (i, j, k), v),
            Entry::Unit(i) => file.unit[i] = v.to_string(),
            Entry::Counit(i) => file.counit[i] = v.to_string(),
            Entry::Antipode(i, j) => {
                file.antipode.retain(|e| (e.0, e.1) != (i, j));
                if v != "0" {
                    file.antipode.push((i, j, v.to_string()));
                    file.antipode.sort();
                }
            }
        }
        Ok(file)
    }
}

pub const CORRUPTIONS: [Corruption; 8] = [
    Corruption {
        target: "associativity",
        base: "sweedler",
        entry: Entry::Mult(2, 2, 2),
        value: "1",
        failing: &["associativity", "multiplicativity", "anti_multiplicative"],
    },
    Corruption {
        target: "unit",
        base: "pairgpd2",
        entry: Entry::Unit(0),
        value: "0",
        failing: &["unit", "antipode_target", "antipode_source"],
    },
    Corruption {
        target: "coassociativity",
        base: "sweedler",
        entry: Entry::Comult(1, 2, 2),
        value: "1",
        failing: &["coassociativity", "multiplicativity", "anti_comultiplicative"],
    },
    Corruption {
        target: "counit",
        base: "k",
        entry: Entry::Counit(0),
        value: "0",
        failing: &["counit", "antipode_target", "antipode_source"],
    },
    Corruption {
        target: "multiplicativity",
        base: "kc2",
        entry: Entry::Mult(1, 1, 0),
        value: "2",
        failing: &["multiplicativity", "weak_counit", "antipode_target", "antipode_source", "antipode_sandwich"],
    },
    Corruption {
        target: "weak_unitality",
        base: "fun-c2",
        entry: Entry::Comult(0, 1, 1),
        value: "0",
        failing: &["weak_unitality", "antipode_target", "antipode_source", "antipode_sandwich"],
    },
    Corruption {
        target: "weak_counit",
        base: "k",
        entry: Entry::Comult(0, 0, 0),
        value: "0",
        failing: &["counit", "weak_counit", "antipode_sandwich"],
    },
    Corruption {
        target: "antipode_sandwich",
        base: "sweedler",
        entry: Entry::Antipode(0, 0),
        value: "2",
        failing: &[
            "antipode_target",
            "antipode_source",
            "antipode_sandwich",
            "anti_multiplicative",
            "anti_comultiplicative",
            "antipode_counital_s",
            "antipode_counital_t",
        ],
    },
];
