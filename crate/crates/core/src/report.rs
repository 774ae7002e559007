//! Structured pass/fail results with counterexample witnesses.

use serde::Serialize;

use crate::la::Scalar;

const MAX_WITNESSES_PER_SECTION: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub axiom: String,
    pub checked: usize,
    pub failed: usize,
}

/// `passed` holds exactly when no witness was recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub passed: bool,
    pub sections: Vec<Section>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerificationReport {
            check_name: name.into(),
            passed: true,
            sections: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn section_mut(&mut self, axiom: &str) -> &mut Section {
        if let Some(i) = self.sections.iter().position(|s| s.axiom == axiom) {
            &mut self.sections[i]
        } else {
            self.sections.push(Section { axiom: axiom.to_string(), checked: 0, failed: 0 });
            self.sections.last_mut().unwrap()
        }
    }

    /// Records one checked instance; the strings are only built on failure.
    pub fn record(
        &mut self,
        axiom: &str,
        indices: &[usize],
        ok: bool,
        left: impl FnOnce() -> String,
        right: impl FnOnce() -> String,
    ) {
        let sec = self.section_mut(axiom);
        sec.checked += 1;
        if ok {
            return;
        }
        sec.failed += 1;
        let keep = sec.failed <= MAX_WITNESSES_PER_SECTION;
        self.passed = false;
        if keep {
            self.witnesses.push(Witness { axiom: axiom.to_string(), indices: indices.to_vec(), left: left(), right: right() });
        }
    }

    /// Records a yes/no claim with a description used when it fails.
    pub fn claim(&mut self, axiom: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.record(axiom, &[], ok, detail, || "holds".to_string());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Appends another report's sections, prefixing axiom names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for s in other.sections {
            let name = format!("{prefix}{}", s.axiom);
            let sec = self.section_mut(&name);
            sec.checked += s.checked;
            sec.failed += s.failed;
        }
        for mut w in other.witnesses {
            w.axiom = format!("{prefix}{}", w.axiom);
            self.witnesses.push(w);
        }
        self.notes.extend(other.notes);
        self.passed = self.passed && other.passed;
    }

    pub fn failed_sections(&self) -> Vec<&str> {
        self.sections.iter().filter(|s| s.failed > 0).map(|s| s.axiom.as_str()).collect()
    }

    pub fn section_passed(&self, axiom: &str) -> Option<bool> {
        self.sections.iter().find(|s| s.axiom == axiom).map(|s| s.failed == 0)
    }
}

/// Renders a coordinate vector as `c*label + ...`.
pub fn format_element(labels: &[String], v: &[Scalar]) -> String {
    format_terms(v.iter().enumerate().map(|(i, c)| (labels[i].clone(), c)))
}

/// Renders an element of the k-fold tensor power.
pub fn format_tensor(labels: &[String], k: usize, v: &[Scalar]) -> String {
    let n = labels.len();
    format_terms(v.iter().enumerate().map(|(mut idx, c)| {
        let mut parts = vec![String::new(); k];
        for t in (0..k).rev() {
            parts[t] = labels[idx % n].clone();
            idx /= n;
        }
        (parts.join("⊗"), c)
    }))
}

fn format_terms<'a>(terms: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        match (out.is_empty(), s.strip_prefix('-')) {
            (true, _) => out.push_str(&format!("{s}*{label}")),
            (false, Some(abs)) => out.push_str(&format!(" - {abs}*{label}")),
            (false, None) => out.push_str(&format!(" + {s}*{label}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders a plain vector as `[a, b, ...]`.
pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::la::Field;

    #[test]
    fn formatting() {
        let q = Field::Rational;
        let labels: Vec<String> = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
        assert_eq!(format_element(&labels, &[q.zero(), q.zero(), q.one(), q.one()]), "1*x + 1*gx");
        assert_eq!(format_element(&labels, &[q.zero(), q.zero(), q.one(), -q.one()]), "1*x - 1*gx");
        assert_eq!(format_element(&labels, &vec![q.zero(); 4]), "0");
        let two: Vec<String> = ["1", "g"].iter().map(|s| s.to_string()).collect();
        assert_eq!(format_tensor(&two, 2, &[q.zero(), q.zero(), q.zero(), q.ratio(1, 2)]), "1/2*g⊗g");
    }

    #[test]
    fn report_bookkeeping() {
        let mut r = VerificationReport::new("t");
        r.record("a", &[0], true, String::new, String::new);
        assert!(r.passed);
        r.record("b", &[1, 2], false, || "x".into(), || "y".into());
        assert!(!r.passed);
        assert_eq!(r.failed_sections(), vec!["b"]);
        assert_eq!(r.section_passed("a"), Some(true));
        assert_eq!(r.witnesses.len(), 1);
    }
}
