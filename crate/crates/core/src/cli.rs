//! The `wha` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use crate::catalog::{self, CATALOG};
use crate::corruption::CORRUPTIONS;
use crate::error::{Error, Result};
use crate::hopf_module::{free_hopf_module, free_module_twist_iso, fundamental_isos};
use crate::integrals::{check_integral_invertibility, left_integrals, right_integrals, unimodularity};
use crate::io;
use crate::la::Field;
use crate::nakayama::{
    automorphism_candidate, check_enveloping_idempotents, check_power_formula, check_twist_invertibility, nakayama_bimodule,
    non_bijective_endomorphisms, DEFAULT_MAX_DIM,
};
use crate::rep::{s_square, simple_modules, unit_object, ModuleRep, Side};
use crate::report::{format_element, format_tensor, VerificationReport};
use crate::wha::{
    antipode_order, counital, counital::check_counital, decompose, permutation_isomorphism, verify_all, verify_antipode,
    verify_weak_bialgebra, WeakHopfAlgebra,
};

pub const SCHEMA: &str = "wha-report/1";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const ORDER_BOUND: u32 = 64;

#[derive(Debug, Parser)]
#[command(name = "wha", version, about = "Exact checks for finite-dimensional weak Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// `Q` or `Fp:<p>`; builtins are built over it, files must agree with it.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Emit a machine-readable report on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest dimension for which the Nakayama bimodule is computed.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_dim: u64,
    /// Also check the power formula for `U^n`.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub power_n: Option<u64>,
    /// Directory for files written by `decompose`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weak bialgebra and antipode axioms.
    Verify { input: String },
    /// Counital maps, counital subalgebras and the antipode.
    Analyze { input: String },
    /// Both integral spaces, unimodularity and their invertibility.
    Integrals { input: String },
    /// The Nakayama bimodule and its integral description.
    Nakayama { input: String },
    /// Split into weak Hopf summands and write one file per summand.
    Decompose { input: String },
    /// Full regression over the builtin catalog.
    Check,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Analyze { .. } => "analyze",
            Command::Integrals { .. } => "integrals",
            Command::Nakayama { .. } => "nakayama",
            Command::Decompose { .. } => "decompose",
            Command::Check => "check",
        }
    }
}

/// One algebra (or fixture group) and what was established about it.
#[derive(Clone, Debug, Serialize)]
pub struct Subject {
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub passed: bool,
    pub facts: BTreeMap<String, Value>,
    pub reports: Vec<VerificationReport>,
}

impl Subject {
    fn new(name: &str, h: &WeakHopfAlgebra) -> Self {
        Subject {
            name: name.to_string(),
            field: h.field().to_string(),
            dim: h.dim(),
            passed: true,
            facts: BTreeMap::new(),
            reports: Vec::new(),
        }
    }

    fn fact(&mut self, key: &str, v: impl Serialize) {
        self.facts.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    fn push(&mut self, r: VerificationReport) {
        self.passed &= r.passed;
        self.reports.push(r);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Output {
    pub schema: &'static str,
    pub command: String,
    pub passed: bool,
    pub exit_code: i32,
    pub subjects: Vec<Subject>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub written: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

/// Exit status with everything the process would print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Io(_)
        | Error::InvalidField(_)
        | Error::InvalidData(_)
        | Error::Scalar { .. }
        | Error::FieldMismatch(..)
        | Error::CapExceeded { .. }
        | Error::Unsupported(_) => EXIT_INPUT,
        _ => EXIT_FAIL,
    }
}

pub fn run<I, T>(args: I) -> Run
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Run { code: EXIT_PASS, stdout: text, stderr: String::new() }
                }
                _ => Run { code: EXIT_INPUT, stdout: String::new(), stderr: text },
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Run {
    let mut written = Vec::new();
    let result = dispatch(cli, &mut written);
    let (subjects, error) = match result {
        Ok(s) => (s, None),
        Err(e) => (Vec::new(), Some(e)),
    };
    let passed = error.is_none() && subjects.iter().all(|s| s.passed);
    let code = match &error {
        Some(e) => exit_code(e),
        None if passed => EXIT_PASS,
        None => EXIT_FAIL,
    };
    let out = Output {
        schema: SCHEMA,
        command: cli.command.name().to_string(),
        passed,
        exit_code: code,
        subjects,
        written,
        error: error.as_ref().map(|e| ErrorInfo { kind: e.kind().to_string(), message: e.to_string() }),
    };
    if cli.json {
        let mut s = serde_json::to_string_pretty(&out).expect("serializable");
        s.push('\n');
        Run { code, stdout: s, stderr: String::new() }
    } else {
        let stderr = error.map(|e| format!("error: {e}\n")).unwrap_or_default();
        Run { code, stdout: render_text(&out), stderr }
    }
}

fn dispatch(cli: &Cli, written: &mut Vec<String>) -> Result<Vec<Subject>> {
    let field = cli.field.as_deref().map(Field::parse).transpose()?;
    let cap = cli.max_dim as usize;
    let power = cli.power_n.map(|n| n as usize);
    match &cli.command {
        Command::Verify { input } => Ok(vec![verify_cmd(input, &resolve(input, field)?)]),
        Command::Analyze { input } => Ok(vec![analyze_cmd(input, &resolve(input, field)?)?]),
        Command::Integrals { input } => Ok(vec![integrals_cmd(input, &resolve(input, field)?)?]),
        Command::Nakayama { input } => Ok(vec![nakayama_cmd(input, &resolve(input, field)?, cap, power)?]),
        Command::Decompose { input } => {
            let h = resolve(input, field)?;
            Ok(vec![decompose_cmd(input, &h, cli.out.as_deref(), written)?])
        }
        Command::Check => check_cmd(field.unwrap_or(Field::Rational), cap, power),
    }
}

/// A file path if one exists, otherwise a builtin name.
pub fn resolve(input: &str, field: Option<Field>) -> Result<WeakHopfAlgebra> {
    let path = Path::new(input);
    if path.is_file() {
        let h = io::load(path)?;
        if let Some(f) = field {
            if f != h.field() {
                return Err(Error::FieldMismatch(f.to_string(), h.field().to_string()));
            }
        }
        return Ok(h);
    }
    catalog::builtin(input, field.unwrap_or(Field::Rational)).map_err(|e| match e {
        Error::InvalidData(m) => Error::InvalidData(format!("{m}; not a readable file either")),
        other => other,
    })
}

fn verify_cmd(name: &str, h: &WeakHopfAlgebra) -> Subject {
    let mut s = Subject::new(name, h);
    s.push(verify_weak_bialgebra(h));
    s.push(verify_antipode(h));
    s
}

/// Runs the axiom suites first; the remaining commands only make sense on a weak Hopf algebra.
fn axioms_hold(s: &mut Subject, h: &WeakHopfAlgebra) -> bool {
    let r = verify_all(h);
    let ok = r.passed;
    s.push(r);
    ok
}

fn span(labels: &[String], sub: &crate::la::Subspace) -> Vec<String> {
    sub.vectors().iter().map(|v| format_element(labels, v)).collect()
}

fn analyze_cmd(name: &str, h: &WeakHopfAlgebra) -> Result<Subject> {
    let mut s = Subject::new(name, h);
    if !axioms_hold(&mut s, h) {
        return Ok(s);
    }
    let labels = h.labels();
    let c = counital(h)?;
    s.fact("basis", labels);
    s.fact("delta_one", format_tensor(labels, 2, &h.delta_one()));
    s.fact("source_subalgebra", span(labels, &c.hs));
    s.fact("target_subalgebra", span(labels, &c.ht));
    s.fact("antipode_bijective", h.antipode_inverse().is_some());
    s.fact("antipode_order", antipode_order(h, ORDER_BOUND));
    s.fact("antipode_square_identity", s_square(h).is_identity());
    s.push(check_counital(h));
    Ok(s)
}

fn integrals_cmd(name: &str, h: &WeakHopfAlgebra) -> Result<Subject> {
    let mut s = Subject::new(name, h);
    if !axioms_hold(&mut s, h) {
        return Ok(s);
    }
    integral_facts(&mut s, h)?;
    s.push(check_integral_invertibility(h)?);
    Ok(s)
}

fn integral_facts(s: &mut Subject, h: &WeakHopfAlgebra) -> Result<()> {
    let l = left_integrals(h)?;
    let r = right_integrals(h)?;
    s.fact("left_integrals", l.describe(h.labels()));
    s.fact("right_integrals", r.describe(h.labels()));
    s.fact("unimodular", unimodularity(h)?.unimodular);
    Ok(())
}

fn nakayama_cmd(name: &str, h: &WeakHopfAlgebra, cap: usize, power: Option<usize>) -> Result<Subject> {
    let mut s = Subject::new(name, h);
    if !axioms_hold(&mut s, h) {
        return Ok(s);
    }
    nakayama_into(&mut s, h, cap, power)?;
    Ok(s)
}

fn nakayama_into(s: &mut Subject, h: &WeakHopfAlgebra, cap: usize, power: Option<usize>) -> Result<()> {
    let res = nakayama_bimodule(h, cap)?;
    s.fact("nakayama_dim", res.dim);
    s.fact("nakayama_invertible", res.invertible);
    s.fact("nakayama_routes_agree", res.routes_agree.exists);
    s.fact("nakayama_integral_form", res.iso_to_integral_form.exists);
    s.fact("nakayama_twist", automorphism_candidate(h, &res.u)?);
    s.push(res.report);
    s.push(check_enveloping_idempotents(h)?);
    if let Some(n) = power {
        s.push(check_power_formula(h, n, cap)?);
    }
    Ok(())
}

fn file_stem(input: &str) -> String {
    let path = Path::new(input);
    if path.is_file() {
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("algebra");
        return name.strip_suffix(".wha.json").or_else(|| name.strip_suffix(".json")).unwrap_or(name).to_string();
    }
    input.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect()
}

fn decompose_cmd(name: &str, h: &WeakHopfAlgebra, out: Option<&Path>, written: &mut Vec<String>) -> Result<Subject> {
    let mut s = Subject::new(name, h);
    if !axioms_hold(&mut s, h) {
        return Ok(s);
    }
    let d = decompose(h)?;
    s.fact("decomposition", d.summary(h.labels()));
    let dir = match out {
        Some(d) => d.to_path_buf(),
        None => Path::new(name).parent().filter(|_| Path::new(name).is_file()).map(Path::to_path_buf).unwrap_or_default(),
    };
    if !dir.as_os_str().is_empty() {
        std::fs::create_dir_all(&dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    }
    let stem = file_stem(name);
    let mut r = VerificationReport::new("summands");
    for (i, part) in d.summands.iter().enumerate() {
        let v = verify_all(&part.algebra);
        r.claim(&format!("summand_{i}_axioms"), v.passed, || format!("{:?}", v.failed_sections()));
        let path = dir.join(format!("{stem}.summand{i}.wha.json"));
        io::save(&part.algebra, &path)?;
        written.push(path.display().to_string());
    }
    s.push(r);
    Ok(s)
}

fn generating_modules(h: &WeakHopfAlgebra) -> Result<Vec<(String, ModuleRep)>> {
    let mut ws = vec![
        ("unit".to_string(), unit_object(h, Side::Left)),
        ("regular".to_string(), ModuleRep::regular(h.algebra(), Side::Left)),
    ];
    for (i, m) in simple_modules(h.algebra(), Side::Left)?.into_iter().enumerate() {
        ws.push((format!("simple{i}"), m));
    }
    Ok(ws)
}

fn hopf_module_reports(h: &WeakHopfAlgebra) -> Result<(VerificationReport, VerificationReport)> {
    let mut fund = VerificationReport::new("fundamental_theorem");
    let mut twist = VerificationReport::new("free_module_twist");
    for (label, w) in generating_modules(h)? {
        let m = free_hopf_module(h, &w)?;
        let iso = fundamental_isos(h, &m)?;
        fund.claim(&format!("{label}/coinvariant_dim"), iso.coinvariants.dim() == w.dim, || {
            format!("{} vs {}", iso.coinvariants.dim(), w.dim)
        });
        fund.absorb(&format!("{label}/"), iso.report);
        twist.absorb(&format!("{label}/"), free_module_twist_iso(h, &w)?);
    }
    Ok((fund, twist))
}

fn roundtrip_report(h: &WeakHopfAlgebra, a: &WeakHopfAlgebra, b: &WeakHopfAlgebra) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("decompose_roundtrip");
    let d = decompose(h)?;
    r.claim("two_summands", d.summands.len() == 2, || format!("{} summands", d.summands.len()));
    if d.summands.len() == 2 {
        let (x, y) = (&d.summands[0].algebra, &d.summands[1].algebra);
        let matched = (permutation_isomorphism(x, a).is_some() && permutation_isomorphism(y, b).is_some())
            || (permutation_isomorphism(x, b).is_some() && permutation_isomorphism(y, a).is_some());
        r.claim("summands_match", matched, || "summands are not the original factors".into());
    }
    for (i, part) in d.summands.iter().enumerate() {
        let e = &part.idempotent;
        let delta = h.delta(e);
        let n = h.dim();
        let inside = (0..n * n).all(|jk| delta[jk].is_zero() || in_block(h, part, jk));
        r.claim(&format!("summand_{i}_coproduct"), inside, || "Δ(e) leaves e·H ⊗ e·H".into());
        r.claim(&format!("summand_{i}_antipode"), &h.antipode(e) == e, || "S(e) ≠ e".into());
    }
    Ok(r)
}

/// Whether the basis tensor `b_j⊗b_k` lies in `eH⊗eH`.
fn in_block(h: &WeakHopfAlgebra, part: &crate::wha::Summand, jk: usize) -> bool {
    let n = h.dim();
    part.space.contains(&h.basis_vec(jk / n)) && part.space.contains(&h.basis_vec(jk % n))
}

fn catalog_subject(name: &str, field: Field, cap: usize, power: Option<usize>) -> Result<Subject> {
    let h = catalog::builtin(name, field)?;
    let mut s = Subject::new(name, &h);
    if !axioms_hold(&mut s, &h) {
        return Ok(s);
    }
    s.push(check_counital(&h));
    integral_facts(&mut s, &h)?;
    s.push(check_integral_invertibility(&h)?);
    let (fund, twist) = hopf_module_reports(&h)?;
    s.push(fund);
    s.push(twist);

    let mut bij = VerificationReport::new("antipode_bijectivity");
    bij.claim("antipode_invertible", h.antipode_inverse().is_some(), || "S is singular".into());
    let (inv, bijective) = check_twist_invertibility(h.algebra(), &s_square(&h))?;
    bij.claim("s_square_twist_biconditional", inv == bijective, || format!("invertible {inv}, bijective {bijective}"));
    s.push(bij);

    if h.dim() <= cap {
        nakayama_into(&mut s, &h, cap, power)?;
    } else {
        s.fact("nakayama_skipped", format!("dim {} > max-dim {cap}", h.dim()));
    }
    if let Some((a, b)) = catalog::sum_operands(name) {
        let (a, b) = (catalog::builtin(a, field)?, catalog::builtin(b, field)?);
        s.push(roundtrip_report(&h, &a, &b)?);
    }
    Ok(s)
}

fn fixtures_subject(field: Field) -> Result<Subject> {
    let k = catalog::base_field(field)?;
    let mut s = Subject::new("fixtures", &k);
    s.dim = 0;
    let mut corr = VerificationReport::new("corruptions");
    for c in CORRUPTIONS {
        let h = c.apply(field)?.to_algebra()?;
        let r = verify_all(&h);
        let failed = r.failed_sections();
        corr.claim(&format!("{}_detected", c.target), r.section_passed(c.target) == Some(false), || format!("{failed:?}"));
        corr.claim(&format!("{}_sections", c.target), failed == c.failing, || format!("{failed:?}"));
    }
    s.push(corr);
    let mut twist = VerificationReport::new("non_bijective_twists");
    for (name, sigma) in non_bijective_endomorphisms(field) {
        let h = catalog::builtin(name, field)?;
        let (inv, bijective) = check_twist_invertibility(h.algebra(), &sigma)?;
        twist.claim(&format!("{name}_biconditional"), inv == bijective && !bijective, || {
            format!("invertible {inv}, bijective {bijective}")
        });
    }
    s.push(twist);
    Ok(s)
}

fn check_cmd(field: Field, cap: usize, power: Option<usize>) -> Result<Vec<Subject>> {
    let mut out = Vec::new();
    for name in CATALOG {
        out.push(catalog_subject(name, field, cap, power)?);
    }
    out.push(fixtures_subject(field)?);
    Ok(out)
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) if a.iter().all(Value::is_string) => {
            format!("[{}]", a.iter().map(render_value).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn render_text(out: &Output) -> String {
    let mut t = String::new();
    for s in &out.subjects {
        t.push_str(&format!("{} ({}, dim {}): {}\n", s.name, s.field, s.dim, status(s.passed)));
        for (k, v) in &s.facts {
            t.push_str(&format!("  {k}: {}\n", render_value(v)));
        }
        for r in &s.reports {
            t.push_str(&format!("  [{}] {}\n", status(r.passed), r.check_name));
            for sec in r.sections.iter().filter(|sec| sec.failed > 0) {
                t.push_str(&format!("    {}: {} of {} failed\n", sec.axiom, sec.failed, sec.checked));
            }
            for w in &r.witnesses {
                t.push_str(&format!("      {} {:?}: {} ≠ {}\n", w.axiom, w.indices, w.left, w.right));
            }
            for n in &r.notes {
                t.push_str(&format!("    note: {n}\n"));
            }
        }
    }
    for w in &out.written {
        t.push_str(&format!("wrote {w}\n"));
    }
    if out.error.is_none() {
        t.push_str(&format!("{}: {}\n", out.command, status(out.passed)));
    }
    t
}
