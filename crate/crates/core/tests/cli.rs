use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use weak_hopf::catalog;
use weak_hopf::corruption::CORRUPTIONS;
use weak_hopf::io;
use weak_hopf::wha::permutation_isomorphism;
use weak_hopf::Field;

fn wha(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wha")).current_dir(dir).args(args).output().expect("runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn corrupted_sweedler_file_fails_with_named_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let c = CORRUPTIONS.iter().find(|c| c.base == "sweedler" && c.target == "associativity").unwrap();
    let text = serde_json::to_string_pretty(&c.apply(Field::Rational).unwrap()).unwrap();
    std::fs::write(dir.path().join("bad.wha.json"), text).unwrap();
    let o = wha(dir.path(), &["verify", "bad.wha.json", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["passed"], false);
    let witnesses = v["subjects"][0]["reports"][0]["witnesses"].as_array().unwrap();
    assert!(witnesses.iter().any(|w| w["axiom"] == "associativity"));
}

#[test]
fn analyze_trivial_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let o = wha(dir.path(), &["analyze", "k", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], "wha-report/1");
    assert_eq!(v["subjects"][0]["facts"]["antipode_order"], 1);
    assert_eq!(v["subjects"][0]["facts"]["target_subalgebra"][0], "1*1");
}

#[test]
fn parse_errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let mut file = weak_hopf::io::AlgebraFile::from_algebra(&catalog::kc2(Field::Rational).unwrap());
    file.unit[1] = "1/0".into();
    std::fs::write(dir.path().join("z.wha.json"), serde_json::to_string(&file).unwrap()).unwrap();
    let o = wha(dir.path(), &["verify", "z.wha.json", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["error"]["kind"], "parse");
    assert!(v["error"]["message"].as_str().unwrap().contains("unit[1]"));
}

#[test]
fn invalid_flags_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["nakayama", "kc2", "--max-dim", "0"][..],
        &["nakayama", "kc2", "--power-n", "0"],
        &["verify", "kc2", "--field", "Fp:4"],
        &["verify", "no-such-algebra"],
        &["nakayama", "pairgpd3"],
    ] {
        assert_eq!(wha(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn file_field_must_match_flag() {
    let dir = tempfile::tempdir().unwrap();
    io::save(&catalog::kc2(Field::Rational).unwrap(), &dir.path().join("a.wha.json")).unwrap();
    assert_eq!(wha(dir.path(), &["verify", "a.wha.json"]).status.code(), Some(0));
    assert_eq!(wha(dir.path(), &["verify", "a.wha.json", "--field", "Fp:5"]).status.code(), Some(2));
}

#[test]
fn decompose_writes_summands_next_to_input() {
    let dir = tempfile::tempdir().unwrap();
    let h = catalog::builtin("sum:kc2,pairgpd2", Field::Rational).unwrap();
    io::save(&h, &dir.path().join("both.wha.json")).unwrap();
    let o = wha(dir.path(), &["decompose", "both.wha.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let a = io::load(&dir.path().join("both.summand0.wha.json")).unwrap();
    let b = io::load(&dir.path().join("both.summand1.wha.json")).unwrap();
    assert!(permutation_isomorphism(&a, &catalog::kc2(Field::Rational).unwrap()).is_some());
    assert!(permutation_isomorphism(&b, &catalog::pair_groupoid(Field::Rational, 2).unwrap()).is_some());
}

#[test]
fn nakayama_with_power() {
    let dir = tempfile::tempdir().unwrap();
    let o = wha(dir.path(), &["nakayama", "sweedler", "--power-n", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let names: Vec<&str> =
        v["subjects"][0]["reports"].as_array().unwrap().iter().map(|r| r["check_name"].as_str().unwrap()).collect();
    assert!(names.contains(&"power_formula"));
    assert_eq!(v["subjects"][0]["facts"]["nakayama_twist"]["is_automorphism"], true);
}

#[test]
fn check_over_a_prime_field() {
    let dir = tempfile::tempdir().unwrap();
    let o = wha(dir.path(), &["check", "--field", "Fp:5", "--max-dim", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
}
