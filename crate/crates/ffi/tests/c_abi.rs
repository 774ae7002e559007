use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use weak_hopf_ffi::*;

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(manifest().join("include/wha.h")).unwrap();
    for name in [
        "wha_builtin",
        "wha_load",
        "wha_from_json",
        "wha_free",
        "wha_dim",
        "wha_verify",
        "wha_integral_dims",
        "wha_is_unimodular",
        "wha_nakayama",
        "wha_to_json",
        "wha_string_free",
        "wha_last_error",
        "typedef struct WhaAlgebra WhaAlgebra",
        "WHA_STATUS_CHECK_FAILED = 1",
        "WHA_STATUS_INPUT_ERROR = 2",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn corrupted_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let c = weak_hopf::corruption::CORRUPTIONS[0];
    let path = dir.path().join("bad.wha.json");
    std::fs::write(&path, serde_json::to_string(&c.apply(weak_hopf::Field::Rational).unwrap()).unwrap()).unwrap();
    let p = CString::new(path.to_str().unwrap()).unwrap();
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(wha_load(p.as_ptr(), &mut h), WhaStatus::Ok);
        assert_eq!(wha_verify(h), WhaStatus::CheckFailed);
        let msg = CStr::from_ptr(wha_last_error()).to_str().unwrap();
        assert!(msg.contains(c.target), "{msg}");
        wha_free(h);
        let missing = CString::new(dir.path().join("missing.wha.json").to_str().unwrap()).unwrap();
        assert_eq!(wha_load(missing.as_ptr(), &mut h), WhaStatus::InputError);
    }
}

/// The archive cargo builds next to this test binary.
fn static_lib() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap();
    [deps.join("libweak_hopf_ffi.a"), deps.parent().unwrap().join("libweak_hopf_ffi.a")]
        .into_iter()
        .find(|p| p.is_file())
        .expect("libweak_hopf_ffi.a next to the test binary")
}

fn have(tool: &str) -> bool {
    Command::new(tool).arg("--version").output().is_ok_and(|o| o.status.success())
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = static_lib();
    if !have("cc") {
        eprintln!("no C compiler; skipping");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let src = manifest().join("tests/c/smoke.c");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(manifest().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(Path::new(&exe)).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
