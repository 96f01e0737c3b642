mod common;

use std::fs;

#[test]
fn golden_outputs_match() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for case in common::cases() {
        let got = common::render(&case);
        if update {
            fs::write(case.with_extension("out"), &got).unwrap();
        } else if got != common::expected(&case) {
            mismatched.push(format!("{}:\n{got}", case.display()));
        }
    }
    assert!(mismatched.is_empty(), "golden mismatches:\n{}", mismatched.join("\n"));
}

#[test]
fn output_is_deterministic() {
    for case in common::cases() {
        assert_eq!(common::render(&case), common::render(&case), "{}", case.display());
    }
}

#[test]
fn binary_matches_library() {
    let dir = common::golden_dir();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_homsuper"))
        .args(["weight", "--chart"])
        .arg(dir.join("charts/xy.chart"))
        .arg("x^2*y")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "degree: even, 0\n");

    let out = std::process::Command::new(env!("CARGO_BIN_EXE_homsuper"))
        .args(["supergroup", "GL11", "--a=1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("result: all pass\n"));

    let out = std::process::Command::new(env!("CARGO_BIN_EXE_homsuper"))
        .args(["poincare", "--chart", "no-such-file", "x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = std::process::Command::new(env!("CARGO_BIN_EXE_homsuper")).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
