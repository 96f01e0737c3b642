use std::fs;
use std::path::{Path, PathBuf};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// All `.args` cases, sorted by name.
pub fn cases() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "args"))
        .collect();
    v.sort();
    v
}

/// Runs one case (one argument per line, chart paths relative to the
/// golden directory) and renders stdout, stderr and the exit code.
pub fn render(args_file: &Path) -> String {
    let dir = golden_dir();
    let prefix = format!("{}/", dir.display());
    let args: Vec<String> = fs::read_to_string(args_file)
        .unwrap()
        .lines()
        .map(|a| match a.strip_prefix("charts/") {
            Some(rest) => format!("{prefix}charts/{rest}"),
            None => a.to_string(),
        })
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = homsuper_cli::run_args(std::iter::once("homsuper".to_string()).chain(args), &mut out, &mut err);
    let mut text = String::from_utf8(out).unwrap();
    let err = String::from_utf8(err).unwrap();
    if !err.is_empty() {
        text.push_str("--- stderr\n");
        text.push_str(&err);
    }
    text.push_str(&format!("--- exit {code}\n"));
    text.replace(&prefix, "")
}

pub fn expected(args_file: &Path) -> String {
    fs::read_to_string(args_file.with_extension("out")).unwrap_or_default()
}
