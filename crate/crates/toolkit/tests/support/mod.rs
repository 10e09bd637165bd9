//! Runs the `rii` binary and reads what it leaves behind.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub elapsed: Duration,
}

pub fn rii(args: &[&str]) -> Run {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_rii"))
        .args(args)
        .output()
        .expect("spawn rii");
    Run {
        code: out.status.code().expect("rii exited by signal"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        elapsed: started.elapsed(),
    }
}

/// Runs with `--out dir` appended.
pub fn rii_into(dir: &Path, args: &[&str]) -> Run {
    let mut all = args.to_vec();
    let dir = dir.to_str().expect("utf-8 temp path");
    all.extend(["--out", dir]);
    rii(&all)
}

pub fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name]
        .iter()
        .collect();
    p.to_str().expect("utf-8 fixture path").to_string()
}

pub fn read_json(path: &Path) -> Value {
    let text = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{path:?}: {e}"))
}

pub fn manifest(dir: &Path) -> Value {
    read_json(&dir.join("manifest.json"))
}

/// Outcome of the named check, `None` when the manifest lacks it.
pub fn check(manifest: &Value, name: &str) -> Option<bool> {
    let checks = manifest["checks"].as_array()?;
    let mut hits = checks.iter().filter(|c| c["name"] == name);
    let first = hits.next()?;
    assert!(hits.next().is_none(), "check {name} listed twice");
    first["pass"].as_bool()
}

pub fn all_checks_pass(manifest: &Value) -> bool {
    manifest["checks"].as_array().is_some_and(|cs| {
        cs.iter()
            .all(|c| c["pass"] == true || c["asserted"] == false)
    })
}
