//! Helpers shared by the integration tests.

#![allow(dead_code)]

pub mod m2;

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// Runs the `unproj` binary with `args`.
pub fn unproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unproj")).args(args).output().expect("spawn unproj")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}
