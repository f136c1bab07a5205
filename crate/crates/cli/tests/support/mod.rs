//! Running the binary on fixtures and checking results against the schemas.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).expect("stdout is JSON")
    }

    pub fn error(&self) -> Value {
        serde_json::from_str(self.stderr.trim()).expect("stderr is JSON")
    }
}

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> PathBuf {
    crate_dir().join("fixtures").join(name)
}

pub fn run_args(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_conewalls")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

pub fn run(command: &str, input: &Path) -> Run {
    run_args(&[command, "--input", input.to_str().unwrap()])
}

pub fn schema_errors(kind: &str, doc: &Value) -> Vec<String> {
    let path = crate_dir().join("schemas").join(format!("{kind}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("valid schema");
    validator.iter_errors(doc).map(|e| e.to_string()).collect()
}

/// Subcommand and expected exit code for each shipped fixture.
pub const FIXTURES: &[(&str, &str, i32)] = &[
    ("walls", "u_walls.json", 0),
    ("walls", "u_walls_n1.json", 0),
    ("walls", "bad_gram.json", 2),
    ("chambers", "u_chambers.json", 0),
    ("chambers", "u_chambers_empty.json", 0),
    ("chambers", "ray_chambers.json", 0),
    ("chambers", "rank3_chambers.json", 0),
    ("dirichlet", "u_swap_dirichlet.json", 0),
    ("dirichlet", "fixed_point_dirichlet.json", 3),
    ("dirichlet", "rank4_dirichlet.json", 0),
    ("dirichlet", "hyperbolic_dirichlet.json", 0),
    ("models", "u_models_pairing.json", 0),
    ("models", "u_models_group.json", 0),
    ("models", "u_models_plain.json", 0),
    ("models", "hyperbolic_models.json", 0),
    ("k3walls", "k3_v2.json", 0),
];
