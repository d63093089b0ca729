use std::process::ExitCode;

use cartanlab::io::scalar_token;
use cartanlab::{Scalar, Vector};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// Errors that stop a command before a report is produced.
#[derive(Debug)]
pub enum Failure {
    Io(String),
    Parse(String),
    Usage(String),
    Precondition(String),
}

impl Failure {
    pub fn exit(self) -> ExitCode {
        let (code, kind, msg) = match self {
            Failure::Io(m) => (1, "io", m),
            Failure::Parse(m) => (1, "parse", m),
            Failure::Usage(m) => (2, "usage", m),
            Failure::Precondition(m) => (2, "precondition", m),
        };
        eprintln!("cartanlab: {kind} error: {msg}");
        ExitCode::from(code)
    }
}

pub struct Report {
    command: Vec<String>,
    seed: u64,
    hasher: Sha256,
    results: Map<String, Value>,
    passed: usize,
    failed: usize,
}

impl Report {
    pub fn new(command: Vec<String>, seed: u64) -> Self {
        Report {
            command,
            seed,
            hasher: Sha256::new(),
            results: Map::new(),
            passed: 0,
            failed: 0,
        }
    }

    /// Feeds an input (file contents, id, option value) into the digest.
    pub fn digest(&mut self, bytes: &[u8]) {
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn tally(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    pub fn passed(&self) -> usize {
        self.passed
    }

    pub fn failed(&self) -> usize {
        self.failed
    }

    pub fn to_json(&self) -> String {
        let digest: String = self
            .hasher
            .clone()
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        let v = json!({
            "command": self.command,
            "inputs_sha256": digest,
            "seed": self.seed,
            "results": self.results,
            "summary": {
                "passed": self.passed,
                "failed": self.failed,
                "status": if self.failed == 0 { "pass" } else { "fail" },
            },
        });
        serde_json::to_string_pretty(&v).expect("plain data")
    }
}

pub fn scalars(xs: &[Scalar]) -> Value {
    json!(xs.iter().map(scalar_token).collect::<Vec<_>>())
}

pub fn vector(v: &Vector) -> Value {
    scalars(v.components())
}
