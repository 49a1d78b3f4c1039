//! Serialization helpers, output sinks and error reporting.

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use kron_core::{BigInt, KroneckerTriple};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::{Doc, Format};

/// Largest integer a JSON number carries exactly in double precision.
const MAX_SAFE: i64 = (1 << 53) - 1;

/// A JSON number when `|v| <= 2^53 - 1`, otherwise a decimal string.
pub fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) if x.abs() <= MAX_SAFE => json!(x),
        _ => json!(v.to_string()),
    }
}

pub fn triple_json(t: &KroneckerTriple) -> Value {
    json!({ "mu": t.mu().parts(), "nu": t.nu().parts(), "lam": t.lam().parts() })
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1, with the library error name.
    Domain { name: &'static str, message: String },
}

impl Failure {
    pub fn domain(e: kron_core::Error, flag: Option<&str>) -> Self {
        let message = match flag {
            Some(f) => format!("{f}: {e}"),
            None => e.to_string(),
        };
        Failure::Domain { name: e.name(), message }
    }
}

impl From<kron_core::Error> for Failure {
    fn from(e: kron_core::Error) -> Self {
        Failure::domain(e, None)
    }
}

pub fn emit(doc: &Doc, format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let text = match (doc, format) {
        (Doc::Json(v), _) => serde_json::to_string_pretty(v).expect("serializable") + "\n",
        (Doc::Table(t), _) => {
            let mut s = t.header.join(",") + "\n";
            for row in &t.rows {
                s += &(row.join(",") + "\n");
            }
            s
        }
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("--out: cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("stdout: {e}")))
        }
    }
}

pub fn report(f: Failure) -> ExitCode {
    match f {
        Failure::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Failure::Domain { name, message } => {
            eprintln!("{}", json!({ "error": name, "message": message }));
            ExitCode::from(1)
        }
    }
}
