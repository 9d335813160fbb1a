//! Append-only NDJSON run log.

use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct RunRecord {
    pub argv: Vec<String>,
    pub started_at: String,
    pub version: String,
    pub input_digest: String,
    pub report: Value,
    pub exit_status: i32,
}

/// sha256 of the compact JSON form of the canonical arguments.
pub fn input_digest(canonical: &Value) -> String {
    let bytes = serde_json::to_vec(canonical).expect("values serialize");
    hex::encode(Sha256::digest(&bytes))
}

impl RunRecord {
    /// Appends one line with a single write so concurrent runs never split a
    /// record.
    pub fn append(&self, path: &Path) -> io::Result<()> {
        let mut line = serde_json::to_vec(self).map_err(io::Error::other)?;
        line.push(b'\n');
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        f.write_all(&line)
    }
}
