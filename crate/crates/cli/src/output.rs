//! Output plumbing shared by all subcommands.
//!
//! Every command renders its complete output into one string and hands it
//! here, which keeps stdout and `--out <path>` byte-identical and makes
//! determinism trivial to test.  Numbers are serialized with Rust's shortest
//! round-trip formatting, so re-parsing a CSV or JSON field recovers the
//! in-memory `f64` exactly.

use crate::CliError;
use std::io::Write;
use std::path::Path;

/// Write the rendered output to stdout, or to `out` when given.
pub fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())
                .map_err(|e| CliError::Runtime(format!("failed to write to stdout: {e}")))
        }
        Some(path) => std::fs::write(path, text).map_err(|e| {
            CliError::Runtime(format!("failed to write {}: {e}", path.display()))
        }),
    }
}

/// Render one CSV line from already-formatted fields, with `\n` ending.
pub fn csv_line(fields: &[String]) -> String {
    let mut line = fields.join(",");
    line.push('\n');
    line
}

/// Shortest round-trip decimal representation of an `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

/// Serialize a JSON array of flat objects as a compact single line plus `\n`.
pub fn json_document(rows: Vec<serde_json::Value>) -> String {
    let mut text = serde_json::Value::Array(rows).to_string();
    text.push('\n');
    text
}
