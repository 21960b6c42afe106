//! CSV emission with a fixed numeric format so output is byte-stable across
//! runs: 17 significant digits, `\n` line endings, RFC-4180-style layout
//! with a mandatory header row.

use std::io::Write;
use std::path::Path;

use crate::error::CliError;

/// Render a float with 17 significant digits (round-trippable).
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv(
    path: &Path,
    header: &[&str],
    rows: impl Iterator<Item = Vec<f64>>,
) -> Result<(), CliError> {
    let mut out = Vec::new();
    out.extend_from_slice(header.join(",").as_bytes());
    out.push(b'\n');
    for row in rows {
        let line: Vec<String> = row.iter().map(|&v| format_value(v)).collect();
        out.extend_from_slice(line.join(",").as_bytes());
        out.push(b'\n');
    }
    let mut f = std::fs::File::create(path)?;
    f.write_all(&out)?;
    Ok(())
}
