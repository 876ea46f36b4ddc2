//! Output plumbing: 17-significant-digit CSV numbers, format selection, and
//! file-or-stdout writing. All formatting is locale independent.

use std::path::Path;

use crate::config::ConfigMap;
use crate::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

impl Format {
    pub fn parse(s: &str) -> CliResult<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "jsonl" | "json-lines" => Ok(Format::Jsonl),
            other => Err(CliError::Config(format!(
                "format must be csv or jsonl, got {other:?}"
            ))),
        }
    }

    /// CLI value, else config `format` key, else CSV.
    pub fn resolve(cli: Option<&str>, config: &ConfigMap) -> CliResult<Self> {
        match cli.map(str::to_string).or(config.get_string("format")) {
            Some(s) => Self::parse(&s),
            None => Ok(Format::Csv),
        }
    }
}

/// 17 significant digits, scientific, no locale.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv_line(values: &[f64]) -> String {
    let mut out = values
        .iter()
        .map(|v| fmt17(*v))
        .collect::<Vec<_>>()
        .join(",");
    out.push('\n');
    out
}

pub fn write_output(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.to_string_lossy()))),
    }
}
