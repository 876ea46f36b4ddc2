//! Flat key-value config file support. `SCATTER_CONFIG` names a default
//! config file; command-line flags override config keys.
//!
//! Format: one `key = value` per line, `#` starts a comment, blank lines
//! ignored. Keys match the long flag names (`tau`, `lmax`, `k`, `alpha`,
//! `mass`, `theta`, `range`, `axis`, `out`, `format`, `partial-wave`,
//! `units`) plus `tol.NAME` for tolerance overrides.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::{CliError, CliResult};

#[derive(Debug, Default)]
pub struct ConfigMap {
    map: BTreeMap<String, String>,
}

impl ConfigMap {
    /// Load the file named by `SCATTER_CONFIG`, or an empty map when the
    /// variable is unset.
    pub fn load() -> CliResult<Self> {
        match std::env::var_os("SCATTER_CONFIG") {
            None => Ok(Self::default()),
            Some(path) => {
                let text = std::fs::read_to_string(&path).map_err(|e| {
                    CliError::Config(format!(
                        "cannot read config file {}: {e}",
                        path.to_string_lossy()
                    ))
                })?;
                Self::parse(&text)
            }
        }
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!(
                    "config line {} is not `key = value`: {raw:?}",
                    lineno + 1
                ))
            })?;
            let key = key.trim();
            let value = value.trim();
            if key.is_empty() || value.is_empty() {
                return Err(CliError::Config(format!(
                    "config line {} has an empty key or value",
                    lineno + 1
                )));
            }
            map.insert(key.to_string(), value.to_string());
        }
        Ok(Self { map })
    }

    pub fn get_string(&self, key: &str) -> Option<String> {
        self.map.get(key).cloned()
    }

    pub fn get_f64(&self, key: &str) -> CliResult<Option<f64>> {
        match self.map.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::Config(format!("config key {key}: bad number {v:?}"))),
        }
    }

    pub fn get_u32(&self, key: &str) -> CliResult<Option<u32>> {
        match self.map.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::Config(format!("config key {key}: bad integer {v:?}"))),
        }
    }

    pub fn get_bool(&self, key: &str) -> CliResult<bool> {
        match self.map.get(key).map(String::as_str) {
            None => Ok(false),
            Some("true") | Some("1") => Ok(true),
            Some("false") | Some("0") => Ok(false),
            Some(v) => Err(CliError::Config(format!(
                "config key {key}: bad boolean {v:?}"
            ))),
        }
    }

    pub fn get_path(&self, key: &str) -> CliResult<Option<PathBuf>> {
        Ok(self.map.get(key).map(PathBuf::from))
    }

    /// All `tol.NAME = value` overrides, in key order.
    pub fn tolerance_overrides(&self) -> CliResult<Vec<(String, f64)>> {
        let mut out = Vec::new();
        for (key, value) in &self.map {
            if let Some(name) = key.strip_prefix("tol.") {
                let v: f64 = value.parse().map_err(|_| {
                    CliError::Config(format!("config key {key}: bad number {value:?}"))
                })?;
                out.push((name.to_string(), v));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_comments_and_blanks() {
        let cfg = ConfigMap::parse("# header\n tau = 1.5 \n\nlmax=12 # trailing\n").unwrap();
        assert_eq!(cfg.get_f64("tau").unwrap(), Some(1.5));
        assert_eq!(cfg.get_u32("lmax").unwrap(), Some(12));
        assert_eq!(cfg.get_f64("absent").unwrap(), None);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(ConfigMap::parse("tau").is_err());
        assert!(ConfigMap::parse("tau =").is_err());
        assert!(matches!(
            ConfigMap::parse("tau = abc").unwrap().get_f64("tau"),
            Err(CliError::Config(_))
        ));
    }

    #[test]
    fn tolerance_overrides_in_key_order() {
        let cfg = ConfigMap::parse("tol.unitarity = 1e-10\ntol.commutator = 1e-9\n").unwrap();
        let tols = cfg.tolerance_overrides().unwrap();
        assert_eq!(tols[0].0, "commutator");
        assert_eq!(tols[1], ("unitarity".to_string(), 1e-10));
    }
}
