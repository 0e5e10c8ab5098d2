//! Flat `key = value` configuration files with `[section]` headers.
//!
//! Keys before the first header are global. A lookup in a section falls
//! back to the global value. Dashes and underscores in names are
//! interchangeable, so `out-dir` and `out_dir` address the same key.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    /// Section name to its entries; the global section is `""`.
    sections: BTreeMap<String, BTreeMap<String, String>>,
    /// Section names as written, in file order.
    order: Vec<String>,
}

fn normalize(name: &str) -> String {
    name.trim().replace('-', "_")
}

impl ConfigFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut cfg = ConfigFile::default();
        let mut current = String::new();
        cfg.sections.insert(String::new(), BTreeMap::new());
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let fail = |msg: &str| Err(CliError::input(format!("config line {}: {msg}", i + 1)));
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let Some(name) = rest.strip_suffix(']') else {
                    return fail("unterminated section header");
                };
                let written = name.trim();
                let name = normalize(written);
                if name.is_empty() {
                    return fail("empty section name");
                }
                if cfg.sections.contains_key(&name) {
                    return fail(&format!("section [{written}] appears twice"));
                }
                cfg.sections.insert(name.clone(), BTreeMap::new());
                cfg.order.push(written.to_string());
                current = name;
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return fail("expected `key = value`");
            };
            let key = normalize(key);
            if key.is_empty() {
                return fail("empty key");
            }
            let section = cfg.sections.get_mut(&current).expect("section registered");
            if section.insert(key.clone(), value.trim().to_string()).is_some() {
                return fail(&format!("key `{key}` set twice"));
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(CliError::io(format!("reading {}", path.display())))?;
        Self::parse(&text)
    }

    /// Named sections in file order.
    pub fn section_names(&self) -> &[String] {
        &self.order
    }

    /// Entries of one section, without the global fallback.
    pub fn section(&self, name: &str) -> Option<&BTreeMap<String, String>> {
        self.sections.get(&normalize(name))
    }

    pub fn get(&self, section: &str, key: &str) -> Option<&str> {
        let key = normalize(key);
        self.section(section)
            .and_then(|s| s.get(&key))
            .or_else(|| self.sections.get("").and_then(|s| s.get(&key)))
            .map(String::as_str)
    }

    pub fn value<T: FromStr>(&self, section: &str, key: &str) -> CliResult<Option<T>> {
        self.get(section, key)
            .map(|v| v.parse().map_err(|_| CliError::input(format!("bad value `{v}` for `{key}` in [{section}]"))))
            .transpose()
    }

    /// Comma-separated list value.
    pub fn list<T: FromStr>(&self, section: &str, key: &str) -> CliResult<Option<Vec<T>>> {
        self.get(section, key).map(|v| parse_list(v).map_err(|e| CliError::input(format!("`{key}`: {e}")))).transpose()
    }

    /// Rejects keys in `section` that are not in `allowed`. Global keys may
    /// serve other commands and are not checked.
    pub fn check_keys(&self, section: &str, allowed: &[&str]) -> CliResult<()> {
        if let Some(entries) = self.section(section) {
            if let Some(bad) = entries.keys().find(|k| !allowed.iter().any(|a| normalize(a) == **k)) {
                return Err(CliError::input(format!("unknown key `{bad}` in [{section}]")));
            }
        }
        Ok(())
    }
}

pub fn parse_list<T: FromStr>(text: &str) -> Result<Vec<T>, String> {
    let items: Vec<T> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("bad list item `{s}`")))
        .collect::<Result<_, _>>()?;
    if items.is_empty() {
        return Err("empty list".into());
    }
    Ok(items)
}

/// Flag value if given, otherwise the config value.
pub fn pick<T: FromStr>(flag: Option<T>, cfg: &ConfigFile, section: &str, key: &str) -> CliResult<Option<T>> {
    match flag {
        Some(v) => Ok(Some(v)),
        None => cfg.value(section, key),
    }
}

/// Comma-separated flag value if given, otherwise the config value.
pub fn pick_list<T: FromStr>(flag: Option<&str>, cfg: &ConfigFile, section: &str, key: &str) -> CliResult<Option<Vec<T>>> {
    match flag {
        Some(v) => parse_list(v).map(Some).map_err(|e| CliError::input(format!("--{}: {e}", key.replace('_', "-")))),
        None => cfg.list(section, key),
    }
}
