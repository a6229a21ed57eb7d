use std::fmt::{self, Display};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Keys ending in this suffix hold timing data and are ignored when reports
/// are compared.
pub const TIMING_SUFFIX: &str = "_ms";

/// A flat, ordered list of `key = value` lines with dotted keys.
///
/// Keys are unique and appear in insertion order. Values run to the end of
/// the line and may contain spaces and `=`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReportDocument {
    entries: Vec<(String, String)>,
}

impl ReportDocument {
    pub fn new() -> Self {
        ReportDocument::default()
    }

    /// Appends an entry. Panics on a repeated or malformed key, which is a
    /// bug in the report builder.
    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        let key = key.into();
        assert!(valid_key(&key), "malformed report key `{key}`");
        assert!(self.get(&key).is_none(), "duplicate report key `{key}`");
        let value = value.to_string();
        assert!(!value.contains('\n'), "multi-line value for `{key}`");
        self.entries.push((key, value));
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::Report(format!("missing key `{key}`")))
    }

    /// Parses a required value.
    pub fn value<T: FromStr>(&self, key: &str) -> Result<T> {
        let raw = self.require(key)?;
        raw.parse().map_err(|_| Error::Report(format!("`{key}` has unexpected value `{raw}`")))
    }

    /// The document with timing entries removed.
    pub fn without_timing(&self) -> ReportDocument {
        let entries = self.entries.iter().filter(|(k, _)| !k.ends_with(TIMING_SUFFIX)).cloned().collect();
        ReportDocument { entries }
    }

    /// Inverse of the [`Display`] rendering. Blank lines and `#` lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut doc = ReportDocument::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once(" = ").or_else(|| line.strip_suffix(" =").map(|k| (k, ""))) else {
                return Err(Error::parse(i + 1, "expected `key = value`"));
            };
            if !valid_key(key) {
                return Err(Error::parse(i + 1, format!("malformed key `{key}`")));
            }
            if doc.get(key).is_some() {
                return Err(Error::parse(i + 1, format!("duplicate key `{key}`")));
            }
            doc.entries.push((key.to_string(), value.to_string()));
        }
        Ok(doc)
    }
}

fn valid_key(key: &str) -> bool {
    !key.is_empty()
        && key.split('.').all(|seg| !seg.is_empty() && seg.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'))
}

impl Display for ReportDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            if v.is_empty() {
                writeln!(f, "{k} =")?;
            } else {
                writeln!(f, "{k} = {v}")?;
            }
        }
        Ok(())
    }
}
