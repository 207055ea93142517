use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Outcome of one family of exact checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub range: String,
    pub passed: bool,
    pub checked: usize,
    pub first_failure: Option<String>,
}

/// An ordered list of named checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Append a single summarized entry.
    pub fn record(&mut self, name: &str, range: String, checked: usize, first_failure: Option<String>) {
        self.entries.push(CheckEntry {
            name: name.into(),
            range,
            passed: first_failure.is_none(),
            checked,
            first_failure,
        });
    }

    /// Start a check family; failures are recorded through the returned guard.
    pub(crate) fn family(&mut self, name: &str, range: String) -> Family<'_> {
        self.entries.push(CheckEntry {
            name: name.into(),
            range,
            passed: true,
            checked: 0,
            first_failure: None,
        });
        Family {
            entry: self.entries.last_mut().expect("just pushed"),
        }
    }
}

pub(crate) struct Family<'a> {
    entry: &'a mut CheckEntry,
}

impl Family<'_> {
    pub(crate) fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.entry.checked += 1;
        if !ok && self.entry.passed {
            self.entry.passed = false;
            self.entry.first_failure = Some(describe());
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let status = if e.passed { "ok  " } else { "FAIL" };
            write!(f, "{status} {} [{}] ({} checks)", e.name, e.range, e.checked)?;
            if let Some(fail) = &e.first_failure {
                write!(f, ": {fail}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
