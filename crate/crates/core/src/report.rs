//! Named pass/fail/not-applicable checks shared by every verification routine.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not_applicable",
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, details: impl Into<String>) {
        let name = name.into();
        debug_assert!(self.get(&name).is_none(), "duplicate check name {}", name);
        self.checks.push(Check { name, status, details: details.into() });
    }

    pub fn pass(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.push(name, Status::Pass, details);
    }

    pub fn fail(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.push(name, Status::Fail, details);
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, details: impl Into<String>) {
        self.push(name, Status::from_bool(ok), details);
    }

    pub fn not_applicable(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(name, Status::NotApplicable, reason);
    }

    /// Appends another report, prefixing its check names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            let name = if prefix.is_empty() { c.name } else { [prefix, "/", &c.name].concat() };
            self.push(name, c.status, c.details);
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.extend_prefixed("", other);
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn summary(&self) -> String {
        let fails: Vec<&str> = self.failures().map(|c| c.name.as_str()).collect();
        if fails.is_empty() {
            "all checks passed".to_string()
        } else {
            fails.join(", ")
        }
    }
}
