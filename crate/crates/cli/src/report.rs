//! Machine-readable reports shared by every subcommand.

use std::fmt::{self, Write as _};

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        })
    }
}

/// Where the expected value of a check comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// A published value, stored in the golden data.
    Reference,
    /// Follows directly from definitions.
    Elementary,
    /// Cross-checked against an independent computation.
    Computed,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Reference => "reference",
            Basis::Elementary => "elementary",
            Basis::Computed => "computed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub status: Status,
    pub basis: Basis,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub name: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>, inputs: Value) -> Self {
        Report {
            name: name.into(),
            inputs,
            results: Value::Object(Default::default()),
            checks: Vec::new(),
        }
    }

    /// Sets `results[key]`.
    pub fn result(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialize");
        if let Value::Object(map) = &mut self.results {
            map.insert(key.to_string(), v);
        }
    }

    pub fn check(&mut self, claim: impl Into<String>, ok: bool, basis: Basis) -> bool {
        self.push(claim, Status::from_bool(ok), basis, None);
        ok
    }

    /// Like [`Report::check`], recording `detail` when the check fails.
    pub fn check_detail(
        &mut self,
        claim: impl Into<String>,
        ok: bool,
        basis: Basis,
        detail: impl Into<String>,
    ) -> bool {
        let detail = (!ok).then(|| detail.into());
        self.push(claim, Status::from_bool(ok), basis, detail);
        ok
    }

    pub fn push(
        &mut self,
        claim: impl Into<String>,
        status: Status,
        basis: Basis,
        detail: Option<String>,
    ) {
        self.checks.push(Check {
            claim: claim.into(),
            status,
            basis,
            detail,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.name);
        if let Value::Object(m) = &self.inputs {
            for (k, v) in m {
                let _ = writeln!(out, "  {k}: {}", plain(v));
            }
        }
        if let Value::Object(m) = &self.results {
            if !m.is_empty() {
                let _ = writeln!(out, "results:");
                for (k, v) in m {
                    let _ = writeln!(out, "  {k}: {}", plain(v));
                }
            }
        }
        let _ = writeln!(out, "checks:");
        for c in &self.checks {
            let _ = write!(out, "  [{}] {} ({})", c.status, c.claim, c.basis);
            if let Some(d) = &c.detail {
                let _ = write!(out, ": {d}");
            }
            out.push('\n');
        }
        let pass = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        let _ = writeln!(
            out,
            "{} checks: {pass} passed, {} failed",
            self.checks.len(),
            self.failure_count()
        );
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
