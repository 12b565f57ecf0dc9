use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Flag,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Flag => "flag",
        }
    }
}

/// Structured result of one subcommand. Field order is alphabetical so the
/// serialized form is stable under a parse/print round trip.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub betti: Vec<u128>,
    pub checks: BTreeMap<String, Verdict>,
    pub command: String,
    pub details: BTreeMap<String, Value>,
    pub f_vector: Vec<u128>,
    pub provenance: BTreeMap<String, String>,
    pub q: usize,
    pub r: u32,
}

impl Report {
    pub fn new(command: &str, q: usize, r: u32) -> Self {
        Report {
            command: command.to_string(),
            q,
            r,
            ..Report::default()
        }
    }

    pub fn check(&mut self, name: &str, ok: bool) {
        self.checks.insert(name.to_string(), Verdict::from_bool(ok));
    }

    pub fn flag(&mut self, name: &str) {
        self.checks.insert(name.to_string(), Verdict::Flag);
    }

    pub fn detail(&mut self, name: &str, value: impl Into<Value>) {
        self.details.insert(name.to_string(), value.into());
    }

    pub fn source(&mut self, entry: &str, how: &str) {
        self.provenance.insert(entry.to_string(), how.to_string());
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&v| v != Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let list = |v: &[u128]| v.iter().map(u128::to_string).collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "command\t{}", self.command);
        let _ = writeln!(out, "q\t{}", self.q);
        let _ = writeln!(out, "r\t{}", self.r);
        let _ = writeln!(out, "f_vector\t{}", list(&self.f_vector));
        let _ = writeln!(out, "betti\t{}", list(&self.betti));
        for (k, v) in &self.checks {
            let _ = writeln!(out, "check.{k}\t{}", v.as_str());
        }
        for (k, v) in &self.provenance {
            let _ = writeln!(out, "provenance.{k}\t{v}");
        }
        for (k, v) in &self.details {
            let _ = writeln!(out, "detail.{k}\t{v}");
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let list = |v: &[u128]| v.iter().map(u128::to_string).collect::<Vec<_>>().join(", ");
        let _ = writeln!(out, "{} q={} r={}", self.command, self.q, self.r);
        if !self.f_vector.is_empty() {
            let _ = writeln!(out, "  f-vector: ({})", list(&self.f_vector));
        }
        if !self.betti.is_empty() {
            let _ = writeln!(out, "  betti:    ({})", list(&self.betti));
        }
        for (k, v) in &self.checks {
            let _ = writeln!(out, "  [{}] {k}", v.as_str());
        }
        for (k, v) in &self.provenance {
            let _ = writeln!(out, "  {k} from {v}");
        }
        for (k, v) in &self.details {
            let _ = writeln!(out, "  {k}: {v}");
        }
        out
    }
}
