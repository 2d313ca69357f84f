//! Command reports: deterministic JSON and a plain text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use frameforge::terms::CheckStatus;
use frameforge::BooleanFrame;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Exhaustive,
    Sampled,
    Inconclusive,
}

impl From<CheckStatus> for Status {
    fn from(s: CheckStatus) -> Self {
        match s {
            CheckStatus::Exhaustive => Status::Exhaustive,
            CheckStatus::Sampled => Status::Sampled,
        }
    }
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Exhaustive => "exhaustive",
            Status::Sampled => "sampled",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: Option<String>,
    pub holds: bool,
    pub status: Status,
    pub witness: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Check {
            name: name.into(),
            anchor: None,
            holds,
            status: Status::Exhaustive,
            witness: Value::Null,
        }
    }

    /// A computed result rather than a decision; always holds.
    pub fn result(name: impl Into<String>, value: impl Serialize) -> Self {
        Check::new(name, true).witness(value)
    }

    pub fn anchor(mut self, anchor: impl Into<String>) -> Self {
        self.anchor = Some(anchor.into());
        self
    }

    pub fn status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn witness(mut self, witness: impl Serialize) -> Self {
        self.witness = serde_json::to_value(witness).expect("witness serializes");
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrameDescriptor {
    pub source: String,
    pub name: Option<String>,
    pub atoms: u32,
    pub f: Vec<u32>,
}

impl FrameDescriptor {
    pub fn new(source: impl Into<String>, frame: &BooleanFrame) -> Self {
        FrameDescriptor {
            source: source.into(),
            name: frame.name().map(str::to_owned),
            atoms: frame.atoms(),
            f: frame.table().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub frame: Option<FrameDescriptor>,
    pub checks: Vec<Check>,
    pub open_questions: Vec<String>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_owned(),
            params: BTreeMap::new(),
            frame: None,
            checks: Vec::new(),
            open_questions: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.params
            .insert(key.to_owned(), serde_json::to_value(value).expect("param serializes"));
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// 0 when everything holds, 3 if anything is inconclusive, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Inconclusive) {
            3
        } else if self.checks.iter().all(|c| c.holds) {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(frame) = &self.frame {
            let _ = writeln!(
                out,
                "frame: {} ({} atoms) f = {:?}",
                frame.name.as_deref().unwrap_or(&frame.source),
                frame.atoms,
                frame.f
            );
        }
        for c in &self.checks {
            let mark = match (c.status, c.holds) {
                (Status::Inconclusive, _) => "????",
                (_, true) => "PASS",
                (_, false) => "FAIL",
            };
            let _ = write!(out, "{mark} {} [{}]", c.name, c.status.label());
            if let Some(anchor) = &c.anchor {
                let _ = write!(out, " ({anchor})");
            }
            if !c.witness.is_null() {
                let _ = write!(out, ": {}", c.witness);
            }
            out.push('\n');
        }
        for q in &self.open_questions {
            let _ = writeln!(out, "open question: {q}");
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        out
    }
}
