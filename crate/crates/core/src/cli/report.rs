use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Status::Fail
    }
}

/// One command run: what was asked, whether it held, and the data.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub schema: u32,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub payload: Value,
}

impl ReportRecord {
    pub fn new(command: &str, parameters: &[(&str, String)], status: Status, payload: Value) -> Self {
        ReportRecord {
            schema: SCHEMA,
            command: command.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            status,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// A single checked identity.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub identity: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(identity: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckLine {
            identity: identity.into(),
            pass,
            detail: detail.into(),
        }
    }

    pub fn render(&self) -> String {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{tag} {}", self.identity)
        } else {
            format!("{tag} {} ({})", self.identity, self.detail)
        }
    }
}
