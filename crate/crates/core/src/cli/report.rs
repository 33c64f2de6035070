use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

/// Result of one command. Serialized as a single JSON document; maps are
/// ordered so equal runs give byte-identical output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub residuals: BTreeMap<String, f64>,
    pub instances: BTreeMap<String, u64>,
    /// Pass/fail conditions that are not residuals.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub conditions: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
    pub pass: bool,
    #[serde(skip)]
    notes: Vec<String>,
    #[serde(skip)]
    tol: f64,
}

impl Report {
    pub fn new(command: &str, tol: f64) -> Self {
        let mut inputs = BTreeMap::new();
        inputs.insert("tol".to_string(), Value::from(tol));
        Report {
            command: command.to_string(),
            inputs,
            residuals: BTreeMap::new(),
            instances: BTreeMap::new(),
            conditions: BTreeMap::new(),
            details: BTreeMap::new(),
            pass: false,
            notes: Vec::new(),
            tol,
        }
    }

    pub fn input(&mut self, key: &str, value: Value) {
        self.inputs.insert(key.to_string(), value);
    }

    /// Non-finite residuals are stored as `f64::MAX` so the document stays
    /// valid JSON and still fails.
    pub fn residual(&mut self, key: &str, value: f64, instances: u64) {
        let value = if value.is_finite() { value } else { f64::MAX };
        self.residuals.insert(key.to_string(), value);
        self.instances.insert(key.to_string(), instances);
    }

    pub fn require(&mut self, key: &str, holds: bool) {
        self.conditions.insert(key.to_string(), holds);
    }

    pub fn detail(&mut self, key: &str, value: Value) {
        self.details.insert(key.to_string(), value);
    }

    pub fn note(&mut self, line: String) {
        self.notes.push(line);
    }

    pub fn finish(mut self) -> Self {
        self.pass = self.residuals.values().all(|&r| r <= self.tol) && self.conditions.values().all(|&c| c);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                serde_json::to_string_pretty(self).expect("reports always serialize") + "\n"
            }
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{}: {verdict}", self.command);
        for (k, v) in &self.inputs {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "  {k} = {shown}");
        }
        for (k, r) in &self.residuals {
            let _ = writeln!(out, "  residual {k}: {r:.3e} over {} instance(s)", self.instances[k]);
        }
        for (k, c) in &self.conditions {
            let _ = writeln!(out, "  condition {k}: {}", if *c { "holds" } else { "violated" });
        }
        for line in &self.notes {
            let _ = writeln!(out, "  {line}");
        }
        out
    }
}
