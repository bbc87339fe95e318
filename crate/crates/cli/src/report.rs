//! Run reports and input bookkeeping.

use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use splitcert::{Error, Field, PolyError, Polynomial};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Something wrong with what the user supplied: exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub kind: &'static str,
    pub message: String,
    pub file: Option<String>,
    pub position: Option<usize>,
}

impl InputError {
    pub fn new(message: impl Into<String>) -> Self {
        InputError {
            kind: "input",
            message: message.into(),
            file: None,
            position: None,
        }
    }

    pub fn in_file(mut self, file: &Path) -> Self {
        self.file = Some(file.display().to_string());
        self
    }

    pub fn to_json(&self, subcommand: &str) -> Value {
        let mut err = json!({ "kind": self.kind, "message": self.message });
        if let Some(f) = &self.file {
            err["file"] = json!(f);
        }
        if let Some(p) = self.position {
            err["position"] = json!(p);
        }
        json!({ "subcommand": subcommand, "toolVersion": TOOL_VERSION, "error": err })
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::CostGuard { .. } => "cost-guard",
            Error::HypothesisViolated(_) => "hypothesis",
            Error::Poly(PolyError::Parse(_)) => "parse",
            _ => "input",
        };
        let position = match &e {
            Error::Poly(PolyError::Parse(p)) => Some(p.position),
            _ => None,
        };
        InputError {
            kind,
            message: e.to_string(),
            file: None,
            position,
        }
    }
}

impl From<PolyError> for InputError {
    fn from(e: PolyError) -> Self {
        Error::from(e).into()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputRecord {
    pub path: String,
    pub sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<InputRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor: Option<InputRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sps: Vec<InputRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cert: Option<InputRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<Value>,
}

/// What a subcommand hands back for the report.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub success: bool,
    pub field: String,
    pub result: Value,
    pub bounds: Option<Value>,
    pub hypotheses: Vec<String>,
    pub warnings: Vec<String>,
}

impl Outcome {
    pub fn new(success: bool, field: String, result: Value) -> Self {
        Outcome {
            success,
            field,
            result,
            bounds: None,
            hypotheses: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub subcommand: String,
    pub tool_version: &'static str,
    pub field: String,
    pub inputs: Inputs,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Value>,
    pub seed: u64,
    pub result: Value,
    pub timing_ms: f64,
    pub asserted_hypotheses: Vec<String>,
    pub warnings: Vec<String>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn read_file(path: &Path) -> Result<Vec<u8>, InputError> {
    std::fs::read(path).map_err(|e| InputError::new(format!("cannot read file: {e}")).in_file(path))
}

/// Read and parse a one-polynomial file.
pub fn load_poly<K: Field>(path: &Path, nvars: usize, field: &K) -> Result<(Polynomial<K>, InputRecord), InputError> {
    let bytes = read_file(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| InputError::new("file is not UTF-8").in_file(path))?;
    let f = Polynomial::parse(text.trim_end(), nvars, field).map_err(|e| InputError::from(e).in_file(path))?;
    let record = InputRecord {
        path: path.display().to_string(),
        sha256: sha256_hex(&bytes),
        polynomial: Some(f.to_string()),
    };
    Ok((f, record))
}

/// Parse a polynomial echoed inside an earlier report.
pub fn parse_echoed<K: Field>(text: &str, nvars: usize, field: &K, what: &str) -> Result<Polynomial<K>, InputError> {
    Polynomial::parse(text, nvars, field).map_err(|e| {
        let mut err = InputError::from(e);
        err.message = format!("{what} in report: {}", err.message);
        err
    })
}

/// Human-readable rendering of a report.
pub fn render_pretty(report: &RunReport) -> String {
    let mut out = format!("{} over {}\n", report.subcommand, report.field);
    if let Value::Object(map) = &report.result {
        for (k, v) in map {
            out.push_str(&format!("  {k}: {}\n", pretty_value(v)));
        }
    }
    for w in &report.warnings {
        out.push_str(&format!("  warning: {w}\n"));
    }
    for h in &report.asserted_hypotheses {
        out.push_str(&format!("  assumed: {h}\n"));
    }
    out.push_str(&format!("  time: {:.1} ms\n", report.timing_ms));
    out
}

fn pretty_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
