//! Rendering and error classification.

use std::fmt::Write as _;
use std::io::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

use trd_core::verify::VerifyError;
use trd_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// Ordered key/value output rendered as a JSON object or `key<TAB>value` lines.
pub struct Table(Map<String, Value>);

impl Table {
    pub fn new() -> Self {
        Table(Map::new())
    }

    pub fn row(mut self, key: &str, value: Value) -> Self {
        self.0.insert(key.to_string(), value);
        self
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.0)
    }
}

/// Write one line of data to stdout. A closed pipe is not an error for a
/// filter-style tool, so write failures are ignored.
pub fn line(text: impl AsRef<str>) {
    let _ = writeln!(std::io::stdout().lock(), "{}", text.as_ref());
}

pub fn emit(value: &Value, format: Format) {
    match format {
        Format::Json => {
            line(serde_json::to_string_pretty(value).expect("JSON values serialise"))
        }
        Format::Tsv => match value {
            Value::Object(map) => {
                for (k, v) in map {
                    line(format!("{k}\t{}", scalar(v)));
                }
            }
            other => line(scalar(other)),
        },
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.replace(['\t', '\n'], " "),
        other => other.to_string(),
    }
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n", name.replace('"', "'"));
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// An error together with the exit code it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments: exit code 2.
    Usage(anyhow::Error),
    /// Bad input graph or solver failure: exit code 3.
    Input(anyhow::Error),
}

impl Failure {
    pub fn usage<E: Into<anyhow::Error>>(e: E) -> Self {
        Failure::Usage(e.into())
    }

    pub fn input<E: Into<anyhow::Error>>(e: E) -> Self {
        Failure::Input(e.into())
    }

    pub fn from_verify(e: VerifyError) -> Self {
        match e {
            VerifyError::UnknownTheorem(_)
            | VerifyError::UnknownQuestion(_)
            | VerifyError::IncompatibleUniverse { .. }
            | VerifyError::UniverseTooLarge { .. }
            | VerifyError::BadRandom(_) => Failure::usage(e),
            other => Failure::input(other),
        }
    }

    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
        }
    }

    pub fn error(&self) -> &anyhow::Error {
        match self {
            Failure::Usage(e) | Failure::Input(e) => e,
        }
    }
}
