//! Machine-readable output envelope for the CLI: a deterministic JSON
//! document with sorted parameter keys and big integers rendered as
//! strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chow::ChowElement;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "ok")]
    Ok,
    #[serde(rename = "identity-violation")]
    IdentityViolation,
    #[serde(rename = "argument-error")]
    ArgumentError,
}

impl Status {
    pub fn exit_code(&self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::IdentityViolation => 1,
            Status::ArgumentError => 2,
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Vec<Value>,
    pub status: Status,
}

impl OutputEnvelope {
    pub fn new(command: &str) -> Self {
        OutputEnvelope {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: Vec::new(),
            status: Status::Ok,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("envelope serializes")
    }
}

/// Canonical JSON rendering of a Chow element: one entry per Schubert
/// class, coefficients as decimal strings.
pub fn chow_to_json(x: &ChowElement) -> Value {
    let entries: Vec<Value> = x
        .coeffs()
        .map(|(part, c)| {
            json!({
                "partition": [part.p(), part.q()],
                "coefficient": c.to_string(),
            })
        })
        .collect();
    Value::Array(entries)
}

/// Human rendering, e.g. `2*sigma_{2,1} + 4*sigma_{3,3}`.
pub fn chow_to_human(x: &ChowElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.coeffs()
        .map(|(part, c)| format!("{c}*sigma_{{{},{}}}", part.p(), part.q()))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Groups digits in threes for table output, e.g. `698,005`.
pub fn group_digits(x: &BigInt) -> String {
    let s = x.to_string();
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", s.as_str()),
    };
    let mut grouped = String::new();
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i) % 3 == 0 {
            grouped.push(',');
        }
        grouped.push(ch);
    }
    format!("{sign}{grouped}")
}
