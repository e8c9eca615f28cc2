//! JSON output envelope shared by the CLI commands.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// Integers go out as JSON numbers; values past `i64` fall back to a decimal
/// string rather than losing precision.
pub fn big_as_number<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match n.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

pub fn big_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub method_tags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

impl Envelope {
    pub fn new(command: &str, inputs: Value, result: Value, method_tags: Vec<String>) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            result,
            method_tags,
            agreement: None,
        }
    }

    pub fn with_agreement(mut self, agreement: bool) -> Self {
        self.agreement = Some(agreement);
        self
    }
}
