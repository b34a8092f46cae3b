//! Small helpers for the JSON encodings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

/// Integer as a JSON number when it fits in 64 bits, otherwise as a string.
pub fn bigint(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}
