//! Shared output helpers. JSON carries integers as exact numbers and
//! rationals as `p/q` strings next to a float approximation.

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use chromatic_core::graph::io::ParseError;
use chromatic_core::scalar::approx;
use chromatic_core::Rational;

pub fn int(value: &BigInt) -> Value {
    Value::Number(value.to_string().parse::<Number>().expect("integers are JSON numbers"))
}

pub fn ints(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(int).collect())
}

pub fn rational(value: &Rational) -> Value {
    json!({ "exact": value.to_string(), "approx": approx(value) })
}

/// `25/14 (1.785714)`.
pub fn rational_text(value: &Rational) -> String {
    if value.is_integer() {
        value.to_string()
    } else {
        format!("{value} ({:.6})", approx(value))
    }
}

pub fn list<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

pub fn parse_error(error: &ParseError) -> Value {
    json!({ "error": { "line": error.line, "message": error.message } })
}
