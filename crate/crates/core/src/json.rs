//! JSON encodings. Rationals are always strings (`"3"`, `"-7/2"`), vectors
//! are arrays of such strings and labels are plain strings. Decoding errors
//! carry the field path of the offending value.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::universe::Alternative;

pub fn scalar_to_json<T: Scalar>(v: &T) -> Value {
    Value::String(v.to_string())
}

pub fn scalar_from_json<T: Scalar>(v: &Value, path: &str) -> Result<T> {
    match v {
        Value::String(s) => T::parse_exact(s).map_err(|m| Error::json(path, m)),
        Value::Number(_) => Err(Error::json(path, "rationals must be encoded as strings")),
        _ => Err(Error::json(path, "expected a rational string")),
    }
}

pub fn vector_to_json<T: Scalar>(v: &[T]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn vector_from_json<T: Scalar>(v: &Value, path: &str) -> Result<Vec<T>> {
    let items = v.as_array().ok_or_else(|| Error::json(path, "expected an array of rationals"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| scalar_from_json(x, &format!("{path}[{i}]")))
        .collect()
}

pub fn alternative_to_json<T: Scalar>(a: &Alternative<T>) -> Value {
    match a {
        Alternative::Label(s) => Value::String(s.clone()),
        Alternative::Vector(v) => vector_to_json(v),
    }
}

pub fn alternative_from_json<T: Scalar>(v: &Value, path: &str) -> Result<Alternative<T>> {
    match v {
        Value::String(s) => Ok(Alternative::Label(s.clone())),
        Value::Array(_) => Ok(Alternative::Vector(vector_from_json(v, path)?)),
        _ => Err(Error::json(path, "expected a label string or an array of rationals")),
    }
}

pub(crate) fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::json(path, format!("missing field `{key}`")))
}

pub(crate) fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::json(path, "expected an array"))
}
