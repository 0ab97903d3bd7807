use std::cmp::Ordering;

use serde_json::Value;

use super::Theory;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::universe::Alternative;

/// The identity map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Identity;

/// The one-element theory: plain transitive preferences.
#[derive(Clone, Debug)]
pub struct TrivialTheory {
    elements: [Identity; 1],
}

impl Default for TrivialTheory {
    fn default() -> Self {
        TrivialTheory { elements: [Identity] }
    }
}

impl TrivialTheory {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<T: Scalar> Theory<T> for TrivialTheory {
    type Element = Identity;

    fn name(&self) -> &str {
        "trivial"
    }

    fn identity(&self) -> Identity {
        Identity
    }

    fn compose(&self, _: &Identity, _: &Identity) -> Identity {
        Identity
    }

    fn inverse(&self, _: &Identity) -> Identity {
        Identity
    }

    fn apply(&self, _: &Identity, x: &Alternative<T>) -> Result<Alternative<T>> {
        Ok(x.clone())
    }

    fn compare(&self, _: &Identity, _: &Identity) -> Option<Ordering> {
        Some(Ordering::Equal)
    }

    fn is_ordered(&self) -> bool {
        true
    }

    fn elements(&self) -> Option<&[Identity]> {
        Some(&self.elements)
    }

    fn element_to_json(&self, _: &Identity) -> Value {
        Value::String("identity".into())
    }

    fn element_from_json(&self, v: &Value, path: &str) -> Result<Identity> {
        match v.as_str() {
            Some("identity") => Ok(Identity),
            _ => Err(Error::json(path, "expected \"identity\"")),
        }
    }
}
