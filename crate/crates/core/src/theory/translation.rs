use std::cmp::Ordering;

use serde_json::{json, Value};

use super::{OneParameter, Reach, Theory};
use crate::error::{Error, Result};
use crate::json::{scalar_from_json, scalar_to_json};
use crate::scalar::{dot, from_i64, Scalar};
use crate::universe::Alternative;

/// `x -> x + t e` where `e` is the first unit vector (the numeraire good).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranslationElement<T>(T);

impl<T: Scalar> TranslationElement<T> {
    pub fn new(t: T) -> Self {
        TranslationElement(t)
    }

    pub fn amount(&self) -> &T {
        &self.0
    }
}

/// Quasilinear preferences: translations along the numeraire, ordered
/// numerically.
#[derive(Clone, Debug, Default)]
pub struct TranslationTheory<T> {
    grid: Option<Vec<TranslationElement<T>>>,
}

impl<T: Scalar> TranslationTheory<T> {
    pub fn new() -> Self {
        TranslationTheory { grid: None }
    }

    pub fn with_grid(amounts: impl IntoIterator<Item = T>) -> Self {
        TranslationTheory { grid: Some(amounts.into_iter().map(TranslationElement).collect()) }
    }
}

impl<T: Scalar> Theory<T> for TranslationTheory<T> {
    type Element = TranslationElement<T>;

    fn name(&self) -> &str {
        "translation"
    }

    fn identity(&self) -> Self::Element {
        TranslationElement(T::zero())
    }

    fn compose(&self, outer: &Self::Element, inner: &Self::Element) -> Self::Element {
        TranslationElement(outer.0.clone() + inner.0.clone())
    }

    fn inverse(&self, e: &Self::Element) -> Self::Element {
        TranslationElement(-e.0.clone())
    }

    fn apply(&self, e: &Self::Element, x: &Alternative<T>) -> Result<Alternative<T>> {
        match x {
            Alternative::Vector(v) if !v.is_empty() => {
                let mut out = v.clone();
                out[0] = out[0].clone() + e.0.clone();
                Ok(Alternative::Vector(out))
            }
            _ => Err(Error::DomainMismatch(x.to_string(), "translation".into())),
        }
    }

    fn compare(&self, a: &Self::Element, b: &Self::Element) -> Option<Ordering> {
        Some(a.0.cmp(&b.0))
    }

    fn is_ordered(&self) -> bool {
        true
    }

    fn elements(&self) -> Option<&[Self::Element]> {
        self.grid.as_deref()
    }

    fn one_parameter(&self) -> Option<&dyn OneParameter<T, Self::Element>> {
        Some(self)
    }

    fn element_to_json(&self, e: &Self::Element) -> Value {
        json!({ "t": scalar_to_json(&e.0) })
    }

    fn element_from_json(&self, v: &Value, path: &str) -> Result<Self::Element> {
        let t = v.get("t").ok_or_else(|| Error::json(path, "missing \"t\""))?;
        Ok(TranslationElement(scalar_from_json(t, &format!("{path}.t"))?))
    }
}

impl<T: Scalar> OneParameter<T, TranslationElement<T>> for TranslationTheory<T> {
    fn param(&self, e: &TranslationElement<T>) -> T {
        e.0.clone()
    }

    fn from_param(&self, p: T) -> TranslationElement<T> {
        TranslationElement(p)
    }

    fn inverse_param(&self, p: &T) -> T {
        -p.clone()
    }

    fn identity_param(&self) -> T {
        T::zero()
    }

    fn reach(&self, x: &[T], prices: &[T], income: &T) -> Reach<T> {
        let slack = income.clone() - dot(prices, x);
        match prices.first() {
            Some(p1) if p1.is_positive() => Reach::UpTo(slack / p1.clone()),
            _ if slack.is_negative() => Reach::Nothing,
            _ => Reach::Everything,
        }
    }

    fn above(&self, lo: &T, k: usize) -> T {
        lo.clone() + from_i64::<T>(k as i64)
    }

    fn below(&self, hi: &T, k: usize) -> T {
        hi.clone() - from_i64::<T>(k as i64)
    }
}
