use std::cmp::Ordering;

use serde_json::{json, Value};

use super::{OneParameter, Reach, Theory};
use crate::error::{Error, Result};
use crate::json::{scalar_from_json, scalar_to_json};
use crate::scalar::{dot, from_i64, Scalar};
use crate::universe::Alternative;

/// `x -> alpha * x` with `alpha > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalingElement<T>(T);

impl<T: Scalar> ScalingElement<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::InvalidData(format!("scaling factor {alpha} is not positive")));
        }
        Ok(ScalingElement(alpha))
    }

    pub fn alpha(&self) -> &T {
        &self.0
    }
}

/// Homothetic preferences: the multiplicative group of positive scalars,
/// ordered numerically. `grid` is an optional finite list of factors used by
/// the enumerative checkers.
#[derive(Clone, Debug, Default)]
pub struct ScalingTheory<T> {
    grid: Option<Vec<ScalingElement<T>>>,
}

impl<T: Scalar> ScalingTheory<T> {
    pub fn new() -> Self {
        ScalingTheory { grid: None }
    }

    pub fn with_grid(factors: impl IntoIterator<Item = T>) -> Result<Self> {
        let grid = factors
            .into_iter()
            .map(ScalingElement::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(ScalingTheory { grid: Some(grid) })
    }

    pub fn element(&self, alpha: T) -> Result<ScalingElement<T>> {
        ScalingElement::new(alpha)
    }
}

impl<T: Scalar> Theory<T> for ScalingTheory<T> {
    type Element = ScalingElement<T>;

    fn name(&self) -> &str {
        "scaling"
    }

    fn identity(&self) -> ScalingElement<T> {
        ScalingElement(T::one())
    }

    fn compose(&self, outer: &Self::Element, inner: &Self::Element) -> Self::Element {
        ScalingElement(outer.0.clone() * inner.0.clone())
    }

    fn inverse(&self, e: &Self::Element) -> Self::Element {
        ScalingElement(T::one() / e.0.clone())
    }

    fn apply(&self, e: &Self::Element, x: &Alternative<T>) -> Result<Alternative<T>> {
        match x {
            Alternative::Vector(v) => Ok(Alternative::Vector(
                v.iter().map(|c| e.0.clone() * c.clone()).collect(),
            )),
            Alternative::Label(_) => Err(Error::DomainMismatch(x.to_string(), "scaling".into())),
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
        json!({ "alpha": scalar_to_json(&e.0) })
    }

    fn element_from_json(&self, v: &Value, path: &str) -> Result<Self::Element> {
        let alpha = v
            .get("alpha")
            .ok_or_else(|| Error::json(path, "missing \"alpha\""))?;
        let alpha: T = scalar_from_json(alpha, &format!("{path}.alpha"))?;
        ScalingElement::new(alpha).map_err(|e| Error::json(format!("{path}.alpha"), e.to_string()))
    }
}

impl<T: Scalar> OneParameter<T, ScalingElement<T>> for ScalingTheory<T> {
    fn param(&self, e: &ScalingElement<T>) -> T {
        e.0.clone()
    }

    fn from_param(&self, p: T) -> ScalingElement<T> {
        debug_assert!(p.is_positive());
        ScalingElement(p)
    }

    fn inverse_param(&self, p: &T) -> T {
        T::one() / p.clone()
    }

    fn identity_param(&self) -> T {
        T::one()
    }

    fn reach(&self, x: &[T], prices: &[T], income: &T) -> Reach<T> {
        let cost = dot(prices, x);
        if cost.is_positive() {
            Reach::UpTo(income.clone() / cost)
        } else if income.is_negative() {
            Reach::Nothing
        } else {
            Reach::Everything
        }
    }

    fn above(&self, lo: &T, k: usize) -> T {
        lo.clone() * from_i64::<T>(k as i64 + 1)
    }

    fn below(&self, hi: &T, k: usize) -> T {
        hi.clone() / from_i64::<T>(k as i64 + 1)
    }
}
