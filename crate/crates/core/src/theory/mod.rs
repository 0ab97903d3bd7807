//! Theories about preferences, encoded as groups of transformations acting
//! on alternatives.
//!
//! Composition follows the usual convention: `compose(g, h)` is the map
//! `x -> g(h(x))`.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

use serde_json::Value;

use crate::error::Result;
use crate::scalar::Scalar;
use crate::universe::Alternative;

mod affine;
mod laws;
mod permutation;
mod scaling;
mod translation;
mod trivial;

pub use affine::{compose_affine, AffineElement, AffineTheory};
pub use laws::{commute_on, verify_group_laws, verify_ordered_group_laws, LawFailure, LawReport};
pub use permutation::{Permutation, PermutationGroup};
pub use scaling::{ScalingElement, ScalingTheory};
pub use translation::{TranslationElement, TranslationTheory};
pub use trivial::{Identity, TrivialTheory};

/// A group of transformations of the space of alternatives.
pub trait Theory<T: Scalar> {
    type Element: Clone + Debug + Eq + Hash;

    fn name(&self) -> &str;

    fn identity(&self) -> Self::Element;

    /// `x -> outer(inner(x))`.
    fn compose(&self, outer: &Self::Element, inner: &Self::Element) -> Self::Element;

    fn inverse(&self, e: &Self::Element) -> Self::Element;

    fn apply(&self, e: &Self::Element, x: &Alternative<T>) -> Result<Alternative<T>>;

    /// Total order on elements for ordered theories, `None` otherwise.
    fn compare(&self, _a: &Self::Element, _b: &Self::Element) -> Option<Ordering> {
        None
    }

    fn is_ordered(&self) -> bool {
        false
    }

    /// Finite element list, when the theory (or the supplied grid) has one.
    fn elements(&self) -> Option<&[Self::Element]> {
        None
    }

    /// One-parameter view used by the symbolic reductions on linear budgets.
    fn one_parameter(&self) -> Option<&dyn OneParameter<T, Self::Element>> {
        None
    }

    fn element_to_json(&self, e: &Self::Element) -> Value;

    fn element_from_json(&self, v: &Value, path: &str) -> Result<Self::Element>;

    /// Short human readable form of an element.
    fn describe(&self, e: &Self::Element) -> String {
        self.element_to_json(e).to_string()
    }
}

/// Parameters `p` for which `g_p(x)` stays inside a linear budget. For the
/// ordered one-parameter theories this set is always downward closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reach<T> {
    Nothing,
    UpTo(T),
    Everything,
}

/// Ordered theories whose elements are indexed by a single scalar parameter,
/// monotonically in the element order (scaling factor, translation amount).
pub trait OneParameter<T: Scalar, E> {
    fn param(&self, e: &E) -> T;

    fn from_param(&self, p: T) -> E;

    /// Parameter of the inverse element.
    fn inverse_param(&self, p: &T) -> T;

    fn identity_param(&self) -> T;

    /// Which parameters keep `g_p(x)` inside `{y : prices.y <= income}`.
    fn reach(&self, x: &[T], prices: &[T], income: &T) -> Reach<T>;

    /// `k`-th (k >= 1) sample strictly above `lo`.
    fn above(&self, lo: &T, k: usize) -> T;

    /// `k`-th (k >= 1) sample strictly below `hi`, inside the parameter domain.
    fn below(&self, hi: &T, k: usize) -> T;
}

/// Up to `count + 1` distinct parameters inside the closed interval between
/// `lo` and `hi` (`None` bounds are unbounded), always including the finite
/// endpoints. Empty when the interval is empty.
pub(crate) fn interval_samples<T: Scalar, E>(
    family: &dyn OneParameter<T, E>,
    lo: Option<T>,
    hi: Option<T>,
    count: usize,
) -> Vec<T> {
    let extra = count.max(1);
    match (lo, hi) {
        (Some(lo), Some(hi)) => match lo.cmp(&hi) {
            Ordering::Greater => Vec::new(),
            Ordering::Equal => vec![hi],
            Ordering::Less => {
                let mut out = vec![hi.clone(), lo.clone()];
                let width = hi - lo.clone();
                let denom = crate::scalar::from_i64::<T>(extra as i64 + 1);
                for k in 1..=extra {
                    let step = crate::scalar::from_i64::<T>(k as i64);
                    out.push(lo.clone() + width.clone() * step / denom.clone());
                }
                out
            }
        },
        (Some(lo), None) => {
            let mut out = vec![lo.clone()];
            out.extend((1..=extra).map(|k| family.above(&lo, k)));
            out
        }
        (None, Some(hi)) => {
            let mut out = vec![hi.clone()];
            out.extend((1..=extra).map(|k| family.below(&hi, k)));
            out
        }
        (None, None) => {
            let id = family.identity_param();
            let mut out = vec![id.clone()];
            out.extend((1..=extra).map(|k| family.above(&id, k)));
            out
        }
    }
}
