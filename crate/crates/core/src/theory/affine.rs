use serde_json::{json, Value};

use super::Theory;
use crate::error::{Error, Result};
use crate::json::{scalar_from_json, scalar_to_json, vector_from_json, vector_to_json};
use crate::scalar::Scalar;
use crate::universe::Alternative;

/// An affine lottery map `x -> alpha x + shift` with `alpha > 0`.
///
/// Mixtures `x -> alpha x + (1 - alpha) z` are the elements with
/// `alpha != 1` (or `shift == 0`); the pair `(alpha, shift)` is the
/// canonical form, so equality of elements is equality of maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineElement<T> {
    alpha: T,
    shift: Vec<T>,
}

impl<T: Scalar> AffineElement<T> {
    /// The mixture `x -> alpha x + (1 - alpha) z`.
    pub fn mixture(alpha: T, z: Vec<T>) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::InvalidData(format!("mixing weight {alpha} is not positive")));
        }
        let w = T::one() - alpha.clone();
        let shift = z.into_iter().map(|c| w.clone() * c).collect();
        Ok(AffineElement { alpha, shift })
    }

    /// `x -> alpha x + shift`.
    pub fn direct(alpha: T, shift: Vec<T>) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::InvalidData(format!("mixing weight {alpha} is not positive")));
        }
        Ok(AffineElement { alpha, shift })
    }

    pub fn identity(dim: usize) -> Self {
        AffineElement { alpha: T::one(), shift: vec![T::zero(); dim] }
    }

    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    pub fn shift(&self) -> &[T] {
        &self.shift
    }

    pub fn dimension(&self) -> usize {
        self.shift.len()
    }

    /// The point `z` of the mixture form, if the element is a mixture.
    pub fn mixing_point(&self) -> Option<Vec<T>> {
        if self.alpha != T::one() {
            let w = T::one() - self.alpha.clone();
            Some(self.shift.iter().map(|c| c.clone() / w.clone()).collect())
        } else if self.shift.iter().all(|c| c.is_zero()) {
            Some(self.shift.clone())
        } else {
            None
        }
    }

    pub fn apply_vector(&self, x: &[T]) -> Vec<T> {
        x.iter()
            .zip(&self.shift)
            .map(|(xi, si)| self.alpha.clone() * xi.clone() + si.clone())
            .collect()
    }

    /// `(1/alpha, z)` in mixture form, i.e. `x -> x/alpha - shift/alpha`.
    pub fn inverse(&self) -> Self {
        let inv = T::one() / self.alpha.clone();
        AffineElement {
            shift: self.shift.iter().map(|c| -(c.clone() * inv.clone())).collect(),
            alpha: inv,
        }
    }
}

/// Composition `x -> f(g(x))`.
///
/// When both factors are mixtures with `alpha_f alpha_g != 1` the result is
/// produced from the mixture formula for the combined point; otherwise the
/// direct affine form is composed (the combined map is then a translation or
/// a degenerate mixture that the normalized formula cannot express).
pub fn compose_affine<T: Scalar>(f: &AffineElement<T>, g: &AffineElement<T>) -> AffineElement<T> {
    let alpha = f.alpha.clone() * g.alpha.clone();
    if alpha != T::one() {
        if let (Some(z), Some(z2)) = (f.mixing_point(), g.mixing_point()) {
            let denom = T::one() - alpha.clone();
            let cz = (T::one() - f.alpha.clone()) / denom.clone();
            let cz2 = f.alpha.clone() * (T::one() - g.alpha.clone()) / denom;
            let combined: Vec<T> = z
                .iter()
                .zip(&z2)
                .map(|(a, b)| cz.clone() * a.clone() + cz2.clone() * b.clone())
                .collect();
            return AffineElement::mixture(alpha, combined).expect("product of positives");
        }
    }
    let shift = g
        .shift
        .iter()
        .zip(&f.shift)
        .map(|(sg, sf)| f.alpha.clone() * sg.clone() + sf.clone())
        .collect();
    AffineElement { alpha, shift }
}

/// Preferences satisfying independence, restricted to a finite element list
/// of affine maps on lotteries of a fixed dimension.
#[derive(Clone, Debug)]
pub struct AffineTheory<T> {
    dim: usize,
    elements: Vec<AffineElement<T>>,
}

impl<T: Scalar> AffineTheory<T> {
    pub fn new(dim: usize, elements: Vec<AffineElement<T>>) -> Result<Self> {
        if let Some(bad) = elements.iter().find(|e| e.dimension() != dim) {
            return Err(Error::InvalidData(format!(
                "affine element of dimension {} in a theory of dimension {dim}",
                bad.dimension()
            )));
        }
        Ok(AffineTheory { dim, elements })
    }

    /// Adds the inverse of every listed element that is not already present.
    pub fn closed_under_inverse(mut self) -> Self {
        let extra: Vec<_> = self
            .elements
            .iter()
            .map(AffineElement::inverse)
            .filter(|inv| !self.elements.contains(inv))
            .collect();
        for e in extra {
            if !self.elements.contains(&e) {
                self.elements.push(e);
            }
        }
        self
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }
}

impl<T: Scalar> Theory<T> for AffineTheory<T> {
    type Element = AffineElement<T>;

    fn name(&self) -> &str {
        "affine"
    }

    fn identity(&self) -> Self::Element {
        AffineElement::identity(self.dim)
    }

    fn compose(&self, outer: &Self::Element, inner: &Self::Element) -> Self::Element {
        compose_affine(outer, inner)
    }

    fn inverse(&self, e: &Self::Element) -> Self::Element {
        e.inverse()
    }

    fn apply(&self, e: &Self::Element, x: &Alternative<T>) -> Result<Alternative<T>> {
        match x {
            Alternative::Vector(v) if v.len() == e.dimension() => {
                Ok(Alternative::Vector(e.apply_vector(v)))
            }
            _ => Err(Error::DomainMismatch(x.to_string(), "affine".into())),
        }
    }

    fn elements(&self) -> Option<&[Self::Element]> {
        Some(&self.elements)
    }

    fn element_to_json(&self, e: &Self::Element) -> Value {
        match e.mixing_point() {
            Some(z) => json!({ "alpha": scalar_to_json(&e.alpha), "z": vector_to_json(&z) }),
            None => json!({ "alpha": scalar_to_json(&e.alpha), "shift": vector_to_json(&e.shift) }),
        }
    }

    fn element_from_json(&self, v: &Value, path: &str) -> Result<Self::Element> {
        let alpha = v
            .get("alpha")
            .ok_or_else(|| Error::json(path, "missing \"alpha\""))?;
        let alpha: T = scalar_from_json(alpha, &format!("{path}.alpha"))?;
        let bad_alpha = |e: Error| Error::json(format!("{path}.alpha"), e.to_string());
        let e = if let Some(z) = v.get("z") {
            AffineElement::mixture(alpha, vector_from_json(z, &format!("{path}.z"))?)
                .map_err(bad_alpha)?
        } else if let Some(s) = v.get("shift") {
            AffineElement::direct(alpha, vector_from_json(s, &format!("{path}.shift"))?)
                .map_err(bad_alpha)?
        } else {
            return Err(Error::json(path, "missing \"z\" or \"shift\""));
        };
        if e.dimension() != self.dim {
            return Err(Error::json(path, format!("expected dimension {}", self.dim)));
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(s: &str) -> Q {
        Q::parse_exact(s).unwrap()
    }

    fn v(xs: &[&str]) -> Vec<Q> {
        xs.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn identity_on_the_left_is_neutral() {
        // alpha = 1 with any z is the identity map
        let id = AffineElement::mixture(q("1"), v(&["5", "-3"])).unwrap();
        let g = AffineElement::mixture(q("1/3"), v(&["1", "2"])).unwrap();
        assert_eq!(compose_affine(&id, &g), g);
    }

    #[test]
    fn halving_after_doubling_is_identity() {
        let f = AffineElement::mixture(q("2"), v(&["0", "0"])).unwrap();
        let g = AffineElement::mixture(q("1/2"), v(&["0", "0"])).unwrap();
        assert_eq!(compose_affine(&f, &g), AffineElement::identity(2));
    }

    #[test]
    fn inverse_keeps_the_mixing_point() {
        let f = AffineElement::mixture(q("3/4"), v(&["1", "2"])).unwrap();
        let inv = f.inverse();
        assert_eq!(inv.alpha(), &q("4/3"));
        assert_eq!(inv.mixing_point().unwrap(), v(&["1", "2"]));
        let x = v(&["7", "-1/2"]);
        assert_eq!(inv.apply_vector(&f.apply_vector(&x)), x);
    }

    #[test]
    fn degenerate_product_becomes_a_translation() {
        let f = AffineElement::mixture(q("2"), v(&["1", "0"])).unwrap();
        let g = AffineElement::mixture(q("1/2"), v(&["0", "1"])).unwrap();
        let h = compose_affine(&f, &g);
        assert_eq!(h.alpha(), &q("1"));
        assert!(h.mixing_point().is_none());
        let x = v(&["3", "5"]);
        assert_eq!(h.apply_vector(&x), f.apply_vector(&g.apply_vector(&x)));
    }

    #[test]
    fn json_round_trip() {
        let th = AffineTheory::new(2, vec![]).unwrap();
        for e in [
            AffineElement::mixture(q("1/2"), v(&["1", "0"])).unwrap(),
            AffineElement::direct(q("1"), v(&["1", "-1"])).unwrap(),
            AffineElement::identity(2),
        ] {
            let back = th.element_from_json(&th.element_to_json(&e), "e").unwrap();
            assert_eq!(back, e);
        }
    }
}
