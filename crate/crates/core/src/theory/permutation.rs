use std::collections::{HashSet, VecDeque};

use serde_json::Value;

use super::Theory;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::universe::{Alternative, Universe};

/// A bijection of universe indices; `images()[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidData(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `i -> self(inner(i))`.
    pub fn after(&self, inner: &Permutation) -> Permutation {
        Permutation(inner.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }
}

/// The finite group generated by permutations of a labelled universe.
#[derive(Clone, Debug)]
pub struct PermutationGroup<T> {
    universe: Universe<T>,
    elements: Vec<Permutation>,
}

impl<T: Scalar> PermutationGroup<T> {
    /// Closes the generators under composition; the identity comes first and
    /// the remaining elements follow in breadth-first discovery order.
    pub fn generate(universe: &Universe<T>, generators: Vec<Permutation>) -> Result<Self> {
        let n = universe.len();
        if let Some(g) = generators.iter().find(|g| g.0.len() != n) {
            return Err(Error::InvalidData(format!(
                "generator {:?} does not act on {n} alternatives",
                g.0
            )));
        }
        let id = Permutation::identity(n);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in &generators {
                let next = g.after(&e);
                if seen.insert(next.clone()) {
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(PermutationGroup { universe: universe.clone(), elements })
    }

    pub fn universe(&self) -> &Universe<T> {
        &self.universe
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

impl<T: Scalar> Theory<T> for PermutationGroup<T> {
    type Element = Permutation;

    fn name(&self) -> &str {
        "permutation"
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.universe.len())
    }

    fn compose(&self, outer: &Permutation, inner: &Permutation) -> Permutation {
        outer.after(inner)
    }

    fn inverse(&self, e: &Permutation) -> Permutation {
        e.inverse()
    }

    fn apply(&self, e: &Permutation, x: &Alternative<T>) -> Result<Alternative<T>> {
        let i = self
            .universe
            .index_of(x)
            .ok_or_else(|| Error::DomainMismatch(x.to_string(), "permutation".into()))?;
        Ok(self.universe.get(e.image(i)).clone())
    }

    fn elements(&self) -> Option<&[Permutation]> {
        Some(&self.elements)
    }

    fn element_to_json(&self, e: &Permutation) -> Value {
        Value::Array(e.0.iter().map(|&i| Value::from(i)).collect())
    }

    fn element_from_json(&self, v: &Value, path: &str) -> Result<Permutation> {
        let arr = v.as_array().ok_or_else(|| Error::json(path, "expected an index array"))?;
        let images = arr
            .iter()
            .enumerate()
            .map(|(k, x)| {
                x.as_u64()
                    .map(|i| i as usize)
                    .ok_or_else(|| Error::json(format!("{path}[{k}]"), "expected an index"))
            })
            .collect::<Result<Vec<_>>>()?;
        if images.len() != self.universe.len() {
            return Err(Error::json(path, "permutation has the wrong length"));
        }
        Permutation::new(images).map_err(|e| Error::json(path, e.to_string()))
    }
}
