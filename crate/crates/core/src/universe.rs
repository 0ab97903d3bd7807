//! Finite, indexed sets of alternatives.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A single alternative: an opaque label or a vector of exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alternative<T> {
    Label(String),
    Vector(Vec<T>),
}

impl<T: Scalar> Alternative<T> {
    pub fn label(name: impl Into<String>) -> Self {
        Alternative::Label(name.into())
    }

    pub fn vector(coords: impl IntoIterator<Item = T>) -> Self {
        Alternative::Vector(coords.into_iter().collect())
    }

    pub fn as_vector(&self) -> Option<&[T]> {
        match self {
            Alternative::Vector(v) => Some(v),
            Alternative::Label(_) => None,
        }
    }

    pub fn is_zero_vector(&self) -> bool {
        matches!(self, Alternative::Vector(v) if v.iter().all(|c| c.is_zero()))
    }
}

impl<T: Scalar> fmt::Display for Alternative<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alternative::Label(l) => write!(f, "{l}"),
            Alternative::Vector(v) => {
                write!(f, "(")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// An ordered list of distinct alternatives with stable integer indices.
///
/// All alternatives are either labels or vectors of one shared dimension.
#[derive(Clone, Debug)]
pub struct Universe<T> {
    alternatives: Vec<Alternative<T>>,
    index: HashMap<Alternative<T>, usize>,
}

impl<T: Scalar> PartialEq for Universe<T> {
    fn eq(&self, other: &Self) -> bool {
        self.alternatives == other.alternatives
    }
}

impl<T: Scalar> Eq for Universe<T> {}

impl<T: Scalar> Universe<T> {
    pub fn new(alternatives: Vec<Alternative<T>>) -> Result<Self> {
        let mut index = HashMap::with_capacity(alternatives.len());
        let mut dim: Option<Option<usize>> = None;
        for (i, alt) in alternatives.iter().enumerate() {
            let this_dim = alt.as_vector().map(<[T]>::len);
            match dim {
                None => dim = Some(this_dim),
                Some(d) if d != this_dim => {
                    return Err(Error::InvalidData(format!(
                        "alternative {alt} does not match the kind/dimension of the universe"
                    )))
                }
                _ => {}
            }
            if index.insert(alt.clone(), i).is_some() {
                return Err(Error::InvalidData(format!("duplicate alternative {alt}")));
            }
        }
        Ok(Universe { alternatives, index })
    }

    pub fn labels<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(names.into_iter().map(|n| Alternative::Label(n.into())).collect())
    }

    pub fn vectors(points: impl IntoIterator<Item = Vec<T>>) -> Result<Self> {
        Self::new(points.into_iter().map(Alternative::Vector).collect())
    }

    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn get(&self, i: usize) -> &Alternative<T> {
        &self.alternatives[i]
    }

    pub fn alternatives(&self) -> &[Alternative<T>] {
        &self.alternatives
    }

    pub fn index_of(&self, alt: &Alternative<T>) -> Option<usize> {
        self.index.get(alt).copied()
    }

    /// Dimension of the vector alternatives, `None` for labelled universes.
    pub fn dimension(&self) -> Option<usize> {
        self.alternatives.first().and_then(|a| a.as_vector().map(<[T]>::len))
    }

    pub fn is_vector(&self) -> bool {
        self.dimension().is_some()
    }

    /// Append an alternative unless already present; returns its index.
    pub fn insert(&mut self, alt: Alternative<T>) -> Result<usize> {
        if let Some(i) = self.index_of(&alt) {
            return Ok(i);
        }
        if let Some(first) = self.alternatives.first() {
            if first.as_vector().map(<[T]>::len) != alt.as_vector().map(<[T]>::len) {
                return Err(Error::InvalidData(format!(
                    "alternative {alt} does not match the kind/dimension of the universe"
                )));
            }
        }
        let i = self.alternatives.len();
        self.index.insert(alt.clone(), i);
        self.alternatives.push(alt);
        Ok(i)
    }
}
