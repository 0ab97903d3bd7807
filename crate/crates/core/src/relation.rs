//! Finite binary relations over universe indices.

use std::fmt;

use crate::error::{Error, Result};

/// A binary relation on `{0, .., n-1}` stored as a dense boolean matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { n, bits: vec![false; n * n] }
    }

    pub fn diagonal(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    pub fn full(n: usize) -> Self {
        Relation { n, bits: vec![true; n * n] }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(n);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    /// Size of the underlying universe.
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.n + y]
    }

    #[inline]
    pub fn insert(&mut self, x: usize, y: usize) -> bool {
        let slot = &mut self.bits[x * self.n + y];
        let fresh = !*slot;
        *slot = true;
        fresh
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        self.bits[x * self.n + y] = false;
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|b| *b)
    }

    /// Pairs in row-major (lexicographic) order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(move |(k, _)| (k / n, k % n))
    }

    pub fn inverse(&self) -> Relation {
        Relation::from_pairs(self.n, self.pairs().map(|(x, y)| (y, x)))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.same_universe(other)?;
        Ok(Relation {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a || *b).collect(),
        })
    }

    pub fn is_subset(&self, other: &Relation) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.bits.iter().zip(&other.bits).all(|(a, b)| !*a || *b))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.contains(i, i))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.contains(x, y) || self.contains(y, x)))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).filter(|&y| self.contains(x, y)).all(|y| {
                (0..n).all(|z| !self.contains(y, z) || self.contains(x, z))
            })
        })
    }

    pub(crate) fn same_universe(&self, other: &Relation) -> Result<()> {
        if self.n != other.n {
            return Err(Error::UniverseMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// Asymmetric part `{(x,y) in R : (y,x) not in R}`.
pub fn strict_part(r: &Relation) -> Relation {
    Relation::from_pairs(r.n, r.pairs().filter(|&(x, y)| !r.contains(y, x)))
}

/// Pairs comparable in neither direction, in lexicographic order.
pub fn noncomparable(r: &Relation) -> Vec<(usize, usize)> {
    let n = r.n;
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| !r.contains(x, y) && !r.contains(y, x))
        .collect()
}

/// Smallest transitive superset (Warshall).
pub fn transitive_closure(r: &Relation) -> Relation {
    let n = r.n;
    let mut out = r.clone();
    for k in 0..n {
        for i in 0..n {
            if !out.contains(i, k) {
                continue;
            }
            for j in 0..n {
                if out.contains(k, j) {
                    out.insert(i, j);
                }
            }
        }
    }
    out
}

/// `true` iff `extended` contains `base` and keeps every strict pair of `base`.
///
/// For nested relations this is the same as the reversed strict part of
/// `base` being disjoint from `extended`.
pub fn is_extension(base: &Relation, extended: &Relation) -> Result<bool> {
    if !base.is_subset(extended)? {
        return Ok(false);
    }
    Ok(first_reversal(base, extended).is_none())
}

/// First pair of `P(base)^{-1} ∩ other` in lexicographic order.
pub fn first_reversal(base: &Relation, other: &Relation) -> Option<(usize, usize)> {
    base.pairs()
        .filter(|&(x, y)| !base.contains(y, x))
        .map(|(x, y)| (y, x))
        .filter(|&(y, x)| other.contains(y, x))
        .min()
}
