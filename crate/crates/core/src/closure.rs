//! Closure operators on relations: transitive closure `T`, the theory
//! closure `F` and the ordered theory closure `F̄`, plus the completion loop
//! that grows a relation into a complete fixed point of a closure.
//!
//! Theory closures are evaluated through an [`ActionTable`], the finite
//! action of a list of group elements on the universe indices.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::relation::{first_reversal, noncomparable, transitive_closure, Relation};
use crate::scalar::Scalar;
use crate::theory::Theory;
use crate::universe::Universe;

/// What to do when an element maps an alternative outside the universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EscapePolicy {
    /// Fail with [`Error::OrbitEscape`].
    #[default]
    Strict,
    /// Treat the image as undefined; pairs involving it are skipped.
    Restrict,
}

/// Images of every universe index under every element of a finite list,
/// with the element order when the theory has one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTable {
    n: usize,
    images: Vec<Vec<Option<usize>>>,
    /// `ge[a][b]` iff element `a` ≥ element `b`.
    ge: Option<Vec<Vec<bool>>>,
}

impl ActionTable {
    pub fn build<T: Scalar, G: Theory<T>>(
        theory: &G,
        elements: &[G::Element],
        universe: &Universe<T>,
        policy: EscapePolicy,
    ) -> Result<Self> {
        let mut images = Vec::with_capacity(elements.len());
        for e in elements {
            let mut row = Vec::with_capacity(universe.len());
            for x in universe.alternatives() {
                let image = theory.apply(e, x)?;
                match universe.index_of(&image) {
                    Some(i) => row.push(Some(i)),
                    None if policy == EscapePolicy::Restrict => row.push(None),
                    None => {
                        return Err(Error::OrbitEscape {
                            element: theory.describe(e),
                            alternative: x.to_string(),
                        })
                    }
                }
            }
            images.push(row);
        }
        let ge = theory.is_ordered().then(|| {
            elements
                .iter()
                .map(|a| {
                    elements
                        .iter()
                        .map(|b| theory.compare(a, b).is_some_and(|o| o != Ordering::Less))
                        .collect()
                })
                .collect()
        });
        Ok(ActionTable { n: universe.len(), images, ge })
    }

    /// The trivial group acting on `n` alternatives, ordered.
    pub fn identity(n: usize) -> Self {
        ActionTable { n, images: vec![(0..n).map(Some).collect()], ge: Some(vec![vec![true]]) }
    }

    /// A table from raw image rows, mainly for tests and the CLI.
    pub fn from_images(n: usize, images: Vec<Vec<Option<usize>>>, ge: Option<Vec<Vec<bool>>>) -> Self {
        assert!(images.iter().all(|r| r.len() == n), "image rows must cover the universe");
        ActionTable { n, images, ge }
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn element_count(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, element: usize, x: usize) -> Option<usize> {
        self.images[element][x]
    }

    pub fn is_ordered(&self) -> bool {
        self.ge.is_some()
    }

    /// `a ≥ b` in the element order; `None` for unordered tables.
    pub fn geq(&self, a: usize, b: usize) -> Option<bool> {
        self.ge.as_ref().map(|ge| ge[a][b])
    }

    fn check(&self, r: &Relation) -> Result<()> {
        if r.size() != self.n {
            return Err(Error::UniverseMismatch { left: r.size(), right: self.n });
        }
        Ok(())
    }
}

/// `F(R)`: `(x,y)` such that `(f(x), f(y)) ∈ R` for some listed `f`.
pub fn theory_closure(r: &Relation, table: &ActionTable) -> Result<Relation> {
    table.check(r)?;
    let n = table.n;
    let mut out = r.clone();
    for row in &table.images {
        for x in 0..n {
            let Some(fx) = row[x] else { continue };
            for y in 0..n {
                if let Some(fy) = row[y] {
                    if r.contains(fx, fy) {
                        out.insert(x, y);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `F̄(R)`: `(x,y)` such that `(f̄(x), f(y)) ∈ R` for some listed `f̄ ≤ f`.
pub fn ordered_theory_closure(r: &Relation, table: &ActionTable) -> Result<Relation> {
    table.check(r)?;
    let ge = table.ge.as_ref().ok_or_else(|| Error::OrderMissing("action table".into()))?;
    let n = table.n;
    let mut out = r.clone();
    for (hi, hi_row) in table.images.iter().enumerate() {
        for (lo, lo_row) in table.images.iter().enumerate() {
            if !ge[hi][lo] {
                continue;
            }
            for x in 0..n {
                let Some(lx) = lo_row[x] else { continue };
                for y in 0..n {
                    if let Some(hy) = hi_row[y] {
                        if r.contains(lx, hy) {
                            out.insert(x, y);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `R = F(R)`: every listed element maps related pairs to related pairs.
pub fn is_theory_consistent(r: &Relation, table: &ActionTable) -> Result<bool> {
    Ok(theory_closure(r, table)? == *r)
}

/// The closure operators used to build complete relations.
#[derive(Clone, Copy, Debug)]
pub enum Closure<'a> {
    Transitive,
    Theory(&'a ActionTable),
    /// `T ∘ F`, iterated to a common fixed point.
    TransitiveTheory(&'a ActionTable),
    /// `T ∘ F̄`, iterated to a common fixed point.
    TransitiveOrdered(&'a ActionTable),
}

impl Closure<'_> {
    pub fn apply(&self, r: &Relation) -> Result<Relation> {
        match *self {
            Closure::Transitive => Ok(transitive_closure(r)),
            Closure::Theory(t) => theory_closure(r, t),
            Closure::TransitiveTheory(t) => fixpoint(r, |q| theory_closure(&transitive_closure(q), t)),
            Closure::TransitiveOrdered(t) => {
                fixpoint(r, |q| ordered_theory_closure(&transitive_closure(q), t))
            }
        }
    }
}

fn fixpoint(r: &Relation, mut step: impl FnMut(&Relation) -> Result<Relation>) -> Result<Relation> {
    let mut current = r.clone();
    loop {
        let next = transitive_closure(&step(&current)?);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Grows `r` into a complete relation `R*` with `R* = close(R*)` that extends
/// `r`, adding the lexicographically smallest non-comparable pair at every
/// step. If adding a pair would destroy a strict comparison, its reverse is
/// tried instead.
pub fn extend_to_complete(r: &Relation, close: Closure<'_>) -> Result<Relation> {
    let mut current = close.apply(r)?;
    if let Some((x, y)) = first_reversal(r, &current) {
        return Err(Error::NotExtensible(x, y));
    }
    while let Some(&(x, y)) = noncomparable(&current).first() {
        current = [(x, y), (y, x)]
            .into_iter()
            .find_map(|(a, b)| {
                let mut grown = current.clone();
                grown.insert(a, b);
                let closed = close.apply(&grown).ok()?;
                first_reversal(&current, &closed).is_none().then_some(closed)
            })
            .ok_or(Error::NotExtensible(x, y))?;
    }
    Ok(current)
}

/// Adds to the universe every image of its alternatives under the listed
/// elements, repeating `depth` times. Images beyond the last round are left
/// out, so a later strict [`ActionTable::build`] reports any remaining escape.
pub fn augment_universe<T: Scalar, G: Theory<T>>(
    universe: &Universe<T>,
    theory: &G,
    elements: &[G::Element],
    depth: usize,
) -> Result<Universe<T>> {
    let mut out = universe.clone();
    let mut frontier: Vec<usize> = (0..out.len()).collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for &i in &frontier {
            let x = out.get(i).clone();
            for e in elements {
                let before = out.len();
                let j = out.insert(theory.apply(e, &x)?)?;
                if j == before {
                    next.push(j);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(out)
}
