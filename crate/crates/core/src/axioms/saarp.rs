use std::collections::{HashMap, VecDeque};

use crate::data::DataSet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::theory::Theory;
use crate::universe::Alternative;
use crate::verdict::{Verdict, Witness};

/// Bounds for the sequence search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Longest transformation sequence explored; `None` explores until the
    /// state space is exhausted, which only terminates for finite groups.
    pub max_depth: Option<usize>,
    pub max_states: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_depth: None, max_states: 1 << 20 }
    }
}

struct Node<T> {
    obs: usize,
    y: Alternative<T>,
    depth: usize,
    /// Parent node, chosen point index and element index of the edge.
    parent: Option<(usize, usize, usize)>,
}

/// SAARP over a finite element list.
///
/// After choosing `x_1` and `f_1, .., f_k`, all that matters for the rest of
/// a sequence is the current observation and `y = (f_1 ∘ .. ∘ f_k)^{-1}(x_1)`,
/// so the search runs breadth-first over such pairs, starting from every
/// chosen point. A pair `(n, y)` violates when `y ∈ B_n ∖ C(B_n)`.
pub fn check_saarp_generic<T: Scalar, G: Theory<T>>(
    d: &DataSet<T>,
    theory: &G,
    limits: &SearchLimits,
) -> Result<Verdict<T, G::Element>> {
    let elements = theory.elements().ok_or_else(|| Error::NotEnumerable(theory.name().to_string()))?;
    let inverses: Vec<_> = elements.iter().map(|e| theory.inverse(e)).collect();

    // moves[i]: (j, chosen point of j, element) with f(x_j) ∈ B_i
    let mut moves: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); d.len()];
    for (i, out) in moves.iter_mut().enumerate() {
        for j in 0..d.len() {
            for &x in &d.observation(j).chosen {
                for (k, f) in elements.iter().enumerate() {
                    if d.in_budget(i, &theory.apply(f, d.universe().get(x))?) {
                        out.push((j, x, k));
                    }
                }
            }
        }
    }

    let mut nodes: Vec<Node<T>> = Vec::new();
    let mut seen: HashMap<(usize, Alternative<T>), usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for s in 0..d.len() {
        for x in d.chosen(s) {
            if seen.insert((s, x.clone()), nodes.len()).is_none() {
                queue.push_back(nodes.len());
                nodes.push(Node { obs: s, y: x.clone(), depth: 0, parent: None });
            }
        }
    }
    let mut truncated = false;
    while let Some(id) = queue.pop_front() {
        if limits.max_depth.is_some_and(|m| nodes[id].depth >= m) {
            truncated = true;
            continue;
        }
        let obs = nodes[id].obs;
        for &(j, x, k) in &moves[obs] {
            let y = theory.apply(&inverses[k], &nodes[id].y)?;
            let key = (j, y);
            if seen.contains_key(&key) {
                continue;
            }
            if nodes.len() >= limits.max_states {
                return Err(Error::SearchCapExceeded { size: nodes.len() as u128 + 1, cap: limits.max_states as u128 });
            }
            let child = nodes.len();
            nodes.push(Node { obs: j, y: key.1.clone(), depth: nodes[id].depth + 1, parent: Some((id, x, k)) });
            if d.in_unchosen(j, &key.1) {
                return Ok(Verdict::violation("saarp", Some(witness(d, elements, &nodes, child))));
            }
            seen.insert(key, child);
            queue.push_back(child);
        }
    }
    let verdict = Verdict::pass("saarp");
    Ok(if truncated {
        verdict.with_note(format!(
            "no violation among sequences of at most {} transformations",
            limits.max_depth.unwrap_or_default()
        ))
    } else {
        verdict
    })
}

fn witness<T: Scalar, E: Clone>(d: &DataSet<T>, elements: &[E], nodes: &[Node<T>], last: usize) -> Witness<T, E> {
    let mut observations = Vec::new();
    let mut points = Vec::new();
    let mut transformations = Vec::new();
    let mut at = last;
    loop {
        observations.push(nodes[at].obs);
        match nodes[at].parent {
            Some((parent, x, k)) => {
                points.push(d.universe().get(x).clone());
                transformations.push(elements[k].clone());
                at = parent;
            }
            None => {
                points.push(nodes[at].y.clone());
                break;
            }
        }
    }
    observations.reverse();
    points.reverse();
    transformations.reverse();
    Witness { observations, points, transformations, landing: nodes[last].y.clone(), cycle: None, weights: None }
}
