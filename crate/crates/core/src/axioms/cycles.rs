//! Exact cycle search shared by HARP (products of scaling factors) and QARP
//! (sums of translations).
//!
//! Nodes are pairs (observation, chosen point). The edge `a -> b` carries the
//! largest parameter that moves the point of `b` into the budget of `a`, or
//! `None` when every parameter does. A cycle whose aggregate exceeds the unit
//! is always a violation; a cycle whose aggregate equals the unit violates
//! when the landing of its closing edge is affordable but not chosen.

use crate::data::DataSet;
use crate::scalar::{from_i64, Scalar};
use crate::universe::Alternative;
use crate::verdict::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    Product,
    Sum,
}

impl Mode {
    pub(crate) fn unit<T: Scalar>(self) -> T {
        match self {
            Mode::Product => T::one(),
            Mode::Sum => T::zero(),
        }
    }

    pub(crate) fn combine<T: Scalar>(self, a: &T, b: &T) -> T {
        match self {
            Mode::Product => a.clone() * b.clone(),
            Mode::Sum => a.clone() + b.clone(),
        }
    }

    /// The `r` with `combine(w, r) = unit`.
    fn residual<T: Scalar>(self, w: &T) -> T {
        match self {
            Mode::Product => T::one() / w.clone(),
            Mode::Sum => -w.clone(),
        }
    }

    fn weight_name(self) -> &'static str {
        match self {
            Mode::Product => "alphas",
            Mode::Sum => "ts",
        }
    }
}

pub(crate) struct Graph<T> {
    mode: Mode,
    /// (observation, universe index of the chosen point)
    nodes: Vec<(usize, usize)>,
    w: Vec<Vec<Option<T>>>,
}

impl<T: Scalar> Graph<T> {
    pub(crate) fn new(d: &DataSet<T>, mode: Mode, weight: impl Fn(usize, &[T]) -> Option<T>) -> Self {
        let nodes: Vec<(usize, usize)> = (0..d.len())
            .flat_map(|i| d.observation(i).chosen.iter().map(move |&c| (i, c)))
            .collect();
        let point = |b: usize| d.universe().get(nodes[b].1).as_vector().expect("linear budgets hold vectors");
        let w = nodes
            .iter()
            .map(|&(i, _)| (0..nodes.len()).map(|b| weight(i, point(b))).collect())
            .collect();
        Graph { mode, nodes, w }
    }

    fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Cycle with aggregate above the unit, as a node list in edge order.
    fn improving_cycle(&self) -> Option<Vec<usize>> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if self.w[a][b].is_none() {
                    return Some(if a == b { vec![a] } else { vec![a, b] });
                }
            }
        }
        let mut dist: Vec<T> = vec![self.mode.unit(); n];
        let mut parent = vec![usize::MAX; n];
        for round in 0..=n {
            let mut relaxed = None;
            for u in 0..n {
                for v in 0..n {
                    let w = self.w[u][v].as_ref().expect("finite after the check above");
                    let cand = self.mode.combine(&dist[u], w);
                    if cand > dist[v] {
                        dist[v] = cand;
                        parent[v] = u;
                        relaxed = Some(v);
                    }
                }
            }
            match relaxed {
                None => return None,
                Some(mut x) if round == n => {
                    for _ in 0..n {
                        x = parent[x];
                    }
                    let mut cycle = vec![x];
                    let mut y = parent[x];
                    while y != x {
                        cycle.push(y);
                        y = parent[y];
                    }
                    cycle.reverse();
                    return Some(cycle);
                }
                Some(_) => {}
            }
        }
        None
    }

    /// Best aggregates over paths (length ≥ 0) with first hops for
    /// reconstruction; only meaningful without improving cycles.
    fn best_paths(&self) -> (Vec<Vec<T>>, Vec<Vec<usize>>) {
        let n = self.len();
        let mut dist: Vec<Vec<T>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| if a == b { self.mode.unit() } else { self.w[a][b].clone().expect("finite") })
                    .collect()
            })
            .collect();
        let mut next: Vec<Vec<usize>> = (0..n).map(|_| (0..n).collect()).collect();
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let cand = self.mode.combine(&dist[a][k], &dist[k][b]);
                    if cand > dist[a][b] {
                        dist[a][b] = cand;
                        next[a][b] = next[a][k];
                    }
                }
            }
        }
        (dist, next)
    }
}

fn rotate_to_min(cycle: &mut [usize]) {
    if let Some(pos) = cycle.iter().enumerate().min_by_key(|(_, &v)| v).map(|(p, _)| p) {
        cycle.rotate_left(pos);
    }
}

/// First violation, or `None`. `invert(x, a)` applies the inverse of the
/// element with parameter `a` to `x`.
pub(crate) fn find_violation<T: Scalar>(
    d: &DataSet<T>,
    graph: &Graph<T>,
    invert: impl Fn(&[T], &T) -> Vec<T>,
) -> Option<Witness<T, T>> {
    let mode = graph.mode;
    let point = |v: usize| d.universe().get(graph.nodes[v].1);
    let obs = |v: usize| graph.nodes[v].0;

    if let Some(mut cycle) = graph.improving_cycle() {
        rotate_to_min(&mut cycle);
        let k = cycle.len();
        let edges: Vec<Option<T>> = (0..k).map(|j| graph.w[cycle[j]][cycle[(j + 1) % k]].clone()).collect();
        let finite = edges.iter().flatten().fold(mode.unit(), |acc, w| mode.combine(&acc, w));
        let unbounded = match mode {
            Mode::Product => from_i64::<T>(2) / finite.clone().min(T::one()),
            Mode::Sum => T::one() - finite.clone().min(T::zero()),
        };
        let mut params: Vec<T> = edges.iter().map(|w| w.clone().unwrap_or_else(|| unbounded.clone())).collect();
        let total = params.iter().fold(mode.unit(), |acc, w| mode.combine(&acc, w));
        let start = obs(cycle[0]);
        let x1 = point(cycle[0]).as_vector().expect("vector");
        let tries = d.observation(start).chosen.len() + 1;
        let denom = from_i64::<T>(tries as i64 + 1);
        for step in 0..=tries {
            let r = from_i64::<T>((tries + 1 - step) as i64) / denom.clone();
            let aggregate = match mode {
                Mode::Product => T::one() + (total.clone() - T::one()) * r,
                Mode::Sum => total.clone() * r,
            };
            let landing = Alternative::Vector(invert(x1, &aggregate));
            if d.in_unchosen(start, &landing) {
                params[0] = match mode {
                    Mode::Product => params[0].clone() * aggregate / total.clone(),
                    Mode::Sum => params[0].clone() - (total.clone() - aggregate),
                };
                let mut observations: Vec<usize> = cycle.iter().map(|&v| obs(v)).collect();
                let mut points: Vec<Alternative<T>> = cycle.iter().map(|&v| point(v).clone()).collect();
                let cycle_obs = observations.clone();
                observations.push(start);
                points.push(point(cycle[0]).clone());
                return Some(Witness {
                    observations,
                    points,
                    transformations: params.clone(),
                    landing,
                    cycle: Some(cycle_obs),
                    weights: Some((mode.weight_name().into(), params)),
                });
            }
        }
        return None;
    }

    let (best, next) = graph.best_paths();
    let n = graph.len();
    for u in 0..n {
        for v in 0..n {
            let w = graph.w[u][v].as_ref().expect("finite");
            if mode.combine(w, &best[v][u]) != mode.unit() {
                continue;
            }
            let landing = Alternative::Vector(invert(point(v).as_vector().expect("vector"), &mode.residual(w)));
            if !d.in_unchosen(obs(u), &landing) {
                continue;
            }
            let mut path = vec![v];
            while *path.last().unwrap() != u && path.len() <= n {
                path.push(next[*path.last().unwrap()][u]);
            }
            let params: Vec<T> = path.windows(2).map(|e| graph.w[e[0]][e[1]].clone().expect("finite")).collect();
            let observations: Vec<usize> = path.iter().map(|&c| obs(c)).collect();
            return Some(Witness {
                cycle: Some(observations.clone()),
                observations,
                points: path.iter().map(|&c| point(c).clone()).collect(),
                transformations: params.clone(),
                landing,
                weights: Some((mode.weight_name().into(), params)),
            });
        }
    }
    None
}
