use std::collections::VecDeque;

use crate::data::DataSet;
use crate::scalar::Scalar;
use crate::theory::Identity;
use crate::verdict::{Verdict, Witness};

/// Tarjan's strongly connected components; returns the component id of
/// every vertex.
pub(crate) fn scc(adj: &[Vec<usize>]) -> Vec<usize> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        comp: Vec<usize>,
        next_index: usize,
        next_comp: usize,
    }
    fn visit(s: &mut State<'_>, v: usize) {
        s.index[v] = Some(s.next_index);
        s.low[v] = s.next_index;
        s.next_index += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for &w in &s.adj[v] {
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                _ => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            while let Some(w) = s.stack.pop() {
                s.on_stack[w] = false;
                s.comp[w] = s.next_comp;
                if w == v {
                    break;
                }
            }
            s.next_comp += 1;
        }
    }
    let n = adj.len();
    let mut s = State {
        adj,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        comp: vec![0; n],
        next_index: 0,
        next_comp: 0,
    };
    for v in 0..n {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    s.comp
}

fn shortest_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// SARP: observation `i` points to `j` when a chosen point of `j` is
/// affordable at `i`; the edge is strict when that point is not chosen at
/// `i`. The data violate SARP iff a strict edge closes a cycle.
pub fn check_sarp<T: Scalar>(d: &DataSet<T>) -> Verdict<T, Identity> {
    let n = d.len();
    let mut adj = vec![Vec::new(); n];
    let mut strict = Vec::new();
    for (i, out) in adj.iter_mut().enumerate() {
        for j in 0..n {
            if d.chosen(j).any(|x| d.in_budget(i, x)) {
                out.push(j);
            }
            if let Some(x) = d.chosen(j).find(|x| d.in_unchosen(i, x)) {
                strict.push((i, j, x.clone()));
            }
        }
    }
    let comp = scc(&adj);
    let Some((last, start, x1)) = strict.into_iter().find(|(u, s, _)| comp[*u] == comp[*s]) else {
        return Verdict::pass("sarp");
    };
    let observations = shortest_path(&adj, start, last);
    let mut points = vec![x1.clone()];
    for pair in observations.windows(2) {
        let x = d.chosen(pair[1]).find(|x| d.in_budget(pair[0], x)).expect("edge has a chosen point");
        points.push(x.clone());
    }
    let transformations = vec![Identity; observations.len() - 1];
    Verdict::violation(
        "sarp",
        Some(Witness { cycle: Some(observations.clone()), observations, points, transformations, landing: x1, weights: None }),
    )
}
