#![allow(dead_code)]

pub mod strategies;

use aarp::data::{Budget, DataSet, Observation};
use aarp::{Alternative, Rational, Scalar, Universe};

pub type Q = Rational;

pub fn q(s: &str) -> Q {
    Q::parse_exact(s).unwrap()
}

pub fn v(xs: &[&str]) -> Vec<Q> {
    xs.iter().map(|s| q(s)).collect()
}

pub fn alt(xs: &[&str]) -> Alternative<Q> {
    Alternative::Vector(v(xs))
}

/// Linear data set from `(prices, income, chosen point)` triples.
pub fn linear(obs: &[(&[&str], &str, &[&str])]) -> DataSet<Q> {
    let mut u = Universe::new(Vec::new()).unwrap();
    let mut observations = Vec::new();
    for (p, m, x) in obs {
        let i = u.insert(alt(x)).unwrap();
        observations.push(Observation::new(Budget::linear(v(p), q(m)), [i]));
    }
    DataSet::new(u, observations).unwrap()
}

/// Explicit data set on labels `a, b, c, ..` from `(budget, chosen)` pairs.
pub fn explicit(n: usize, obs: &[(&[usize], &[usize])]) -> DataSet<Q> {
    let names = ["a", "b", "c", "d", "e", "f"];
    let u = Universe::labels(names.into_iter().take(n)).unwrap();
    let observations = obs
        .iter()
        .map(|(b, c)| Observation::new(Budget::explicit(b.iter().copied()), c.iter().copied()))
        .collect();
    DataSet::new(u, observations).unwrap()
}
