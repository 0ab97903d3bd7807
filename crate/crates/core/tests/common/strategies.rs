use aarp::data::{Budget, DataSet, Observation};
use aarp::Universe;
use proptest::prelude::*;

use super::{q, Q};

/// A nonempty subset of `0..n` as a bitmask.
fn nonempty_mask(n: usize) -> impl Strategy<Value = u32> {
    1u32..(1 << n)
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// One explicit observation on `n` labels: a budget and a nonempty choice.
fn explicit_observation(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    nonempty_mask(n).prop_flat_map(|budget| {
        let b = members(budget);
        let k = b.len();
        (Just(b), 1u32..(1 << k)).prop_map(|(b, pick)| {
            let chosen = members(pick).into_iter().map(|i| b[i]).collect();
            (b, chosen)
        })
    })
}

/// Explicit data on labels `a, b, ..` with `n` in `sizes` and up to
/// `max_obs` observations.
pub fn explicit_data(sizes: std::ops::RangeInclusive<usize>, max_obs: usize) -> impl Strategy<Value = DataSet<Q>> {
    sizes.prop_flat_map(move |n| {
        prop::collection::vec(explicit_observation(n), 0..=max_obs).prop_map(move |obs| {
            let u = Universe::labels(["a", "b", "c", "d", "e", "f"].into_iter().take(n)).unwrap();
            let observations = obs.into_iter().map(|(b, c)| Observation::new(Budget::explicit(b), c)).collect();
            DataSet::new(u, observations).unwrap()
        })
    })
}

fn small_positive() -> impl Strategy<Value = Q> {
    (1i64..=9, 1i64..=4).prop_map(|(n, d)| q(&format!("{n}/{d}")))
}

fn small_nonnegative() -> impl Strategy<Value = Q> {
    (0i64..=9, 1i64..=4).prop_map(|(n, d)| q(&format!("{n}/{d}")))
}

/// Two-good linear data whose chosen bundles are nonzero and lie on the
/// budget line (`m = p·x`).
pub fn boundary_data(max_obs: usize) -> impl Strategy<Value = DataSet<Q>> {
    let obs = (
        prop::collection::vec(small_positive(), 2),
        prop::collection::vec(small_nonnegative(), 2).prop_filter("nonzero bundle", |x| x.iter().any(|c| *c != q("0"))),
    );
    prop::collection::vec(obs, 1..=max_obs).prop_map(|obs| {
        let mut u = Universe::new(Vec::new()).unwrap();
        let mut observations = Vec::new();
        for (p, x) in obs {
            let m = p[0].clone() * x[0].clone() + p[1].clone() * x[1].clone();
            let i = match u.index_of(&aarp::Alternative::Vector(x.clone())) {
                Some(i) => i,
                None => u.insert(aarp::Alternative::Vector(x)).unwrap(),
            };
            observations.push(Observation::new(Budget::linear(p, m), [i]));
        }
        DataSet::new(u, observations).unwrap()
    })
}
