use super::cycles::{find_violation, Graph, Mode};
use crate::data::DataSet;
use crate::error::{Error, Result};
use crate::scalar::{dot, Scalar};
use crate::theory::ScalingElement;
use crate::verdict::Verdict;

/// HARP: the edge from observation `i` to a chosen `x` has weight
/// `m_i / (p_i · x)`, unbounded when `p_i · x <= 0`. Violation iff some cycle
/// has product above one, or exactly one with an unchosen landing.
pub fn check_harp<T: Scalar>(d: &DataSet<T>) -> Result<Verdict<T, ScalingElement<T>>> {
    for i in 0..d.len() {
        d.linear(i)?;
        if d.chosen(i).any(|x| x.is_zero_vector()) {
            return Err(Error::ZeroChoice(i + 1));
        }
    }
    let graph = Graph::new(d, Mode::Product, |i, x| {
        let (p, m) = d.linear(i).expect("checked");
        let cost = dot(p, x);
        cost.is_positive().then(|| m.clone() / cost)
    });
    let scale_down = |x: &[T], a: &T| x.iter().map(|c| c.clone() / a.clone()).collect();
    Ok(match find_violation(d, &graph, scale_down) {
        None => Verdict::pass("harp"),
        Some(w) => Verdict::violation("harp", Some(w))
            .map_elements("harp", |a| ScalingElement::new(a).expect("positive factor")),
    })
}
