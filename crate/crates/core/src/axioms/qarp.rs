use super::cycles::{find_violation, Graph, Mode};
use crate::data::DataSet;
use crate::error::{Error, Result};
use crate::scalar::{dot, Scalar};
use crate::theory::TranslationElement;
use crate::verdict::Verdict;

/// QARP: the edge from observation `i` to a chosen `x` has weight
/// `(m_i - p_i · x) / p_i1`. Violation iff some cycle has positive sum, or
/// zero sum with an unchosen landing.
pub fn check_qarp<T: Scalar>(d: &DataSet<T>) -> Result<Verdict<T, TranslationElement<T>>> {
    for i in 0..d.len() {
        let (p, _) = d.linear(i)?;
        if !p[0].is_positive() {
            return Err(Error::ZeroNumerairePrice(i + 1));
        }
    }
    let graph = Graph::new(d, Mode::Sum, |i, x| {
        let (p, m) = d.linear(i).expect("checked");
        Some((m.clone() - dot(p, x)) / p[0].clone())
    });
    let shift_back = |x: &[T], t: &T| {
        let mut y = x.to_vec();
        y[0] = y[0].clone() - t.clone();
        y
    };
    Ok(match find_violation(d, &graph, shift_back) {
        None => Verdict::pass("qarp"),
        Some(w) => Verdict::violation("qarp", Some(w)).map_elements("qarp", TranslationElement::new),
    })
}
