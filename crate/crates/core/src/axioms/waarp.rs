use crate::data::DataSet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::theory::{interval_samples, OneParameter, Reach, Theory};
use crate::universe::Alternative;
use crate::verdict::{Verdict, Witness};

enum Candidates<'a, T, E> {
    Listed(&'a [E]),
    Family(&'a dyn OneParameter<T, E>),
}

fn vector<'a, T: Scalar>(x: &'a Alternative<T>, theory: &str) -> Result<&'a [T]> {
    x.as_vector().ok_or_else(|| Error::DomainMismatch(x.to_string(), theory.into()))
}

/// WAARP: no chosen `x_i`, `x_j` and element `f` with `f(x_i) ∈ B_j` and
/// `f^{-1}(x_j) ∈ B_i ∖ C(B_i)`.
///
/// Finite element lists are enumerated. One-parameter theories without a
/// list are decided exactly on linear budgets: the parameters satisfying both
/// memberships form an interval, and a handful of its points suffice to dodge
/// the finitely many chosen alternatives.
pub fn check_waarp<T: Scalar, G: Theory<T>>(d: &DataSet<T>, theory: &G) -> Result<Verdict<T, G::Element>> {
    let source = match (theory.elements(), theory.one_parameter()) {
        (Some(list), _) => Candidates::Listed(list),
        (None, Some(family)) if (0..d.len()).all(|i| d.linear(i).is_ok()) => Candidates::Family(family),
        _ => return Err(Error::NotEnumerable(theory.name().to_string())),
    };
    for i in 0..d.len() {
        for j in 0..d.len() {
            for xi in d.chosen(i) {
                for xj in d.chosen(j) {
                    let elements = match &source {
                        Candidates::Listed(list) => list.to_vec(),
                        Candidates::Family(family) => {
                            let (pj, mj) = d.linear(j)?;
                            let (pi, mi) = d.linear(i)?;
                            let hi = match family.reach(vector(xi, theory.name())?, pj, mj) {
                                Reach::Nothing => continue,
                                Reach::UpTo(p) => Some(p),
                                Reach::Everything => None,
                            };
                            let lo = match family.reach(vector(xj, theory.name())?, pi, mi) {
                                Reach::Nothing => continue,
                                Reach::UpTo(q) => Some(family.inverse_param(&q)),
                                Reach::Everything => None,
                            };
                            let count = d.observation(i).chosen.len() + 1;
                            interval_samples(*family, lo, hi, count)
                                .into_iter()
                                .map(|p| family.from_param(p))
                                .collect()
                        }
                    };
                    for f in elements {
                        if !d.in_budget(j, &theory.apply(&f, xi)?) {
                            continue;
                        }
                        let landing = theory.apply(&theory.inverse(&f), xj)?;
                        if d.in_unchosen(i, &landing) {
                            return Ok(Verdict::violation(
                                "waarp",
                                Some(Witness {
                                    observations: vec![j, i],
                                    points: vec![xj.clone(), xi.clone()],
                                    transformations: vec![f],
                                    landing,
                                    cycle: None,
                                    weights: None,
                                }),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::pass("waarp"))
}
