//! Outcomes of the axiom checks: pass, or a violation with a replayable
//! witness; behavioral checks and completion additionally carry a
//! certificate.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::json::{alternative_from_json, alternative_to_json, array, field, scalar_from_json, scalar_to_json};
use crate::scalar::Scalar;
use crate::theory::Theory;
use crate::universe::Alternative;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Violation,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Violation => "violation",
        }
    }
}

/// A violating sequence: points `x_1..x_n` chosen at the listed (0-based)
/// observations and elements `f_1..f_{n-1}` with `f_j(x_{j+1}) ∈ B_{i_j}`,
/// such that `(f_1 ∘ .. ∘ f_{n-1})^{-1}(x_1)` — the landing — lies in
/// `B_{i_n}` but is not chosen there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<T, E> {
    pub observations: Vec<usize>,
    pub points: Vec<Alternative<T>>,
    pub transformations: Vec<E>,
    pub landing: Alternative<T>,
    /// For cycle-based checkers: the distinct observations of the cycle.
    pub cycle: Option<Vec<usize>>,
    /// For cycle-based checkers: the edge parameters, under a name such as
    /// `"alphas"` or `"ts"`.
    pub weights: Option<(String, Vec<T>)>,
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate<T> {
    /// Consideration sets `Γ(B)`, one per observation.
    Consideration(Vec<Vec<Alternative<T>>>),
    /// Retained sets `B↓`, one per observation.
    Truncation(Vec<Vec<Alternative<T>>>),
    /// A rationalizing relation, as pairs of alternatives.
    Relation(Vec<(Alternative<T>, Alternative<T>)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<T, E> {
    pub axiom: String,
    pub outcome: Outcome,
    pub witness: Option<Witness<T, E>>,
    pub certificate: Option<Certificate<T>>,
    pub notes: Vec<String>,
}

impl<T: Scalar, E: Clone> Verdict<T, E> {
    pub fn pass(axiom: impl Into<String>) -> Self {
        Verdict { axiom: axiom.into(), outcome: Outcome::Pass, witness: None, certificate: None, notes: Vec::new() }
    }

    pub fn violation(axiom: impl Into<String>, witness: Option<Witness<T, E>>) -> Self {
        Verdict { axiom: axiom.into(), outcome: Outcome::Violation, witness, certificate: None, notes: Vec::new() }
    }

    pub fn with_certificate(mut self, c: Certificate<T>) -> Self {
        self.certificate = Some(c);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn is_violation(&self) -> bool {
        self.outcome == Outcome::Violation
    }

    /// Same verdict under a different axiom name and element type.
    pub fn map_elements<F: Clone>(self, axiom: &str, f: impl Fn(E) -> F) -> Verdict<T, F> {
        Verdict {
            axiom: axiom.to_string(),
            outcome: self.outcome,
            witness: self.witness.map(|w| Witness {
                observations: w.observations,
                points: w.points,
                transformations: w.transformations.into_iter().map(f).collect(),
                landing: w.landing,
                cycle: w.cycle,
                weights: w.weights,
            }),
            certificate: self.certificate,
            notes: self.notes,
        }
    }
}

fn alts_to_json<T: Scalar>(xs: &[Alternative<T>]) -> Value {
    Value::Array(xs.iter().map(alternative_to_json).collect())
}

fn alts_from_json<T: Scalar>(v: &Value, path: &str) -> Result<Vec<Alternative<T>>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, a)| alternative_from_json(a, &format!("{path}[{i}]")))
        .collect()
}

fn indices_from_json(v: &Value, path: &str) -> Result<Vec<usize>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| match x.as_u64() {
            Some(k) if k >= 1 => Ok(k as usize - 1),
            _ => Err(Error::json(format!("{path}[{i}]"), "expected a 1-based observation number")),
        })
        .collect()
}

fn one_based(xs: &[usize]) -> Value {
    Value::Array(xs.iter().map(|&i| Value::from(i + 1)).collect())
}

impl<T: Scalar> Certificate<T> {
    pub fn to_json(&self) -> Value {
        let sets = |s: &[Vec<Alternative<T>>]| Value::Array(s.iter().map(|x| alts_to_json(x)).collect());
        match self {
            Certificate::Consideration(s) => json!({ "consideration": sets(s) }),
            Certificate::Truncation(s) => json!({ "truncation": sets(s) }),
            Certificate::Relation(pairs) => json!({
                "relation": pairs
                    .iter()
                    .map(|(x, y)| json!([alternative_to_json(x), alternative_to_json(y)]))
                    .collect::<Vec<_>>()
            }),
        }
    }

    pub fn from_json(v: &Value, path: &str) -> Result<Self> {
        let sets = |v: &Value, p: &str| -> Result<Vec<Vec<Alternative<T>>>> {
            array(v, p)?
                .iter()
                .enumerate()
                .map(|(i, s)| alts_from_json(s, &format!("{p}[{i}]")))
                .collect()
        };
        if let Some(s) = v.get("consideration") {
            Ok(Certificate::Consideration(sets(s, &format!("{path}.consideration"))?))
        } else if let Some(s) = v.get("truncation") {
            Ok(Certificate::Truncation(sets(s, &format!("{path}.truncation"))?))
        } else if let Some(r) = v.get("relation") {
            let p = format!("{path}.relation");
            let pairs = array(r, &p)?
                .iter()
                .enumerate()
                .map(|(i, pair)| {
                    let xs = alts_from_json(pair, &format!("{p}[{i}]"))?;
                    match <[Alternative<T>; 2]>::try_from(xs) {
                        Ok([x, y]) => Ok((x, y)),
                        Err(_) => Err(Error::json(format!("{p}[{i}]"), "expected a pair")),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Certificate::Relation(pairs))
        } else {
            Err(Error::json(path, "unknown certificate kind"))
        }
    }
}

impl<T: Scalar, E: Clone> Verdict<T, E> {
    pub fn to_json<G: Theory<T, Element = E>>(&self, theory: &G) -> Value {
        let mut obj = Map::new();
        obj.insert("axiom".into(), Value::String(self.axiom.clone()));
        obj.insert("outcome".into(), Value::String(self.outcome.as_str().into()));
        if let Some(w) = &self.witness {
            let mut wj = Map::new();
            wj.insert("observations".into(), one_based(&w.observations));
            if let Some(c) = &w.cycle {
                wj.insert("cycle".into(), one_based(c));
            }
            if let Some((name, values)) = &w.weights {
                wj.insert(name.clone(), Value::Array(values.iter().map(scalar_to_json).collect()));
            }
            wj.insert("points".into(), alts_to_json(&w.points));
            wj.insert(
                "transformations".into(),
                Value::Array(w.transformations.iter().map(|e| theory.element_to_json(e)).collect()),
            );
            wj.insert("landing".into(), alternative_to_json(&w.landing));
            obj.insert("witness".into(), Value::Object(wj));
        }
        if let Some(c) = &self.certificate {
            obj.insert("certificate".into(), c.to_json());
        }
        if !self.notes.is_empty() {
            obj.insert("notes".into(), json!(self.notes));
        }
        Value::Object(obj)
    }

    pub fn from_json<G: Theory<T, Element = E>>(v: &Value, theory: &G) -> Result<Self> {
        let axiom = field(v, "axiom", "")?
            .as_str()
            .ok_or_else(|| Error::json("axiom", "expected a string"))?
            .to_string();
        let outcome = match field(v, "outcome", "")?.as_str() {
            Some("pass") => Outcome::Pass,
            Some("violation") => Outcome::Violation,
            _ => return Err(Error::json("outcome", "expected \"pass\" or \"violation\"")),
        };
        let witness = match v.get("witness") {
            None => None,
            Some(w) => {
                let known = ["observations", "cycle", "points", "transformations", "landing"];
                let weights = w
                    .as_object()
                    .ok_or_else(|| Error::json("witness", "expected an object"))?
                    .iter()
                    .find(|(k, _)| !known.contains(&k.as_str()))
                    .map(|(k, vals)| -> Result<(String, Vec<T>)> {
                        let p = format!("witness.{k}");
                        let values = array(vals, &p)?
                            .iter()
                            .enumerate()
                            .map(|(i, x)| scalar_from_json(x, &format!("{p}[{i}]")))
                            .collect::<Result<Vec<T>>>()?;
                        Ok((k.clone(), values))
                    })
                    .transpose()?;
                let transformations = array(field(w, "transformations", "witness")?, "witness.transformations")?
                    .iter()
                    .enumerate()
                    .map(|(i, e)| theory.element_from_json(e, &format!("witness.transformations[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                Some(Witness {
                    observations: indices_from_json(field(w, "observations", "witness")?, "witness.observations")?,
                    points: alts_from_json(field(w, "points", "witness")?, "witness.points")?,
                    transformations,
                    landing: alternative_from_json(field(w, "landing", "witness")?, "witness.landing")?,
                    cycle: w.get("cycle").map(|c| indices_from_json(c, "witness.cycle")).transpose()?,
                    weights,
                })
            }
        };
        let certificate = v.get("certificate").map(|c| Certificate::from_json(c, "certificate")).transpose()?;
        let notes = match v.get("notes") {
            None => Vec::new(),
            Some(n) => array(n, "notes")?
                .iter()
                .map(|s| s.as_str().map(str::to_string).ok_or_else(|| Error::json("notes", "expected strings")))
                .collect::<Result<_>>()?,
        };
        Ok(Verdict { axiom, outcome, witness, certificate, notes })
    }

    /// Plain text report carrying the same information as [`Self::to_json`].
    pub fn to_human<G: Theory<T, Element = E>>(&self, theory: &G) -> String {
        let mut out = format!("{}: {}\n", self.axiom, self.outcome.as_str());
        let list = |xs: &[Alternative<T>]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        if let Some(w) = &self.witness {
            let obs: Vec<String> = w.observations.iter().map(|i| (i + 1).to_string()).collect();
            let _ = writeln!(out, "  observations: {}", obs.join(" -> "));
            if let Some(c) = &w.cycle {
                let c: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
                let _ = writeln!(out, "  cycle: {}", c.join(" -> "));
            }
            if let Some((name, values)) = &w.weights {
                let v: Vec<String> = values.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "  {name}: {}", v.join(", "));
            }
            let _ = writeln!(out, "  points: {}", list(&w.points));
            let t: Vec<String> = w.transformations.iter().map(|e| theory.describe(e)).collect();
            let _ = writeln!(out, "  transformations: {}", t.join(", "));
            let _ = writeln!(out, "  landing: {}", w.landing);
        }
        match &self.certificate {
            Some(Certificate::Consideration(s)) | Some(Certificate::Truncation(s)) => {
                let kind = if matches!(self.certificate, Some(Certificate::Consideration(_))) {
                    "consideration set"
                } else {
                    "retained set"
                };
                for (i, set) in s.iter().enumerate() {
                    let _ = writeln!(out, "  {kind} {}: {{{}}}", i + 1, list(set));
                }
            }
            Some(Certificate::Relation(pairs)) => {
                let _ = writeln!(out, "  relation ({} pairs):", pairs.len());
                for (x, y) in pairs {
                    let _ = writeln!(out, "    {x} >= {y}");
                }
            }
            None => {}
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::{ScalingElement, ScalingTheory};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(s: &str) -> Q {
        Q::parse_exact(s).unwrap()
    }

    #[test]
    fn json_round_trip_with_witness() {
        let th = ScalingTheory::<Q>::new();
        let v = |a: &str, b: &str| Alternative::vector([q(a), q(b)]);
        let verdict = Verdict::violation(
            "harp",
            Some(Witness {
                observations: vec![0, 1, 0],
                points: vec![v("4", "0"), v("0", "2"), v("4", "0")],
                transformations: vec![ScalingElement::new(q("2")).unwrap(), ScalingElement::new(q("1")).unwrap()],
                landing: v("2", "0"),
                cycle: Some(vec![0, 1]),
                weights: Some(("alphas".into(), vec![q("2"), q("1")])),
            }),
        )
        .with_note("exact");
        let j = verdict.to_json(&th);
        assert_eq!(j["witness"]["cycle"], json!([1, 2]));
        assert_eq!(j["witness"]["alphas"], json!(["2", "1"]));
        assert_eq!(Verdict::from_json(&j, &th).unwrap(), verdict);
        let text = verdict.to_human(&th);
        assert!(text.contains("cycle: 1 -> 2") && text.contains("alphas: 2, 1"));
    }

    #[test]
    fn certificates_round_trip() {
        let th = ScalingTheory::<Q>::new();
        let a = Alternative::<Q>::label("a");
        let b = Alternative::<Q>::label("b");
        for c in [
            Certificate::Consideration(vec![vec![a.clone(), b.clone()]]),
            Certificate::Truncation(vec![vec![], vec![b.clone()]]),
            Certificate::Relation(vec![(a.clone(), b.clone()), (a.clone(), a.clone())]),
        ] {
            let verdict: Verdict<Q, ScalingElement<Q>> = Verdict::pass("x").with_certificate(c);
            assert_eq!(Verdict::from_json(&verdict.to_json(&th), &th).unwrap(), verdict);
        }
    }
}
