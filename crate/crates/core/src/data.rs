//! Budgets, observed choices and the relations and predicates derived from
//! them.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::json::{alternative_from_json, alternative_to_json, array, field, scalar_from_json, scalar_to_json, vector_from_json, vector_to_json};
use crate::relation::Relation;
use crate::scalar::{dot, Scalar};
use crate::theory::{Reach, Theory};
use crate::universe::{Alternative, Universe};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Budget<T> {
    /// A finite set of universe indices, sorted and without repetitions.
    Explicit(Vec<usize>),
    /// `{x : prices · x <= income}`.
    Linear { prices: Vec<T>, income: T },
}

impl<T: Scalar> Budget<T> {
    pub fn explicit(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Budget::Explicit(v)
    }

    pub fn linear(prices: Vec<T>, income: T) -> Self {
        Budget::Linear { prices, income }
    }

    pub fn is_linear(&self) -> bool {
        matches!(self, Budget::Linear { .. })
    }

    /// Membership of an arbitrary alternative, inside the universe or not.
    pub fn contains(&self, universe: &Universe<T>, x: &Alternative<T>) -> bool {
        match self {
            Budget::Explicit(members) => universe
                .index_of(x)
                .is_some_and(|i| members.binary_search(&i).is_ok()),
            Budget::Linear { prices, income } => x
                .as_vector()
                .is_some_and(|v| v.len() == prices.len() && dot(prices, v) <= *income),
        }
    }

    /// Universe indices inside the budget, ascending.
    pub fn members(&self, universe: &Universe<T>) -> Vec<usize> {
        match self {
            Budget::Explicit(m) => m.clone(),
            Budget::Linear { .. } => (0..universe.len())
                .filter(|&i| self.contains(universe, universe.get(i)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Observation<T> {
    pub budget: Budget<T>,
    /// Chosen universe indices, sorted and without repetitions.
    pub chosen: Vec<usize>,
}

impl<T: Scalar> Observation<T> {
    pub fn new(budget: Budget<T>, chosen: impl IntoIterator<Item = usize>) -> Self {
        let mut chosen: Vec<usize> = chosen.into_iter().collect();
        chosen.sort_unstable();
        chosen.dedup();
        Observation { budget, chosen }
    }

    pub fn is_chosen(&self, i: usize) -> bool {
        self.chosen.binary_search(&i).is_ok()
    }
}

/// A finite collection of budgets together with the chosen alternatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataSet<T: Scalar> {
    universe: Universe<T>,
    observations: Vec<Observation<T>>,
}

impl<T: Scalar> DataSet<T> {
    pub fn new(universe: Universe<T>, observations: Vec<Observation<T>>) -> Result<Self> {
        let n = universe.len();
        for (k, obs) in observations.iter().enumerate() {
            let here = |m: String| Error::InvalidData(format!("observation {}: {m}", k + 1));
            match &obs.budget {
                Budget::Explicit(members) => {
                    if members.is_empty() {
                        return Err(here("empty budget".into()));
                    }
                    if members.iter().any(|&i| i >= n) {
                        return Err(here("budget refers to an unknown alternative".into()));
                    }
                }
                Budget::Linear { prices, income } => {
                    if universe.dimension() != Some(prices.len()) {
                        return Err(here("price vector does not match the dimension of the alternatives".into()));
                    }
                    if prices.iter().any(|p| p.is_negative()) || prices.iter().all(|p| p.is_zero()) {
                        return Err(here("prices must be nonnegative and not all zero".into()));
                    }
                    if !income.is_positive() {
                        return Err(here("expenditure must be positive".into()));
                    }
                }
            }
            if obs.chosen.is_empty() {
                return Err(here("nothing is chosen".into()));
            }
            for &c in &obs.chosen {
                if c >= n {
                    return Err(here("chosen alternative is not in the universe".into()));
                }
                if !obs.budget.contains(&universe, universe.get(c)) {
                    return Err(here(format!("chosen alternative {} is outside the budget", universe.get(c))));
                }
            }
        }
        Ok(DataSet { universe, observations })
    }

    pub fn universe(&self) -> &Universe<T> {
        &self.universe
    }

    pub fn observations(&self) -> &[Observation<T>] {
        &self.observations
    }

    pub fn len(&self) -> usize {
        self.observations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.observations.is_empty()
    }

    pub fn observation(&self, i: usize) -> &Observation<T> {
        &self.observations[i]
    }

    pub fn in_budget(&self, i: usize, x: &Alternative<T>) -> bool {
        self.observations[i].budget.contains(&self.universe, x)
    }

    pub fn is_chosen(&self, i: usize, x: &Alternative<T>) -> bool {
        self.universe.index_of(x).is_some_and(|k| self.observations[i].is_chosen(k))
    }

    /// `x ∈ B_i ∖ C(B_i)`.
    pub fn in_unchosen(&self, i: usize, x: &Alternative<T>) -> bool {
        self.in_budget(i, x) && !self.is_chosen(i, x)
    }

    pub fn members(&self, i: usize) -> Vec<usize> {
        self.observations[i].budget.members(&self.universe)
    }

    pub fn all_explicit(&self) -> bool {
        self.observations.iter().all(|o| !o.budget.is_linear())
    }

    /// Prices and income of a linear budget.
    pub fn linear(&self, i: usize) -> Result<(&[T], &T)> {
        match &self.observations[i].budget {
            Budget::Linear { prices, income } => Ok((prices, income)),
            Budget::Explicit(_) => Err(Error::NonLinearBudget(i + 1)),
        }
    }

    /// Chosen alternatives of observation `i`.
    pub fn chosen(&self, i: usize) -> impl Iterator<Item = &Alternative<T>> + '_ {
        self.observations[i].chosen.iter().map(|&c| self.universe.get(c))
    }

    /// Observations `0..k` only.
    pub fn prefix(&self, k: usize) -> DataSet<T> {
        DataSet { universe: self.universe.clone(), observations: self.observations[..k].to_vec() }
    }

    /// Decode `{"universe": [...], "observations": [{"budget": ..., "chosen": [...]}]}`.
    ///
    /// The universe may be omitted; vectors mentioned by budgets or choices
    /// are added to it in order of appearance. Labels must be declared.
    pub fn from_json(v: &Value) -> Result<Self> {
        let mut universe = match v.get("universe") {
            Some(u) => {
                let alts = array(u, "universe")?
                    .iter()
                    .enumerate()
                    .map(|(i, a)| alternative_from_json(a, &format!("universe[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                Universe::new(alts).map_err(|e| Error::json("universe", e.to_string()))?
            }
            None => Universe::new(Vec::new())?,
        };
        let resolve = |a: &Value, path: &str, universe: &mut Universe<T>| -> Result<usize> {
            let alt: Alternative<T> = alternative_from_json(a, path)?;
            match (&alt, universe.index_of(&alt)) {
                (_, Some(i)) => Ok(i),
                (Alternative::Label(l), None) => Err(Error::json(path, format!("unknown alternative \"{l}\""))),
                (Alternative::Vector(_), None) => universe.insert(alt).map_err(|e| Error::json(path, e.to_string())),
            }
        };
        let mut observations = Vec::new();
        for (k, o) in array(field(v, "observations", "")?, "observations")?.iter().enumerate() {
            let path = format!("observations[{k}]");
            let b = field(o, "budget", &path)?;
            let bpath = format!("{path}.budget");
            let budget = if let Some(e) = b.get("explicit") {
                let mut members = Vec::new();
                for (j, a) in array(e, &format!("{bpath}.explicit"))?.iter().enumerate() {
                    members.push(resolve(a, &format!("{bpath}.explicit[{j}]"), &mut universe)?);
                }
                Budget::explicit(members)
            } else if let Some(l) = b.get("linear") {
                let lpath = format!("{bpath}.linear");
                let prices = vector_from_json(field(l, "p", &lpath)?, &format!("{lpath}.p"))?;
                let income = scalar_from_json(field(l, "m", &lpath)?, &format!("{lpath}.m"))?;
                Budget::linear(prices, income)
            } else {
                return Err(Error::json(bpath, "expected \"explicit\" or \"linear\""));
            };
            let mut chosen = Vec::new();
            for (j, a) in array(field(o, "chosen", &path)?, &format!("{path}.chosen"))?.iter().enumerate() {
                chosen.push(resolve(a, &format!("{path}.chosen[{j}]"), &mut universe)?);
            }
            observations.push(Observation::new(budget, chosen));
        }
        DataSet::new(universe, observations).map_err(|e| match e {
            Error::InvalidData(m) => Error::json("observations", m),
            other => other,
        })
    }

    pub fn to_json(&self) -> Value {
        let alt = |i: &usize| alternative_to_json(self.universe.get(*i));
        let observations = self
            .observations
            .iter()
            .map(|o| {
                let budget = match &o.budget {
                    Budget::Explicit(m) => json!({ "explicit": m.iter().map(alt).collect::<Vec<_>>() }),
                    Budget::Linear { prices, income } => {
                        json!({ "linear": { "p": vector_to_json(prices), "m": scalar_to_json(income) } })
                    }
                };
                let mut obj = Map::new();
                obj.insert("budget".into(), budget);
                obj.insert("chosen".into(), Value::Array(o.chosen.iter().map(alt).collect()));
                Value::Object(obj)
            })
            .collect();
        json!({
            "universe": self.universe.alternatives().iter().map(alternative_to_json).collect::<Vec<_>>(),
            "observations": Value::Array(observations),
        })
    }
}

/// `R_E`: `(x,y)` whenever `x` is chosen from a budget containing `y`, plus
/// the diagonal.
pub fn revealed_relation<T: Scalar>(d: &DataSet<T>) -> Relation {
    let mut r = Relation::diagonal(d.universe.len());
    for (i, obs) in d.observations.iter().enumerate() {
        let members = d.members(i);
        for &x in &obs.chosen {
            for &y in &members {
                r.insert(x, y);
            }
        }
    }
    r
}

/// Which regularity clause failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityClause {
    /// `f(x) ∈ B` but some `f̄ ≤ f` has `f̄(x) ∉ B`.
    DownwardClosure,
    /// `f(x) ∈ C(B)` but some `f̄ > f` still has `f̄(x) ∈ B`.
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityWitness {
    /// 1-based observation number.
    pub observation: usize,
    pub clause: RegularityClause,
    pub alternative: String,
    /// The element `f` and the offending comparison element `f̄`.
    pub elements: (String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub witness: Option<RegularityWitness>,
}

impl Regularity {
    /// The readings of the two clauses that are checked.
    pub const READING: &'static str = "(a) f(x) in B implies g(x) in B for every g <= f; \
         (b) f(x) in C(B) implies g(x) not in B for every g > f";

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for RegularityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (e, g) = &self.elements;
        match self.clause {
            RegularityClause::DownwardClosure => write!(
                f,
                "observation {}: {e} keeps {} in the budget but the smaller {g} does not",
                self.observation, self.alternative
            ),
            RegularityClause::Boundary => write!(
                f,
                "observation {}: {e} maps {} onto a chosen point but the larger {g} stays affordable",
                self.observation, self.alternative
            ),
        }
    }
}

/// Regularity of `d` under an ordered theory. Finite element lists are
/// checked exhaustively over the universe; one-parameter theories without a
/// list are decided symbolically on linear budgets.
pub fn is_regular<T: Scalar, G: Theory<T>>(d: &DataSet<T>, theory: &G) -> Result<Regularity> {
    if !theory.is_ordered() {
        return Err(Error::OrderMissing(theory.name().to_string()));
    }
    if let Some(elements) = theory.elements() {
        return Ok(Regularity { witness: regular_on_list(d, theory, elements)? });
    }
    let family = theory.one_parameter().ok_or_else(|| Error::NotEnumerable(theory.name().to_string()))?;
    for i in 0..d.len() {
        let (prices, income) = d.linear(i).map_err(|_| Error::NotEnumerable(theory.name().to_string()))?;
        for c in d.chosen(i) {
            let v = c.as_vector().ok_or_else(|| Error::DomainMismatch(c.to_string(), theory.name().into()))?;
            let id = family.identity_param();
            let bad = match family.reach(v, prices, income) {
                Reach::UpTo(p) if p == id => None,
                Reach::UpTo(p) => Some(family.from_param(p)),
                Reach::Everything => Some(family.from_param(family.above(&id, 1))),
                Reach::Nothing => unreachable!("chosen points lie in their budget"),
            };
            if let Some(g) = bad {
                return Ok(Regularity {
                    witness: Some(RegularityWitness {
                        observation: i + 1,
                        clause: RegularityClause::Boundary,
                        alternative: c.to_string(),
                        elements: (theory.describe(&theory.identity()), theory.describe(&g)),
                    }),
                });
            }
        }
    }
    Ok(Regularity { witness: None })
}

fn regular_on_list<T: Scalar, G: Theory<T>>(
    d: &DataSet<T>,
    theory: &G,
    elements: &[G::Element],
) -> Result<Option<RegularityWitness>> {
    for i in 0..d.len() {
        for x in d.universe.alternatives() {
            let images = elements.iter().map(|e| theory.apply(e, x)).collect::<Result<Vec<_>>>()?;
            for (a, fa) in elements.iter().zip(&images) {
                let a_in = d.in_budget(i, fa);
                let a_chosen = d.is_chosen(i, fa);
                for (b, fb) in elements.iter().zip(&images) {
                    let order = theory.compare(b, a);
                    let witness = |clause| RegularityWitness {
                        observation: i + 1,
                        clause,
                        alternative: x.to_string(),
                        elements: (theory.describe(a), theory.describe(b)),
                    };
                    if a_in && order != Some(Ordering::Greater) && !d.in_budget(i, fb) {
                        return Ok(Some(witness(RegularityClause::DownwardClosure)));
                    }
                    if a_chosen && order == Some(Ordering::Greater) && d.in_budget(i, fb) {
                        return Ok(Some(witness(RegularityClause::Boundary)));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::{ScalingTheory, TranslationTheory, TrivialTheory};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(s: &str) -> Q {
        Q::parse_exact(s).unwrap()
    }

    fn v(xs: &[&str]) -> Vec<Q> {
        xs.iter().map(|s| q(s)).collect()
    }

    fn labels(n: usize) -> Universe<Q> {
        Universe::labels(["a", "b", "c", "d"].into_iter().take(n)).unwrap()
    }

    #[test]
    fn single_budget_relation() {
        let d = DataSet::new(labels(2), vec![Observation::new(Budget::explicit([0, 1]), [0])]).unwrap();
        assert_eq!(revealed_relation(&d), Relation::from_pairs(2, [(0, 0), (1, 1), (0, 1)]));
        let empty = DataSet::new(labels(3), vec![]).unwrap();
        assert_eq!(revealed_relation(&empty), Relation::diagonal(3));
    }

    #[test]
    fn overlapping_budgets_union_stars() {
        let d = DataSet::new(
            labels(3),
            vec![
                Observation::new(Budget::explicit([0, 1]), [0]),
                Observation::new(Budget::explicit([1, 2]), [1, 2]),
            ],
        )
        .unwrap();
        let expect = Relation::from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 1)]);
        assert_eq!(revealed_relation(&d), expect);
    }

    #[test]
    fn invalid_observations_are_rejected() {
        let outside = DataSet::new(labels(3), vec![Observation::new(Budget::explicit([0, 1]), [2])]);
        assert!(matches!(outside, Err(Error::InvalidData(_))));
        let none = DataSet::new(labels(3), vec![Observation::new(Budget::explicit([0]), [])]);
        assert!(none.is_err());
    }

    fn linear_one(x: &[&str], m: &str) -> DataSet<Q> {
        let u = Universe::vectors([v(x)]).unwrap();
        DataSet::new(u, vec![Observation::new(Budget::linear(v(&["1", "1"]), q(m)), [0])]).unwrap()
    }

    #[test]
    fn boundary_choice_is_regular() {
        let d = linear_one(&["4", "0"], "4");
        assert!(is_regular(&d, &ScalingTheory::new()).unwrap().holds());
        assert!(is_regular(&d, &TranslationTheory::new()).unwrap().holds());
    }

    #[test]
    fn interior_choice_breaks_boundary_clause() {
        let d = linear_one(&["1", "1"], "4");
        let w = is_regular(&d, &ScalingTheory::new()).unwrap().witness.unwrap();
        assert_eq!(w.clause, RegularityClause::Boundary);
        assert_eq!(w.observation, 1);
    }

    #[test]
    fn grid_check_matches_symbolic() {
        let inside = linear_one(&["1", "1"], "4");
        let grid = ScalingTheory::with_grid(v(&["1/2", "1", "2"])).unwrap();
        let w = is_regular(&inside, &grid).unwrap().witness.unwrap();
        assert_eq!(w.clause, RegularityClause::Boundary);
        assert!(is_regular(&linear_one(&["4", "0"], "4"), &grid).unwrap().holds());
    }

    #[test]
    fn identity_theory_is_vacuously_regular() {
        let d = DataSet::new(labels(3), vec![Observation::new(Budget::explicit([0, 1, 2]), [1])]).unwrap();
        assert!(is_regular(&d, &TrivialTheory::new()).unwrap().holds());
    }

    #[test]
    fn json_round_trip_and_paths() {
        let text = r#"{"universe": [["10","0"], ["0","5"]],
            "observations": [
              {"budget": {"linear": {"p": ["1","1"], "m": "10"}}, "chosen": [["10","0"]]},
              {"budget": {"linear": {"p": ["1","2"], "m": "10"}}, "chosen": [["0","5"]]}]}"#;
        let d: DataSet<Q> = DataSet::from_json(&serde_json::from_str(text).unwrap()).unwrap();
        assert_eq!(DataSet::from_json(&d.to_json()).unwrap(), d);
        let bad = text.replacen("\"2\"]", "\"1/0\"]", 1);
        let err = DataSet::<Q>::from_json(&serde_json::from_str(&bad).unwrap()).unwrap_err();
        assert!(err.to_string().starts_with("observations[1].budget.linear.p[1]"), "{err}");
    }

    #[test]
    fn universe_is_optional_for_vectors() {
        let text = r#"{"observations": [{"budget": {"linear": {"p": ["1","1"], "m": "2"}}, "chosen": [["1","1"]]}]}"#;
        let d: DataSet<Q> = DataSet::from_json(&serde_json::from_str(text).unwrap()).unwrap();
        assert_eq!(d.universe().len(), 1);
    }
}
