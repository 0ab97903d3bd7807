//! Behavioral models: sequential choice through a consideration set
//! (S-SAARP) and "good enough" choice among the top alternatives
//! (GE-SAARP). Both are decided by exhaustive search over the hidden sets,
//! pruned on prefixes of the observation list.

use crate::axioms::{check_saarp_generic, check_waarp, SearchLimits};
use crate::data::{is_regular, Budget, DataSet, Observation};
use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::scalar::Scalar;
use crate::theory::Theory;
use crate::verdict::{Certificate, Verdict};

/// Default bound on the number of candidate assignments a search may face.
pub const DEFAULT_CAP: u128 = 1_000_000;

/// Union of the top `k` indifference layers of `budget` under `r`.
pub fn k_max_set(r: &Relation, budget: &[usize], k: usize) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    for &x in budget {
        for &y in budget {
            if !(r.contains(x, y) || r.contains(y, x)) {
                return Err(Error::NotTotalPreorder);
            }
            for &z in budget {
                if r.contains(x, y) && r.contains(y, z) && !r.contains(x, z) {
                    return Err(Error::NotTotalPreorder);
                }
            }
        }
    }
    let mut rest: Vec<usize> = budget.to_vec();
    let mut out = Vec::new();
    for _ in 0..k {
        if rest.is_empty() {
            break;
        }
        let (top, below): (Vec<usize>, Vec<usize>) =
            rest.iter().partition(|&&x| rest.iter().all(|&y| r.contains(x, y)));
        out.extend(top);
        rest = below;
    }
    out.sort_unstable();
    Ok(out)
}

/// Consideration sets `C(B) ⊆ Γ(B) ⊆ B`, one per observation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsiderationMap {
    sets: Vec<Vec<usize>>,
}

impl ConsiderationMap {
    pub fn new<T: Scalar>(d: &DataSet<T>, sets: Vec<Vec<usize>>) -> Result<Self> {
        if sets.len() != d.len() {
            return Err(Error::InvalidData("one consideration set per observation is required".into()));
        }
        for (i, set) in sets.iter().enumerate() {
            let budget = explicit_members(d, i)?;
            let obs = d.observation(i);
            if !obs.chosen.iter().all(|c| set.contains(c)) || !set.iter().all(|x| budget.contains(x)) {
                return Err(Error::InvalidData(format!(
                    "consideration set of observation {} must contain the choice and lie in the budget",
                    i + 1
                )));
            }
        }
        Ok(ConsiderationMap { sets })
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }
}

fn explicit_members<T: Scalar>(d: &DataSet<T>, i: usize) -> Result<&[usize]> {
    match &d.observation(i).budget {
        Budget::Explicit(m) => Ok(m),
        Budget::Linear { .. } => Err(Error::InvalidData(format!(
            "observation {} has a linear budget; behavioral checks need explicit budgets",
            i + 1
        ))),
    }
}

/// `(B, Γ(B))` for the observations covered by `gamma`.
fn attention_data<T: Scalar>(d: &DataSet<T>, gamma: &[Vec<usize>]) -> Result<DataSet<T>> {
    let observations = gamma
        .iter()
        .enumerate()
        .map(|(i, g)| Observation::new(d.observation(i).budget.clone(), g.iter().copied()))
        .collect();
    DataSet::new(d.universe().clone(), observations)
}

/// `(Γ(B), C(B))` for the observations covered by `gamma`.
fn second_stage_data<T: Scalar>(d: &DataSet<T>, gamma: &[Vec<usize>]) -> Result<DataSet<T>> {
    let observations = gamma
        .iter()
        .enumerate()
        .map(|(i, g)| Observation::new(Budget::explicit(g.iter().copied()), d.observation(i).chosen.iter().copied()))
        .collect();
    DataSet::new(d.universe().clone(), observations)
}

fn subsets_by_size(items: &[usize], ascending: bool) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut all: Vec<Vec<usize>> = (0u64..1 << n)
        .map(|mask| (0..n).filter(|b| mask >> b & 1 == 1).map(|b| items[b]).collect())
        .collect();
    all.sort_by(|a, b| {
        let by_size = if ascending { a.len().cmp(&b.len()) } else { b.len().cmp(&a.len()) };
        by_size.then_with(|| a.cmp(b))
    });
    all
}

fn search_size(counts: impl Iterator<Item = usize>) -> u128 {
    counts.fold(1u128, |acc, c| acc.saturating_mul(c as u128))
}

/// Depth-first search over one candidate per observation; `accept` judges a
/// prefix, and failures prune every extension of it.
fn depth_first(
    candidates: &[Vec<Vec<usize>>],
    accept: &mut dyn FnMut(&[Vec<usize>]) -> Result<bool>,
) -> Result<Option<Vec<Vec<usize>>>> {
    fn go(
        candidates: &[Vec<Vec<usize>>],
        chosen: &mut Vec<Vec<usize>>,
        accept: &mut dyn FnMut(&[Vec<usize>]) -> Result<bool>,
    ) -> Result<bool> {
        if chosen.len() == candidates.len() {
            return Ok(true);
        }
        for c in &candidates[chosen.len()] {
            chosen.push(c.clone());
            if accept(chosen)? && go(candidates, chosen, accept)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
    let mut chosen = Vec::new();
    Ok(go(candidates, &mut chosen, accept)?.then_some(chosen))
}

fn sets_to_certificate<T: Scalar>(d: &DataSet<T>, sets: &[Vec<usize>]) -> Vec<Vec<crate::Alternative<T>>> {
    sets.iter().map(|s| s.iter().map(|&i| d.universe().get(i).clone()).collect()).collect()
}

/// S-SAARP: some consideration map makes `(B, Γ)` satisfy WAARP under `g1`
/// and `(Γ, C)` regular and SAARP under the ordered `g2`. On a pass the first
/// such map (observations in order, smaller sets first) is attached.
pub fn check_s_saarp<T: Scalar, G1: Theory<T>, G2: Theory<T>>(
    d: &DataSet<T>,
    g1: &G1,
    g2: &G2,
    cap: u128,
) -> Result<Verdict<T, G2::Element>> {
    if let Some(w) = is_regular(d, g2)?.witness {
        return Err(Error::NotRegular(w.to_string()));
    }
    let mut candidates = Vec::with_capacity(d.len());
    for i in 0..d.len() {
        let budget = explicit_members(d, i)?;
        let chosen = &d.observation(i).chosen;
        let free: Vec<usize> = budget.iter().copied().filter(|x| !chosen.contains(x)).collect();
        candidates.push(
            subsets_by_size(&free, true)
                .into_iter()
                .map(|extra| {
                    let mut g: Vec<usize> = chosen.iter().copied().chain(extra).collect();
                    g.sort_unstable();
                    g
                })
                .collect::<Vec<_>>(),
        );
    }
    let size = search_size(candidates.iter().map(Vec::len));
    let limits = SearchLimits::default();
    let mut accept = |gamma: &[Vec<usize>]| -> Result<bool> {
        let second = second_stage_data(d, gamma)?;
        Ok(check_waarp(&attention_data(d, gamma)?, g1)?.passed()
            && is_regular(&second, g2)?.holds()
            && check_saarp_generic(&second, g2, &limits)?.passed())
    };
    let full: Vec<Vec<usize>> = (0..d.len()).map(|i| explicit_members(d, i).map(<[usize]>::to_vec)).collect::<Result<_>>()?;
    let found = if accept(&full)? {
        Some(full)
    } else {
        if size > cap {
            return Err(Error::SearchCapExceeded { size, cap });
        }
        depth_first(&candidates, &mut accept)?
    };
    Ok(match found {
        Some(gamma) => Verdict::pass("s-saarp").with_certificate(Certificate::Consideration(sets_to_certificate(d, &gamma))),
        None => Verdict::violation("s-saarp", None),
    })
}

/// Where a derived observation of a truncated data set comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedFrom {
    /// `B↓ ∪ C(B)` with the original choice.
    Chosen(usize),
    /// `B↓ ∪ {y}` with `y` chosen.
    Promoted(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDataSet<T: Scalar> {
    pub k: usize,
    pub retained: Vec<Vec<usize>>,
    pub data: DataSet<T>,
    pub origin: Vec<DerivedFrom>,
}

/// The truncated data set generated by the retained sets `B↓`.
pub fn build_truncated_dataset<T: Scalar>(
    d: &DataSet<T>,
    retained: &[Vec<usize>],
    k: usize,
) -> Result<TruncatedDataSet<T>> {
    if retained.len() != d.len() {
        return Err(Error::InvalidData("one retained set per observation is required".into()));
    }
    let mut observations = Vec::new();
    let mut origin = Vec::new();
    for (i, down) in retained.iter().enumerate() {
        let budget = explicit_members(d, i)?;
        let obs = d.observation(i);
        if down.iter().any(|x| !budget.contains(x) || obs.is_chosen(*x)) {
            return Err(Error::InvalidData(format!(
                "retained set of observation {} must avoid the choice and lie in the budget",
                i + 1
            )));
        }
        let mut down = down.clone();
        down.sort_unstable();
        down.dedup();
        if budget.len() - down.len() > k {
            return Err(Error::CardinalityBound(i + 1));
        }
        observations.push(Observation::new(
            Budget::explicit(down.iter().chain(&obs.chosen).copied()),
            obs.chosen.iter().copied(),
        ));
        origin.push(DerivedFrom::Chosen(i));
        for &y in budget.iter().filter(|y| !down.contains(y) && !obs.is_chosen(**y)) {
            observations.push(Observation::new(Budget::explicit(down.iter().copied().chain([y])), [y]));
            origin.push(DerivedFrom::Promoted(i, y));
        }
    }
    Ok(TruncatedDataSet {
        k,
        retained: retained.to_vec(),
        data: DataSet::new(d.universe().clone(), observations)?,
        origin,
    })
}

/// GE-SAARP: some truncation with at most `k` alternatives above `B↓` in
/// every budget yields a regular data set satisfying SAARP under `g`.
/// Retained sets are tried largest first.
pub fn check_ge_saarp<T: Scalar, G: Theory<T>>(
    d: &DataSet<T>,
    g: &G,
    k: usize,
    cap: u128,
) -> Result<Verdict<T, G::Element>> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    if !g.is_ordered() {
        return Err(Error::OrderMissing(g.name().to_string()));
    }
    let mut candidates = Vec::with_capacity(d.len());
    for i in 0..d.len() {
        let budget = explicit_members(d, i)?;
        let obs = d.observation(i);
        let free: Vec<usize> = budget.iter().copied().filter(|x| !obs.is_chosen(*x)).collect();
        let keep_at_least = budget.len().saturating_sub(k);
        candidates.push(
            subsets_by_size(&free, false)
                .into_iter()
                .filter(|s| s.len() >= keep_at_least)
                .collect::<Vec<_>>(),
        );
    }
    let size = search_size(candidates.iter().map(Vec::len));
    if size > cap {
        return Err(Error::SearchCapExceeded { size, cap });
    }
    let limits = SearchLimits::default();
    let prefix = |n: usize| d.prefix(n);
    let found = depth_first(&candidates, &mut |down: &[Vec<usize>]| {
        let t = build_truncated_dataset(&prefix(down.len()), down, k)?;
        Ok(is_regular(&t.data, g)?.holds() && check_saarp_generic(&t.data, g, &limits)?.passed())
    })?;
    let verdict = match found {
        Some(down) => Verdict::pass("ge-saarp").with_certificate(Certificate::Truncation(sets_to_certificate(d, &down))),
        None => Verdict::violation("ge-saarp", None),
    };
    Ok(if k == 1 {
        verdict.with_note("k = 1 reduces good-enough choice to plain maximisation")
    } else {
        verdict
    })
}
