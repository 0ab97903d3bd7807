//! Brute-force ground truth on tiny instances.
//!
//! Everything here is deliberately naive: relations are enumerated one by
//! one, cycles are listed explicitly, and witnesses are replayed by applying
//! inverse elements one at a time. Nothing in this module calls into the
//! closure operators or the axiom checkers; the only shared pieces are the
//! [`Relation`] type and budget membership.

use std::cmp::Ordering;

use crate::data::DataSet;
use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::scalar::Scalar;
use crate::theory::Theory;
use crate::universe::Alternative;
use crate::verdict::Witness;

/// Largest universe enumerated unless a caller opts in to more.
pub const DEFAULT_ORACLE_CAP: usize = 4;
/// Hard ceiling: 2^20 relations on five alternatives.
pub const MAX_ORACLE_CAP: usize = 5;
/// Largest graph handed to [`enumerate_simple_cycles`].
pub const CYCLE_NODE_CAP: usize = 8;

/// Warning to surface when a caller raises the cap above the default.
pub fn cap_warning(cap: usize) -> Option<String> {
    (cap > DEFAULT_ORACLE_CAP).then(|| {
        format!("oracle cap {cap} enumerates up to {} relations; expect a long run", 1u64 << (cap * (cap - 1)))
    })
}

/// One of the four rationalizability notions (plus the ordered variant of
/// consistency), asked of a data set under a finite theory.
#[derive(Debug)]
pub struct RationalizabilityQuery<'a, T: Scalar, G> {
    pub data: &'a DataSet<T>,
    pub theory: &'a G,
    pub require_transitive: bool,
    pub require_complete: bool,
    /// Use `(x,y) ∈ R ⇒ (f'(x), f(y)) ∈ R` for every `f' ≥ f` instead of
    /// the plain group consistency.
    pub ordered: bool,
    pub maximality: Maximality,
    pub cap: usize,
}

impl<T: Scalar, G> Clone for RationalizabilityQuery<'_, T, G> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T: Scalar, G> Copy for RationalizabilityQuery<'_, T, G> {}

impl<'a, T: Scalar, G: Theory<T>> RationalizabilityQuery<'a, T, G> {
    pub fn new(data: &'a DataSet<T>, theory: &'a G) -> Self {
        RationalizabilityQuery {
            data,
            theory,
            require_transitive: false,
            require_complete: false,
            ordered: false,
            maximality: Maximality::Revealed,
            cap: DEFAULT_ORACLE_CAP,
        }
    }

    pub fn transitive(mut self, on: bool) -> Self {
        self.require_transitive = on;
        self
    }

    pub fn complete(mut self, on: bool) -> Self {
        self.require_complete = on;
        self
    }

    pub fn ordered(mut self, on: bool) -> Self {
        self.ordered = on;
        self
    }

    pub fn maximality(mut self, m: Maximality) -> Self {
        self.maximality = m;
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

/// Images of every universe point under every element, plus `f ≥ g` when
/// the theory is ordered. `None` marks an image outside the universe.
struct Action {
    images: Vec<Vec<Option<usize>>>,
    ge: Option<Vec<Vec<bool>>>,
}

impl Action {
    fn new<T: Scalar, G: Theory<T>>(d: &DataSet<T>, theory: &G, strict: bool) -> Result<Action> {
        let elements = theory.elements().ok_or_else(|| Error::NotEnumerable(theory.name().to_string()))?;
        let u = d.universe();
        let mut images = Vec::with_capacity(elements.len());
        for e in elements {
            let mut row = Vec::with_capacity(u.len());
            for x in u.alternatives() {
                let image = theory.apply(e, x)?;
                let idx = u.index_of(&image);
                if idx.is_none() && strict {
                    return Err(Error::OrbitEscape { element: theory.describe(e), alternative: x.to_string() });
                }
                row.push(idx);
            }
            images.push(row);
        }
        let ge = theory.is_ordered().then(|| {
            elements
                .iter()
                .map(|a| elements.iter().map(|b| theory.compare(a, b) != Some(Ordering::Less)).collect())
                .collect()
        });
        Ok(Action { images, ge })
    }

    /// `(x,y) ∈ R ⇒ (f(x), f(y)) ∈ R`, or the ordered form, for every pair.
    fn consistent(&self, r: &Relation, ordered: bool) -> bool {
        let n = r.size();
        let m = self.images.len();
        for x in 0..n {
            for y in 0..n {
                if !r.contains(x, y) {
                    continue;
                }
                for f in 0..m {
                    let Some(fy) = self.images[f][y] else { continue };
                    for g in 0..m {
                        let admissible = if ordered {
                            self.ge.as_ref().is_some_and(|ge| ge[g][f])
                        } else {
                            g == f
                        };
                        if !admissible {
                            continue;
                        }
                        if let Some(gx) = self.images[g][x] {
                            if !r.contains(gx, fy) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

fn is_complete(r: &Relation) -> bool {
    let n = r.size();
    (0..n).all(|x| (0..n).all(|y| r.contains(x, y) || r.contains(y, x)))
}

fn is_transitive(r: &Relation) -> bool {
    let n = r.size();
    for x in 0..n {
        for y in 0..n {
            if !r.contains(x, y) {
                continue;
            }
            for z in 0..n {
                if r.contains(y, z) && !r.contains(x, z) {
                    return false;
                }
            }
        }
    }
    true
}

/// `max(B, R)`: points related to everything in the budget and strictly
/// beaten by nothing in it.
fn maximal_points(r: &Relation, budget: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = budget
        .iter()
        .copied()
        .filter(|&x| {
            budget.iter().all(|&y| r.contains(x, y))
                && !budget.iter().any(|&y| r.contains(y, x) && !r.contains(x, y))
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// True iff `chosen` is exactly the set of maximal points of `budget`.
pub fn check_maximality(r: &Relation, budget: &[usize], chosen: &[usize]) -> bool {
    let mut c = chosen.to_vec();
    c.sort_unstable();
    c.dedup();
    maximal_points(r, budget) == c
}

/// What it means for a relation to generate an observed choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Maximality {
    /// `C(B) = max(B, R)` and every rejected point of `B` is strictly worse
    /// than every chosen one, i.e. `R` extends the revealed relation of the
    /// observation.
    #[default]
    Revealed,
    /// `C(B) = max(B, R)` only. Without transitivity a point may then be
    /// rejected merely for failing to dominate some third point.
    Literal,
}

impl Maximality {
    pub fn generates(self, r: &Relation, budget: &[usize], chosen: &[usize]) -> bool {
        check_maximality(r, budget, chosen)
            && match self {
                Maximality::Literal => true,
                Maximality::Revealed => budget
                    .iter()
                    .filter(|y| !chosen.contains(y))
                    .all(|&y| chosen.iter().all(|&x| !r.contains(y, x))),
            }
    }
}

/// Every reflexive relation on `n` points, ordered by the bitmask over the
/// off-diagonal pairs taken in lexicographic order.
fn reflexive_relations(n: usize) -> impl Iterator<Item = Relation> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut r = Relation::diagonal(n);
        for (b, &(x, y)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                r.insert(x, y);
            }
        }
        r
    })
}

fn within_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_ORACLE_CAP);
    if n > cap {
        return Err(Error::OracleCapExceeded { size: n, cap });
    }
    Ok(())
}

fn budgets<T: Scalar>(d: &DataSet<T>) -> Vec<(Vec<usize>, Vec<usize>)> {
    (0..d.len()).map(|i| (d.members(i), d.observation(i).chosen.clone())).collect()
}

/// The first relation (in enumeration order) with the requested properties
/// whose maximal points reproduce every observed choice, or `None`.
pub fn brute_force_rationalizable<T: Scalar, G: Theory<T>>(q: &RationalizabilityQuery<'_, T, G>) -> Result<Option<Relation>> {
    let n = q.data.universe().len();
    within_cap(n, q.cap)?;
    if q.ordered && !q.theory.is_ordered() {
        return Err(Error::OrderMissing(q.theory.name().to_string()));
    }
    let action = Action::new(q.data, q.theory, true)?;
    let obs = budgets(q.data);
    Ok(reflexive_relations(n).find(|r| {
        obs.iter().all(|(b, c)| q.maximality.generates(r, b, c))
            && (!q.require_complete || is_complete(r))
            && (!q.require_transitive || is_transitive(r))
            && action.consistent(r, q.ordered)
    }))
}

/// Two-stage maximisation: `Γ(B) = max(B, R₁)` with `R₁` complete and
/// consistent with `g1`, then `C(B) = max(Γ(B), R₂)` with `R₂` complete,
/// transitive and consistent with the ordered theory `g2`. Both stages are
/// read with the same `maximality`.
pub fn sequentially_rationalizable<T: Scalar, G1: Theory<T>, G2: Theory<T>>(
    d: &DataSet<T>,
    g1: &G1,
    g2: &G2,
    maximality: Maximality,
    cap: usize,
) -> Result<Option<(Relation, Relation)>> {
    let n = d.universe().len();
    within_cap(n, cap)?;
    if !g2.is_ordered() {
        return Err(Error::OrderMissing(g2.name().to_string()));
    }
    let first = Action::new(d, g1, true)?;
    let second = Action::new(d, g2, true)?;
    let obs = budgets(d);
    let seconds: Vec<Relation> = reflexive_relations(n)
        .filter(|r| is_complete(r) && is_transitive(r) && second.consistent(r, true))
        .collect();
    for r1 in reflexive_relations(n).filter(|r| is_complete(r) && first.consistent(r, false)) {
        let gammas: Vec<Vec<usize>> = obs.iter().map(|(b, _)| maximal_points(&r1, b)).collect();
        if !obs.iter().zip(&gammas).all(|((b, _), g)| maximality.generates(&r1, b, g)) {
            continue;
        }
        if let Some(r2) = seconds
            .iter()
            .find(|r2| obs.iter().zip(&gammas).all(|((_, c), g)| maximality.generates(r2, g, c)))
        {
            return Ok(Some((r1, r2.clone())));
        }
    }
    Ok(None)
}

/// Good-enough choice: a complete, transitive relation consistent with the
/// ordered theory `g` under which, in every budget, the chosen points are
/// mutually indifferent and at most `k` alternatives are at least as good
/// as them.
pub fn good_enough_rationalizable<T: Scalar, G: Theory<T>>(
    d: &DataSet<T>,
    g: &G,
    k: usize,
    cap: usize,
) -> Result<Option<Relation>> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    let n = d.universe().len();
    within_cap(n, cap)?;
    if !g.is_ordered() {
        return Err(Error::OrderMissing(g.name().to_string()));
    }
    let action = Action::new(d, g, true)?;
    let obs = budgets(d);
    let fits = |r: &Relation, b: &[usize], c: &[usize]| {
        let Some(&c0) = c.first() else { return false };
        c.iter().all(|x| b.contains(x))
            && c.iter().all(|&x| c.iter().all(|&y| r.contains(x, y)))
            && b.iter().filter(|&&y| r.contains(y, c0)).count() <= k
    };
    Ok(reflexive_relations(n).find(|r| {
        is_complete(r) && is_transitive(r) && obs.iter().all(|(b, c)| fits(r, b, c)) && action.consistent(r, true)
    }))
}

/// Entry of an edge-weight matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeWeight<T> {
    Absent,
    Finite(T),
    /// Every parameter works along this edge.
    Unbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleMode {
    Product,
    Sum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Aggregate<T> {
    Finite(T),
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCycle<T> {
    /// Nodes in traversal order, starting from the smallest; the closing
    /// edge runs from the last node back to the first.
    pub nodes: Vec<usize>,
    pub aggregate: Aggregate<T>,
}

impl<T> SimpleCycle<T> {
    /// The edges `(from, to)` of the cycle, closing edge last.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.nodes.len();
        (0..k).map(|i| (self.nodes[i], self.nodes[(i + 1) % k])).collect()
    }
}

/// Every simple cycle (self-loops included) of the weighted digraph, each
/// listed once, with its exact aggregate.
pub fn enumerate_simple_cycles<T: Scalar>(w: &[Vec<EdgeWeight<T>>], mode: CycleMode) -> Result<Vec<SimpleCycle<T>>> {
    let n = w.len();
    if n > CYCLE_NODE_CAP {
        return Err(Error::OracleCapExceeded { size: n, cap: CYCLE_NODE_CAP });
    }
    if w.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidData("edge-weight matrix must be square".into()));
    }
    let mut out = Vec::new();
    for start in 0..n {
        let mut path = vec![start];
        extend_path(w, start, &mut path, &mut out, mode);
    }
    Ok(out)
}

fn extend_path<T: Scalar>(
    w: &[Vec<EdgeWeight<T>>],
    start: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<SimpleCycle<T>>,
    mode: CycleMode,
) {
    let last = *path.last().expect("path starts non-empty");
    for next in start..w.len() {
        if w[last][next] == EdgeWeight::Absent {
            continue;
        }
        if next == start {
            let cycle = SimpleCycle { nodes: path.clone(), aggregate: Aggregate::Unbounded };
            let aggregate = aggregate_of(w, &cycle.edges(), mode);
            out.push(SimpleCycle { aggregate, ..cycle });
        } else if !path.contains(&next) {
            path.push(next);
            extend_path(w, start, path, out, mode);
            path.pop();
        }
    }
}

fn aggregate_of<T: Scalar>(w: &[Vec<EdgeWeight<T>>], edges: &[(usize, usize)], mode: CycleMode) -> Aggregate<T> {
    let mut acc = match mode {
        CycleMode::Product => T::one(),
        CycleMode::Sum => T::zero(),
    };
    for &(a, b) in edges {
        match &w[a][b] {
            EdgeWeight::Finite(v) => {
                acc = match mode {
                    CycleMode::Product => acc * v.clone(),
                    CycleMode::Sum => acc + v.clone(),
                }
            }
            _ => return Aggregate::Unbounded,
        }
    }
    Aggregate::Finite(acc)
}

/// Node of the HARP/QARP graphs: (observation, chosen point).
type Node = (usize, usize);

fn cycle_graph<T: Scalar>(
    d: &DataSet<T>,
    weight: impl Fn(&[T], &T, &[T]) -> EdgeWeight<T>,
) -> Result<(Vec<Node>, Vec<Vec<EdgeWeight<T>>>)> {
    let mut nodes = Vec::new();
    for i in 0..d.len() {
        for &c in &d.observation(i).chosen {
            nodes.push((i, c));
        }
    }
    let mut w = Vec::with_capacity(nodes.len());
    for &(a, _) in &nodes {
        let (p, m) = d.linear(a)?;
        let mut row = Vec::with_capacity(nodes.len());
        for &(_, xb) in &nodes {
            let x = vector_of(d, xb)?;
            row.push(weight(p, m, x));
        }
        w.push(row);
    }
    Ok((nodes, w))
}

fn vector_of<T: Scalar>(d: &DataSet<T>, i: usize) -> Result<&[T]> {
    let alt = d.universe().get(i);
    alt.as_vector()
        .ok_or_else(|| Error::DomainMismatch(alt.to_string(), "linear budgets".into()))
}

fn price_of<T: Scalar>(p: &[T], x: &[T]) -> T {
    let mut s = T::zero();
    for (a, b) in p.iter().zip(x) {
        s = s + a.clone() * b.clone();
    }
    s
}

/// Violation iff some cycle's aggregate exceeds the unit, or equals it while
/// one of its edges lands, affordably, on a point that was not chosen.
fn cycle_verdict<T: Scalar>(
    d: &DataSet<T>,
    nodes: &[Node],
    w: &[Vec<EdgeWeight<T>>],
    mode: CycleMode,
    landing: impl Fn(&[T], &T) -> Vec<T>,
) -> Result<bool> {
    let unit = match mode {
        CycleMode::Product => T::one(),
        CycleMode::Sum => T::zero(),
    };
    for cycle in enumerate_simple_cycles(w, mode)? {
        let total = match &cycle.aggregate {
            Aggregate::Unbounded => return Ok(true),
            Aggregate::Finite(v) => v.clone(),
        };
        match total.cmp(&unit) {
            Ordering::Greater => return Ok(true),
            Ordering::Less => {}
            Ordering::Equal => {
                for (a, b) in cycle.edges() {
                    let EdgeWeight::Finite(param) = &w[a][b] else { unreachable!() };
                    let y = Alternative::vector(landing(vector_of(d, nodes[b].1)?, param));
                    if d.in_budget(nodes[a].0, &y) && !d.is_chosen(nodes[a].0, &y) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// HARP by explicit cycle listing; `true` means a violation.
pub fn harp_oracle<T: Scalar>(d: &DataSet<T>) -> Result<bool> {
    for i in 0..d.len() {
        d.linear(i)?;
        for &c in &d.observation(i).chosen {
            if vector_of(d, c)?.iter().all(|v| v.is_zero()) {
                return Err(Error::ZeroChoice(i + 1));
            }
        }
    }
    let (nodes, w) = cycle_graph(d, |p, m, x| {
        let cost = price_of(p, x);
        if cost <= T::zero() {
            EdgeWeight::Unbounded
        } else {
            EdgeWeight::Finite(m.clone() / cost)
        }
    })?;
    cycle_verdict(d, &nodes, &w, CycleMode::Product, |x, a| x.iter().map(|v| v.clone() * a.clone()).collect())
}

/// QARP by explicit cycle listing (good 1 is the numeraire); `true` means a
/// violation.
pub fn qarp_oracle<T: Scalar>(d: &DataSet<T>) -> Result<bool> {
    for i in 0..d.len() {
        let (p, _) = d.linear(i)?;
        if p.first().is_none_or(|p1| *p1 <= T::zero()) {
            return Err(Error::ZeroNumerairePrice(i + 1));
        }
    }
    let (nodes, w) = cycle_graph(d, |p, m, x| EdgeWeight::Finite((m.clone() - price_of(p, x)) / p[0].clone()))?;
    cycle_verdict(d, &nodes, &w, CycleMode::Sum, |x, t| {
        let mut y = x.to_vec();
        y[0] = y[0].clone() + t.clone();
        y
    })
}

/// Why a witness failed to replay.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReplayFailure {
    #[error("witness shape is inconsistent: {0}")]
    Shape(String),
    #[error("observation index {0} is out of range")]
    NoSuchObservation(usize),
    #[error("point {0} of the witness is not chosen at its observation")]
    NotChosen(usize),
    #[error("transformed point {0} is not affordable at its observation")]
    NotAffordable(usize),
    #[error("applying the theory failed: {0}")]
    Apply(String),
    #[error("recomputed landing {recomputed} differs from the reported {reported}")]
    LandingMismatch { recomputed: String, reported: String },
    #[error("landing is not in the final budget")]
    LandingOutside,
    #[error("landing is chosen in the final budget")]
    LandingChosen,
}

/// Re-derive a violation from scratch: every `x_j` is chosen at `i_j`,
/// every `f_j(x_{j+1})` is affordable at `i_j`, and applying `f_1⁻¹`, then
/// `f_2⁻¹`, … to `x_1` reaches the reported landing, which lies in the last
/// budget without being chosen there.
pub fn replay_witness<T: Scalar, G: Theory<T>>(
    d: &DataSet<T>,
    theory: &G,
    w: &Witness<T, G::Element>,
) -> std::result::Result<(), ReplayFailure> {
    let n = w.observations.len();
    if n == 0 || w.points.len() != n || w.transformations.len() + 1 != n {
        return Err(ReplayFailure::Shape(format!(
            "{} observations, {} points, {} transformations",
            n,
            w.points.len(),
            w.transformations.len()
        )));
    }
    if let Some(&bad) = w.observations.iter().find(|&&i| i >= d.len()) {
        return Err(ReplayFailure::NoSuchObservation(bad));
    }
    let apply = |e: &G::Element, x: &Alternative<T>| theory.apply(e, x).map_err(|err| ReplayFailure::Apply(err.to_string()));
    for (j, (&i, x)) in w.observations.iter().zip(&w.points).enumerate() {
        if !d.is_chosen(i, x) {
            return Err(ReplayFailure::NotChosen(j));
        }
    }
    for (j, f) in w.transformations.iter().enumerate() {
        let moved = apply(f, &w.points[j + 1])?;
        if !d.in_budget(w.observations[j], &moved) {
            return Err(ReplayFailure::NotAffordable(j + 1));
        }
    }
    let mut y = w.points[0].clone();
    for f in &w.transformations {
        y = apply(&theory.inverse(f), &y)?;
    }
    if y != w.landing {
        return Err(ReplayFailure::LandingMismatch { recomputed: y.to_string(), reported: w.landing.to_string() });
    }
    let last = w.observations[n - 1];
    if !d.in_budget(last, &y) {
        return Err(ReplayFailure::LandingOutside);
    }
    if d.is_chosen(last, &y) {
        return Err(ReplayFailure::LandingChosen);
    }
    Ok(())
}

/// Which properties a certificate relation must have.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuditFlags {
    pub complete: bool,
    pub transitive: bool,
    pub ordered: bool,
    /// The relation must extend the revealed relation `R_E`.
    pub extends_revealed: bool,
    pub maximality: Maximality,
}

/// Outcome of [`audit_certificate`], one verdict per property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Audit {
    pub complete: bool,
    pub transitive: bool,
    pub consistent: bool,
    pub extends_revealed: bool,
    pub maximal: bool,
}

impl Audit {
    /// True when every property requested by `flags` holds.
    pub fn confirms(&self, flags: AuditFlags) -> bool {
        self.consistent
            && self.maximal
            && (!flags.complete || self.complete)
            && (!flags.transitive || self.transitive)
            && (!flags.extends_revealed || self.extends_revealed)
    }
}

/// Audit a rationalizing relation against the data and a finite theory.
/// Images that leave the universe impose no constraint.
pub fn audit_certificate<T: Scalar, G: Theory<T>>(
    d: &DataSet<T>,
    theory: &G,
    r: &Relation,
    flags: AuditFlags,
) -> Result<Audit> {
    let n = d.universe().len();
    if r.size() != n {
        return Err(Error::UniverseMismatch { left: r.size(), right: n });
    }
    if flags.ordered && !theory.is_ordered() {
        return Err(Error::OrderMissing(theory.name().to_string()));
    }
    let action = Action::new(d, theory, false)?;
    let obs = budgets(d);
    let mut revealed = Relation::diagonal(n);
    for (b, c) in &obs {
        for &x in c {
            for &y in b {
                revealed.insert(x, y);
            }
        }
    }
    let extends_revealed = (0..n).all(|x| {
        (0..n).all(|y| {
            let base = revealed.contains(x, y);
            let strict = base && !revealed.contains(y, x);
            (!base || r.contains(x, y)) && (!strict || !r.contains(y, x))
        })
    });
    Ok(Audit {
        complete: is_complete(r),
        transitive: is_transitive(r),
        consistent: action.consistent(r, flags.ordered),
        extends_revealed,
        maximal: obs.iter().all(|(b, c)| flags.maximality.generates(r, b, c)),
    })
}
