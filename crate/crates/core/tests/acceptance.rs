//! End-to-end acceptance run: every criterion prints one PASS/FAIL line and
//! the binary exits non-zero if any of them fails.

mod common;

use std::fmt::Display;
use std::time::Instant;

use aarp::axioms::{check_harp, check_qarp, check_saarp_generic, check_sarp, check_waarp, SearchLimits};
use aarp::behavioral::{check_ge_saarp, check_s_saarp, DEFAULT_CAP};
use aarp::closure::{
    extend_to_complete, ordered_theory_closure, theory_closure, ActionTable, Closure, EscapePolicy,
};
use aarp::data::{is_regular, revealed_relation, Budget, DataSet, Observation};
use aarp::oracle::{
    audit_certificate, brute_force_rationalizable, good_enough_rationalizable, harp_oracle, qarp_oracle,
    replay_witness, sequentially_rationalizable, AuditFlags, Maximality, RationalizabilityQuery,
};
use aarp::relation::transitive_closure;
use aarp::theory::{
    commute_on, verify_group_laws, verify_ordered_group_laws, AffineElement, AffineTheory, Permutation,
    PermutationGroup, ScalingTheory, Theory, TranslationTheory, TrivialTheory,
};
use aarp::verdict::Verdict;
use aarp::{Alternative, Relation, Universe};
use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Collects replay outcomes of every violation witness emitted during the run.
#[derive(Default)]
struct Replays {
    total: usize,
    failures: Vec<String>,
}

impl Replays {
    fn record<G: Theory<Q>>(&mut self, label: &str, d: &DataSet<Q>, th: &G, v: &Verdict<Q, G::Element>) {
        if let Some(w) = &v.witness {
            self.total += 1;
            if let Err(e) = replay_witness(d, th, w) {
                self.failures.push(format!("{label}: {e}"));
            }
        }
    }
}

struct Board {
    failed: usize,
}

impl Board {
    fn report(&mut self, name: &str, started: Instant, outcome: Result<String, String>) {
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                self.failed += 1;
                println!("FAIL  {name}: {detail} [{secs:.1}s]");
            }
        }
    }
}

fn verdict_of(mismatches: &[String], checked: usize) -> Result<String, String> {
    if mismatches.is_empty() {
        Ok(format!("{checked} instances agree"))
    } else {
        Err(format!("{} of {checked} disagree; first: {}", mismatches.len(), mismatches[0]))
    }
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (1u32..1 << items.len())
        .map(|m| (0..items.len()).filter(|b| m >> b & 1 == 1).map(|b| items[b]).collect())
        .collect()
}

/// Every `(B, C)` with `∅ ≠ C ⊆ B ⊆ {0..n}` and `|B| ≤ max_budget`.
fn all_observations(n: usize, max_budget: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let all: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for b in subsets(&all).into_iter().filter(|b| b.len() <= max_budget) {
        for c in subsets(&b) {
            out.push((b.clone(), c));
        }
    }
    out
}

/// All data sets with one or two observations on `n` labels.
fn enumerate_instances(n: usize, max_budget: usize) -> Vec<DataSet<Q>> {
    let obs = all_observations(n, max_budget);
    let mut out = Vec::new();
    let build = |list: &[&(Vec<usize>, Vec<usize>)]| {
        let pairs: Vec<(&[usize], &[usize])> = list.iter().map(|(b, c)| (b.as_slice(), c.as_slice())).collect();
        explicit(n, &pairs)
    };
    for a in &obs {
        out.push(build(&[a]));
    }
    for a in &obs {
        for b in &obs {
            out.push(build(&[a, b]));
        }
    }
    out
}

fn display_obs(d: &DataSet<Q>) -> String {
    let u = d.universe();
    let show = |xs: &[usize]| xs.iter().map(|&i| u.get(i).to_string()).collect::<Vec<_>>().join(",");
    d.observations()
        .iter()
        .enumerate()
        .map(|(i, o)| format!("{{{}}}->{{{}}}", show(&d.members(i)), show(&o.chosen)))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Default)]
struct EquivalenceTally {
    waarp_weak: Vec<String>,
    saarp_transitive: Vec<String>,
    waarp_complete: Vec<String>,
    saarp_regular: Vec<String>,
    regular_checked: usize,
    completion: Vec<String>,
    completion_checked: usize,
    oracle_audit: Vec<String>,
    /// Instances where the literal maximal-point reading breaks the WAARP equivalences.
    literal_gaps: (usize, usize),
    checked: usize,
}

fn equivalences<G: Theory<Q>>(
    label: &str,
    instances: &[DataSet<Q>],
    th: &G,
    ordered_identity: bool,
    tally: &mut EquivalenceTally,
    replays: &mut Replays,
) {
    let limits = SearchLimits::default();
    for d in instances {
        tally.checked += 1;
        let tag = || format!("{label} {}", display_obs(d));
        let waarp = check_waarp(d, th).unwrap();
        let saarp = check_saarp_generic(d, th, &limits).unwrap();
        replays.record(label, d, th, &waarp);
        replays.record(label, d, th, &saarp);

        let query = RationalizabilityQuery::new(d, th);
        let weak = brute_force_rationalizable(&query).unwrap();
        let transitive = brute_force_rationalizable(&query.transitive(true)).unwrap();
        let complete = brute_force_rationalizable(&query.complete(true)).unwrap();
        for (r, flags) in [
            (&weak, AuditFlags::default()),
            (&transitive, AuditFlags { transitive: true, ..AuditFlags::default() }),
            (&complete, AuditFlags { complete: true, ..AuditFlags::default() }),
        ] {
            if let Some(r) = r {
                if !audit_certificate(d, th, r, flags).unwrap().confirms(flags) {
                    tally.oracle_audit.push(tag());
                }
            }
        }

        let literal = query.maximality(Maximality::Literal);
        tally.literal_gaps.0 += usize::from(brute_force_rationalizable(&literal).unwrap().is_some() != waarp.passed());
        tally.literal_gaps.1 +=
            usize::from(brute_force_rationalizable(&literal.complete(true)).unwrap().is_some() != waarp.passed());
        if waarp.passed() != weak.is_some() {
            tally.waarp_weak.push(format!("{} (waarp {})", tag(), waarp.outcome.as_str()));
        }
        if saarp.passed() != transitive.is_some() {
            tally.saarp_transitive.push(format!("{} (saarp {})", tag(), saarp.outcome.as_str()));
        }
        if complete.is_some() != waarp.passed() {
            tally.waarp_complete.push(format!("{} (waarp {})", tag(), waarp.outcome.as_str()));
        }
        if ordered_identity && is_regular(d, th).unwrap().holds() {
            tally.regular_checked += 1;
            let full = brute_force_rationalizable(&query.transitive(true).complete(true).ordered(true)).unwrap();
            if saarp.passed() != full.is_some() {
                tally.saarp_regular.push(format!("{} (saarp {})", tag(), saarp.outcome.as_str()));
            }
        }
        if saarp.passed() {
            tally.completion_checked += 1;
            let table = ActionTable::build(th, th.elements().unwrap(), d.universe(), EscapePolicy::Strict).unwrap();
            match extend_to_complete(&revealed_relation(d), Closure::TransitiveTheory(&table)) {
                Ok(star) => {
                    let flags = AuditFlags { complete: true, transitive: true, extends_revealed: true, ..AuditFlags::default() };
                    let audit = audit_certificate(d, th, &star, flags).unwrap();
                    if !audit.confirms(flags) {
                        tally.completion.push(format!("{}: {audit:?}", tag()));
                    }
                }
                Err(e) => tally.completion.push(format!("{}: {e}", tag())),
            }
        }
    }
}

fn random_q(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Q {
    q(&format!("{}/{}", rng.gen_range(1..=max_num), rng.gen_range(1..=max_den)))
}

/// Linear data with chosen points on the budget boundary.
fn random_boundary_data(rng: &mut ChaCha8Rng) -> DataSet<Q> {
    let obs = rng.gen_range(2..=6);
    let dim = rng.gen_range(2..=3);
    let mut u = Universe::new(Vec::new()).unwrap();
    let mut observations = Vec::new();
    for _ in 0..obs {
        let p: Vec<Q> = (0..dim).map(|_| random_q(rng, 4, 2)).collect();
        let mut x: Vec<Q> = (0..dim).map(|_| q(&rng.gen_range(0..=4).to_string())).collect();
        if x.iter().all(|c| *c == q("0")) {
            x[rng.gen_range(0..dim)] = q("1");
        }
        let m = p.iter().zip(&x).fold(q("0"), |acc, (a, b)| acc + a.clone() * b.clone());
        let i = u.insert(Alternative::Vector(x)).unwrap();
        observations.push(Observation::new(Budget::linear(p, m), [i]));
    }
    DataSet::new(u, observations).unwrap()
}

fn permutation_group(rng: &mut ChaCha8Rng, n: usize) -> PermutationGroup<Q> {
    let u = Universe::labels((0..n).map(|i| format!("x{i}"))).unwrap();
    let gens = (0..rng.gen_range(1..=2))
        .map(|_| {
            let mut images: Vec<usize> = (0..n).collect();
            images.shuffle(rng);
            Permutation::new(images).unwrap()
        })
        .collect();
    PermutationGroup::generate(&u, gens).unwrap()
}

/// Two rays `{2^j e1}` and `{2^j e2}` holding `n` points, with the
/// power-of-two scaling grid that spans them.
fn scaling_chain(n: usize) -> ActionTable {
    let a = n.div_ceil(2);
    let b = n - a;
    let pow = |j: i64| if j >= 0 { q(&(1i64 << j).to_string()) } else { q(&format!("1/{}", 1i64 << -j)) };
    let points = (0..a)
        .map(|j| vec![pow(j as i64), q("0")])
        .chain((0..b).map(|j| vec![q("0"), pow(j as i64)]));
    let u = Universe::vectors(points).unwrap();
    let span = a as i64 - 1;
    let th = ScalingTheory::with_grid((-span..=span).map(pow)).unwrap();
    ActionTable::build(&th, th.elements().unwrap(), &u, EscapePolicy::Restrict).unwrap()
}

fn random_relation(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Relation {
    let mut r = Relation::empty(n);
    for x in 0..n {
        for y in 0..n {
            if rng.gen_bool(density) {
                r.insert(x, y);
            }
        }
    }
    r
}

fn closure_laws(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let mut failures = Vec::new();
    let mut fail = |what: String| failures.push(what);
    let subset = |a: &Relation, b: &Relation| a.is_subset(b).unwrap();
    for round in 0..1000 {
        let n = rng.gen_range(2..=6);
        let r = random_relation(rng, n, 0.3);
        let mut s = r.clone();
        for (x, y) in random_relation(rng, n, 0.2).pairs() {
            s.insert(x, y);
        }
        let group = permutation_group(rng, n);
        let table = ActionTable::build(&group, group.elements().unwrap(), group.universe(), EscapePolicy::Strict).unwrap();
        let chain = scaling_chain(n);
        type Op<'a> = Box<dyn Fn(&Relation) -> Relation + 'a>;
        let ops: [(&str, Op); 3] = [
            ("T", Box::new(transitive_closure)),
            ("F", Box::new(|q: &Relation| theory_closure(q, &table).unwrap())),
            ("F-bar", Box::new(|q: &Relation| ordered_theory_closure(q, &chain).unwrap())),
        ];
        for (name, op) in &ops {
            let cr = op(&r);
            if !subset(&r, &cr) {
                fail(format!("round {round}: {name} not increasing"));
            }
            if !subset(&cr, &op(&s)) {
                fail(format!("round {round}: {name} not monotone"));
            }
            if op(&cr) != cr {
                fail(format!("round {round}: {name} not idempotent"));
            }
        }
        // fixed points of F are exactly the relations invariant under the group
        let fixed = theory_closure(&r, &table).unwrap();
        for f in 0..table.element_count() {
            for (x, y) in (0..n).flat_map(|x| (0..n).map(move |y| (x, y))) {
                let (fx, fy) = (table.image(f, x).unwrap(), table.image(f, y).unwrap());
                if fixed.contains(x, y) != fixed.contains(fx, fy) {
                    fail(format!("round {round}: F(R) not invariant under element {f}"));
                }
            }
        }
        let invariant = |q: &Relation| {
            (0..table.element_count()).all(|f| {
                q.pairs().all(|(x, y)| q.contains(table.image(f, x).unwrap(), table.image(f, y).unwrap()))
            })
        };
        if (theory_closure(&r, &table).unwrap() == r) != invariant(&r) {
            fail(format!("round {round}: R = F(R) disagrees with invariance"));
        }
        let t_fixed = transitive_closure(&fixed);
        if theory_closure(&t_fixed, &table).unwrap() != t_fixed {
            fail(format!("round {round}: T does not preserve F-fixed points"));
        }
        // ordered consistency of F-bar fixed points on the chain
        let fbar = ordered_theory_closure(&r, &chain).unwrap();
        for hi in 0..chain.element_count() {
            for lo in 0..chain.element_count() {
                if chain.geq(hi, lo) != Some(true) {
                    continue;
                }
                for (x, y) in fbar.pairs() {
                    if let (Some(hx), Some(ly)) = (chain.image(hi, x), chain.image(lo, y)) {
                        if !fbar.contains(hx, ly) {
                            fail(format!("round {round}: F-bar fixed point not ordered-consistent"));
                        }
                    }
                }
            }
        }
    }
    if failures.is_empty() {
        Ok("1000 relations, T/F/F-bar closure laws and fixed-point properties hold".into())
    } else {
        Err(format!("{} failures; first: {}", failures.len(), failures[0]))
    }
}

fn group_laws(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let mut problems = Vec::new();
    let mut checked = 0;
    let signed = |rng: &mut ChaCha8Rng| {
        let v = random_q(rng, 6, 4);
        if rng.gen_bool(0.5) {
            -v
        } else {
            v
        }
    };
    let points: Vec<Alternative<Q>> = (0..8).map(|_| Alternative::Vector(vec![signed(rng), signed(rng)])).collect();

    let scaling = ScalingTheory::<Q>::new();
    let samples: Vec<_> = (0..500).map(|_| scaling.element(random_q(rng, 9, 4)).unwrap()).collect();
    let report = verify_group_laws(&scaling, &samples, &points);
    let ordered = verify_ordered_group_laws(&scaling, &samples).unwrap();
    checked += report.checked + ordered.checked;
    problems.extend(report.failures.iter().chain(&ordered.failures).map(|f| format!("scaling: {f:?}")));

    let translation = TranslationTheory::<Q>::new();
    let samples: Vec<_> = (0..500).map(|_| aarp::theory::TranslationElement::new(signed(rng))).collect();
    let report = verify_group_laws(&translation, &samples, &points);
    let ordered = verify_ordered_group_laws(&translation, &samples).unwrap();
    checked += report.checked + ordered.checked;
    problems.extend(report.failures.iter().chain(&ordered.failures).map(|f| format!("translation: {f:?}")));

    let samples: Vec<AffineElement<Q>> = (0..500)
        .map(|_| AffineElement::mixture(random_q(rng, 5, 3), vec![signed(rng), signed(rng)]).unwrap())
        .collect();
    let affine = AffineTheory::new(2, samples.clone()).unwrap();
    let report = verify_group_laws(&affine, &samples, &points);
    checked += report.checked;
    problems.extend(report.failures.iter().map(|f| format!("affine: {f:?}")));
    let non_commuting = samples.windows(2).filter(|w| !commute_on(&affine, &w[0], &w[1], &points)).count();
    let f = AffineElement::mixture(q("2"), vec![q("0"), q("0")]).unwrap();
    let g = AffineElement::mixture(q("2"), vec![q("1"), q("0")]).unwrap();
    if commute_on(&affine, &f, &g, &points) {
        problems.push("affine: (2, 0) and (2, e1) commute".into());
    }
    if non_commuting == 0 {
        problems.push("affine: no non-commuting pair among the samples".into());
    }
    if problems.is_empty() {
        Ok(format!("{checked} law instances, {non_commuting} non-commuting affine sample pairs"))
    } else {
        Err(format!("{} failures; first: {}", problems.len(), problems[0]))
    }
}

fn harp_qarp_graphs(rng: &mut ChaCha8Rng, replays: &mut Replays) -> Result<String, String> {
    let mut mismatches = Vec::new();
    let (mut harp_violations, mut qarp_violations) = (0, 0);
    for round in 0..200 {
        let d = random_boundary_data(rng);
        let harp = check_harp(&d).unwrap();
        let qarp = check_qarp(&d).unwrap();
        replays.record("harp", &d, &ScalingTheory::new(), &harp);
        replays.record("qarp", &d, &TranslationTheory::new(), &qarp);
        harp_violations += usize::from(harp.is_violation());
        qarp_violations += usize::from(qarp.is_violation());
        if harp.is_violation() != harp_oracle(&d).unwrap() {
            mismatches.push(format!("round {round} harp: {}", d.to_json()));
        }
        if qarp.is_violation() != qarp_oracle(&d).unwrap() {
            mismatches.push(format!("round {round} qarp: {}", d.to_json()));
        }
    }
    verdict_of(&mismatches, 200)
        .map(|s| format!("{s} ({harp_violations} HARP and {qarp_violations} QARP violations)"))
}

fn necessity(rng: &mut ChaCha8Rng, replays: &mut Replays) -> Result<String, String> {
    let mut false_violations = Vec::new();
    // (a) random total preorders on six labels
    for round in 0..100 {
        let rank: Vec<u32> = (0..6).map(|_| rng.gen_range(0..4)).collect();
        let obs: Vec<(Vec<usize>, Vec<usize>)> = (0..rng.gen_range(2..=6))
            .map(|_| {
                let mut b: Vec<usize> = (0..6).filter(|_| rng.gen_bool(0.5)).collect();
                if b.is_empty() {
                    b.push(rng.gen_range(0..6));
                }
                let best = b.iter().map(|&x| rank[x]).max().unwrap();
                let c = b.iter().copied().filter(|&x| rank[x] == best).collect();
                (b, c)
            })
            .collect();
        let pairs: Vec<(&[usize], &[usize])> = obs.iter().map(|(b, c)| (b.as_slice(), c.as_slice())).collect();
        let d = explicit(6, &pairs);
        let v = check_sarp(&d);
        replays.record("sarp", &d, &TrivialTheory::new(), &v);
        if v.is_violation() {
            false_violations.push(format!("preorder round {round}"));
        }
    }
    // (b) Cobb-Douglas demand x_i = a_i m / p_i, homothetic
    // (c) quasilinear demand for x_1 + Σ a_i ln x_i: x_i = a_i p_1 / p_i
    for round in 0..100 {
        let dim = rng.gen_range(2..=3);
        let weights: Vec<Q> = (0..dim).map(|_| random_q(rng, 5, 1)).collect();
        let total = weights.iter().fold(q("0"), |a, b| a + b.clone());
        let mut homothetic = Vec::new();
        let mut quasilinear = Vec::new();
        for _ in 0..rng.gen_range(2..=6) {
            let p: Vec<Q> = (0..dim).map(|_| random_q(rng, 6, 3)).collect();
            let m = random_q(rng, 20, 2);
            let x: Vec<Q> =
                (0..dim).map(|i| weights[i].clone() * m.clone() / (total.clone() * p[i].clone())).collect();
            homothetic.push((p.clone(), m, x));
            let mut y: Vec<Q> = (0..dim).map(|i| weights[i].clone() * p[0].clone() / p[i].clone()).collect();
            y[0] = random_q(rng, 5, 2);
            let income = p.iter().zip(&y).fold(q("0"), |acc, (a, b)| acc + a.clone() * b.clone());
            quasilinear.push((p, income, y));
        }
        for (kind, obs) in [("homothetic", homothetic), ("quasilinear", quasilinear)] {
            let mut u = Universe::new(Vec::new()).unwrap();
            let observations = obs
                .into_iter()
                .map(|(p, m, x)| {
                    let i = u.insert(Alternative::Vector(x)).unwrap();
                    Observation::new(Budget::linear(p, m), [i])
                })
                .collect();
            let d = DataSet::new(u, observations).unwrap();
            let violated = if kind == "homothetic" {
                let v = check_harp(&d).unwrap();
                replays.record("harp", &d, &ScalingTheory::new(), &v);
                v.is_violation()
            } else {
                let v = check_qarp(&d).unwrap();
                replays.record("qarp", &d, &TranslationTheory::new(), &v);
                v.is_violation()
            };
            if violated {
                false_violations.push(format!("{kind} round {round}: {}", d.to_json()));
            }
        }
    }
    if false_violations.is_empty() {
        Ok("300 generated data sets, zero false violations".into())
    } else {
        Err(format!("{} false violations; first: {}", false_violations.len(), false_violations[0]))
    }
}

fn behavioral(replays: &mut Replays) -> (Result<String, String>, Result<String, String>) {
    let th = TrivialTheory::new();
    let instances = enumerate_instances(4, 3);
    let (mut seq, mut ge) = (Vec::new(), Vec::new());
    let (mut seq_pass, mut ge_pass) = (0, 0);
    for d in &instances {
        let s = check_s_saarp(d, &th, &th, DEFAULT_CAP).unwrap();
        let g = check_ge_saarp(d, &th, 2, DEFAULT_CAP).unwrap();
        replays.record("s-saarp", d, &th, &s);
        replays.record("ge-saarp", d, &th, &g);
        seq_pass += usize::from(s.passed());
        ge_pass += usize::from(g.passed());
        if s.passed() != sequentially_rationalizable(d, &th, &th, Maximality::Revealed, 4).unwrap().is_some() {
            seq.push(display_obs(d));
        }
        if g.passed() != good_enough_rationalizable(d, &th, 2, 4).unwrap().is_some() {
            ge.push(display_obs(d));
        }
    }
    let n = instances.len();
    (
        verdict_of(&seq, n).map(|s| format!("{s} ({seq_pass} pass)")),
        verdict_of(&ge, n).map(|s| format!("{s} ({ge_pass} pass)")),
    )
}

fn report_tally(board: &mut Board, started: Instant, tally: &EquivalenceTally) {
    let (lit1, lit3) = tally.literal_gaps;
    let literal = |gaps: usize| format!("; under the bare max(B,R) reading {gaps} instances would differ");
    board.report(
        "WAARP = weak rationalizability",
        started,
        verdict_of(&tally.waarp_weak, tally.checked).map(|s| s + &literal(lit1)),
    );
    board.report("SAARP = transitive rationalizability", started, verdict_of(&tally.saarp_transitive, tally.checked));
    board.report(
        "complete weak rationalizability = WAARP",
        started,
        verdict_of(&tally.waarp_complete, tally.checked).map(|s| s + &literal(lit3)),
    );
    board.report(
        "SAARP = complete transitive rationalizability (regular)",
        started,
        verdict_of(&tally.saarp_regular, tally.regular_checked),
    );
    board.report(
        "Completion certificates audit",
        started,
        verdict_of(&tally.completion, tally.completion_checked),
    );
    board.report(
        "Oracle certificates audit",
        started,
        if tally.oracle_audit.is_empty() {
            Ok("every oracle relation confirms its flags".into())
        } else {
            Err(format!("{} certificates fail; first: {}", tally.oracle_audit.len(), tally.oracle_audit[0]))
        },
    );
}

fn show<E: Display>(r: Result<String, E>) -> Result<String, String> {
    r.map_err(|e| e.to_string())
}

fn main() {
    let mut board = Board { failed: 0 };
    let mut replays = Replays::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_aa29);

    let started = Instant::now();
    let instances = enumerate_instances(3, 3);
    let mut tally = EquivalenceTally::default();
    equivalences("identity", &instances, &TrivialTheory::new(), true, &mut tally, &mut replays);
    let labels = instances[0].universe().clone();
    let swap = PermutationGroup::generate(&labels, vec![Permutation::new(vec![1, 0, 2]).unwrap()]).unwrap();
    equivalences("swap", &instances, &swap, false, &mut tally, &mut replays);
    report_tally(&mut board, started, &tally);

    let started = Instant::now();
    let outcome = harp_qarp_graphs(&mut rng, &mut replays);
    board.report("HARP/QARP graph checkers = simple-cycle oracle", started, outcome);

    let started = Instant::now();
    let outcome = necessity(&mut rng, &mut replays);
    board.report("Necessity on rational synthetic data", started, outcome);

    let started = Instant::now();
    let outcome = closure_laws(&mut rng);
    board.report("Closure-law suite", started, outcome);

    let started = Instant::now();
    let outcome = group_laws(&mut rng);
    board.report("Group-law suite", started, show::<String>(outcome));

    let started = Instant::now();
    let (seq, ge) = behavioral(&mut replays);
    board.report("S-SAARP = sequential rationalizability", started, seq);
    board.report("GE-SAARP = good-enough rationalizability (k = 2)", started, ge);

    let started = Instant::now();
    let outcome = if replays.failures.is_empty() {
        Ok(format!("{} of {} witnesses replay", replays.total, replays.total))
    } else {
        Err(format!("{} of {} witnesses fail; first: {}", replays.failures.len(), replays.total, replays.failures[0]))
    };
    board.report("Witness replay", started, outcome);

    if board.failed > 0 {
        println!("{} criteria failed", board.failed);
        std::process::exit(1);
    }
    println!("all criteria passed");
}
