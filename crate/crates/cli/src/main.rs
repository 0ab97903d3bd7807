//! `aarp`: decide algebraic revealed-preference axioms on a data-set file.
//!
//! Exit status: 0 when the data pass (or the command succeeds), 1 when a
//! violation is found, 2 on usage, parse or capacity errors.

mod theory_spec;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use aarp::axioms::{check_harp, check_iarp, check_qarp, check_saarp_generic, check_sarp, check_waarp, iarp_limits, SearchLimits};
use aarp::behavioral::{check_ge_saarp, check_s_saarp, DEFAULT_CAP};
use aarp::closure::{
    augment_universe, extend_to_complete, ordered_theory_closure, theory_closure, ActionTable, Closure, EscapePolicy,
};
use aarp::data::{revealed_relation, DataSet, Observation};
use aarp::oracle::{
    audit_certificate, brute_force_rationalizable, cap_warning, AuditFlags, Maximality, RationalizabilityQuery,
    DEFAULT_ORACLE_CAP, MAX_ORACLE_CAP,
};
use aarp::theory::{
    verify_group_laws, verify_ordered_group_laws, AffineElement, AffineTheory, LawReport, ScalingTheory, Theory,
    TranslationTheory, TrivialTheory,
};
use aarp::verdict::{Certificate, Verdict};
use aarp::{Alternative, Rational, Relation, Universe};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use theory_spec::{parse_affine, parse_generator, parse_grid, AnyTheory, TheoryName, TheorySpec};

type Q = Rational;

#[derive(Parser, Debug)]
#[command(name = "aarp", version, about = "Algebraic revealed-preference tests over exact rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide an axiom on a data set.
    Check(CheckArgs),
    /// Extend the revealed relation to a complete, closed relation.
    Complete(CompleteArgs),
    /// Brute-force rationalizability on a tiny universe.
    Oracle(OracleArgs),
    /// Run the group and closure law suites on a theory.
    Laws(LawsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Axiom {
    Waarp,
    Saarp,
    Sarp,
    Harp,
    Qarp,
    Iarp,
    #[value(name = "s-saarp")]
    SSaarp,
    #[value(name = "ge-saarp")]
    GeSaarp,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Human,
    Json,
}

#[derive(Args, Debug, Clone)]
struct TheoryArgs {
    /// Theory the preferences are assumed to respect.
    #[arg(long, value_enum)]
    theory: Option<TheoryName>,
    /// Comma separated parameters for scaling / translation grids.
    #[arg(long, value_parser = |s: &str| parse_grid(s).map(Grid))]
    grid: Option<Grid>,
    /// Permutation of universe indices (0-based images); repeatable.
    #[arg(long = "generator", value_parser = parse_generator)]
    generators: Vec<Vec<usize>>,
    /// Affine mixture `alpha;z1,z2,..`; repeatable.
    #[arg(long = "element", value_parser = parse_affine)]
    elements: Vec<AffineElement<Q>>,
}

#[derive(Debug, Clone)]
struct Grid(Vec<Q>);

impl TheoryArgs {
    fn spec(&self, default: TheoryName) -> TheorySpec {
        TheorySpec {
            name: self.theory.unwrap_or(default),
            grid: self.grid.clone().map(|g| g.0),
            generators: self.generators.clone(),
            elements: self.elements.clone(),
        }
    }
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, value_enum)]
    axiom: Axiom,
    #[command(flatten)]
    theory: TheoryArgs,
    /// Stage-one theory for s-saarp (`--theory` is stage two).
    #[arg(long, value_enum)]
    first_theory: Option<TheoryName>,
    /// k for ge-saarp.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Largest number of candidate assignments the behavioral searches may face.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
    /// Longest transformation sequence explored by saarp / iarp. Grid
    /// theories default to GRID_DEPTH.
    #[arg(long)]
    max_depth: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
    input: PathBuf,
}

#[derive(Args, Debug)]
struct CompleteArgs {
    #[command(flatten)]
    theory: TheoryArgs,
    /// Rounds of images added to the universe for grid theories.
    #[arg(long, default_value_t = 1)]
    orbit_depth: usize,
    /// Longest transformation sequence in the saarp pre-check.
    #[arg(long)]
    max_depth: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
    input: PathBuf,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    theory: TheoryArgs,
    #[arg(long)]
    transitive: bool,
    #[arg(long)]
    complete: bool,
    /// Use consistency with the ordered theory.
    #[arg(long)]
    ordered: bool,
    /// Read C(B) = max(B, R) without requiring rejected points to be strictly worse.
    #[arg(long)]
    literal: bool,
    /// Largest universe enumerated (at most 5).
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    #[command(flatten)]
    output: OutputArgs,
    input: PathBuf,
}

#[derive(Args, Debug)]
struct LawsArgs {
    #[command(flatten)]
    theory: TheoryArgs,
    /// Data set whose alternatives serve as test points.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

/// A failure that maps to exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Run = Result<ExitCode, Usage>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Check(a) => check(a),
        Command::Complete(a) => complete(a),
        Command::Oracle(a) => oracle(a),
        Command::Laws(a) => laws(a),
    };
    result.unwrap_or_else(|Usage(msg)| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    })
}

fn load(path: &PathBuf) -> Result<DataSet<Q>, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    DataSet::from_json(&value).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn write(output: &OutputArgs, text: String) -> Result<(), Usage> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render<G: Theory<Q>>(verdict: &Verdict<Q, G::Element>, theory: &G, format: Format) -> String {
    match format {
        Format::Human => verdict.to_human(theory),
        Format::Json => format!("{:#}\n", verdict.to_json(theory)),
    }
}

fn emit<G: Theory<Q>>(verdict: Verdict<Q, G::Element>, theory: &G, output: &OutputArgs) -> Run {
    write(output, render(&verdict, theory, output.format))?;
    Ok(if verdict.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn require_linear(d: &DataSet<Q>, axiom: &str) -> Result<(), Usage> {
    match d.observations().iter().position(|o: &Observation<Q>| !o.budget.is_linear()) {
        Some(i) => Err(Usage(format!("{axiom} needs linear budgets; observation {} is explicit", i + 1))),
        None => Ok(()),
    }
}

fn require_explicit(d: &DataSet<Q>, axiom: &str) -> Result<(), Usage> {
    if d.all_explicit() {
        Ok(())
    } else {
        Err(Usage(format!("{axiom} needs explicit budgets")))
    }
}

fn only_theory(args: &TheoryArgs, allowed: TheoryName, axiom: &str) -> Result<(), Usage> {
    match args.theory {
        Some(t) if t != allowed => Err(Usage(format!("{axiom} fixes the theory to {allowed:?}; got {t:?}"))),
        _ => Ok(()),
    }
}

fn check(a: CheckArgs) -> Run {
    let d = load(&a.input)?;
    let limits = saarp_limits(&a.theory, a.max_depth);
    let out = &a.output;
    match a.axiom {
        Axiom::Sarp => {
            only_theory(&a.theory, TheoryName::Trivial, "sarp")?;
            emit(check_sarp(&d), &TrivialTheory::new(), out)
        }
        Axiom::Harp => {
            only_theory(&a.theory, TheoryName::Scaling, "harp")?;
            require_linear(&d, "harp")?;
            emit(check_harp(&d)?, &ScalingTheory::new(), out)
        }
        Axiom::Qarp => {
            only_theory(&a.theory, TheoryName::Translation, "qarp")?;
            require_linear(&d, "qarp")?;
            emit(check_qarp(&d)?, &TranslationTheory::new(), out)
        }
        Axiom::Iarp => {
            only_theory(&a.theory, TheoryName::Affine, "iarp")?;
            let limits = if a.max_depth.is_some() { limits } else { iarp_limits(&d) };
            let verdict = check_iarp(&d, a.theory.elements.clone(), &limits)?;
            let dim = d.universe().dimension().unwrap_or(0);
            let theory = AffineTheory::new(dim, a.theory.elements.clone())?.closed_under_inverse();
            emit(verdict, &theory, out)
        }
        Axiom::Waarp => {
            let theory = a.theory.spec(TheoryName::Trivial).build(d.universe())?;
            with_theory!(&theory, t => emit(check_waarp(&d, t)?, t, out))
        }
        Axiom::Saarp => {
            let theory = a.theory.spec(TheoryName::Trivial).build(d.universe())?;
            if !theory.is_finite() {
                return Err(Usage(format!("saarp needs a finite element list for theory {}; pass --grid", theory.name())));
            }
            with_theory!(&theory, t => emit(check_saarp_generic(&d, t, &limits)?, t, out))
        }
        Axiom::GeSaarp => {
            require_explicit(&d, "ge-saarp")?;
            let theory = a.theory.spec(TheoryName::Trivial).build(d.universe())?;
            if !theory.is_ordered() {
                return Err(Usage(format!("ge-saarp needs an ordered theory; {} is not", theory.name())));
            }
            with_theory!(&theory, t => emit(check_ge_saarp(&d, t, a.k, a.cap)?, t, out))
        }
        Axiom::SSaarp => {
            require_explicit(&d, "s-saarp")?;
            let second = a.theory.spec(TheoryName::Trivial).build(d.universe())?;
            if !second.is_ordered() {
                return Err(Usage(format!("the second stage of s-saarp needs an ordered theory; {} is not", second.name())));
            }
            let first = match a.first_theory.unwrap_or(TheoryName::Trivial) {
                TheoryName::Trivial => AnyTheory::Trivial(TrivialTheory::new()),
                TheoryName::Permutation => a.theory.spec(TheoryName::Permutation).build(d.universe())?,
                other => return Err(Usage(format!("--first-theory {other:?} is not supported; use trivial or permutation"))),
            };
            with_theory!(&first, g1 => with_theory!(&second, g2 => emit(check_s_saarp(&d, g1, g2, a.cap)?, g2, out)))
        }
    }
}

/// Default search depth for scaling / translation grids, whose generated
/// group is infinite.
const GRID_DEPTH: usize = 6;
const CLI_MAX_STATES: usize = 1 << 17;

fn saarp_limits(theory: &TheoryArgs, max_depth: Option<usize>) -> SearchLimits {
    let grid = matches!(theory.theory, Some(TheoryName::Scaling | TheoryName::Translation));
    SearchLimits { max_depth: max_depth.or(grid.then_some(GRID_DEPTH)), max_states: CLI_MAX_STATES }
}

fn relation_pairs(u: &Universe<Q>, r: &Relation) -> Vec<(Alternative<Q>, Alternative<Q>)> {
    r.pairs().map(|(x, y)| (u.get(x).clone(), u.get(y).clone())).collect()
}

fn complete(a: CompleteArgs) -> Run {
    let d = load(&a.input)?;
    let theory = a.theory.spec(TheoryName::Trivial).build(d.universe())?;
    let limits = saarp_limits(&a.theory, a.max_depth);
    with_theory!(&theory, t => complete_with(&d, t, a.orbit_depth, &limits, &a.output))
}

fn complete_with<G: Theory<Q>>(
    d: &DataSet<Q>,
    theory: &G,
    depth: usize,
    limits: &SearchLimits,
    output: &OutputArgs,
) -> Run {
    let elements = theory
        .elements()
        .ok_or_else(|| Usage(format!("theory {} needs a finite element list; pass --grid", theory.name())))?;
    let saarp = check_saarp_generic(d, theory, limits)?;
    if saarp.is_violation() {
        let verdict = Verdict { axiom: "complete".into(), ..saarp }
            .with_note("the data violate SAARP, so no rationalizing completion exists");
        return emit(verdict, theory, output);
    }
    // Grid theories move points off the observed universe; close it first.
    let escapes = elements
        .iter()
        .any(|e| d.universe().alternatives().iter().any(|x| theory.apply(e, x).map_or(true, |y| d.universe().index_of(&y).is_none())));
    let (universe, policy) = if escapes {
        (augment_universe(d.universe(), theory, elements, depth)?, EscapePolicy::Restrict)
    } else {
        (d.universe().clone(), EscapePolicy::Strict)
    };
    let data = DataSet::new(universe.clone(), d.observations().to_vec())?;
    let table = ActionTable::build(theory, elements, &universe, policy)?;
    let close = if theory.is_ordered() { Closure::TransitiveOrdered(&table) } else { Closure::TransitiveTheory(&table) };
    let verdict = match extend_to_complete(&revealed_relation(&data), close) {
        Ok(star) => {
            let flags = AuditFlags { complete: true, transitive: true, extends_revealed: true, ..AuditFlags::default() };
            let audit = audit_certificate(&data, theory, &star, flags)?;
            Verdict::pass("complete")
                .with_certificate(Certificate::Relation(relation_pairs(&universe, &star)))
                .with_note(format!(
                    "audit: complete={} transitive={} consistent={} extends R_E={} maximal={}",
                    audit.complete, audit.transitive, audit.consistent, audit.extends_revealed, audit.maximal
                ))
        }
        Err(e) => Verdict::violation("complete", None).with_note(e.to_string()),
    };
    emit(verdict, theory, output)
}

fn oracle(a: OracleArgs) -> Run {
    if a.oracle_cap > MAX_ORACLE_CAP {
        return Err(Usage(format!("--oracle-cap {} exceeds the maximum of {MAX_ORACLE_CAP}", a.oracle_cap)));
    }
    let d = load(&a.input)?;
    if let Some(w) = cap_warning(a.oracle_cap) {
        eprintln!("warning: {w}");
    }
    let theory = a.theory.spec(TheoryName::Trivial).build(d.universe())?;
    with_theory!(&theory, t => {
        let maximality = if a.literal { Maximality::Literal } else { Maximality::Revealed };
        let q = RationalizabilityQuery::new(&d, t)
            .transitive(a.transitive)
            .complete(a.complete)
            .ordered(a.ordered)
            .maximality(maximality)
            .cap(a.oracle_cap);
        let verdict = match brute_force_rationalizable(&q)? {
            Some(r) => Verdict::pass("oracle").with_certificate(Certificate::Relation(relation_pairs(d.universe(), &r))),
            None => Verdict::violation("oracle", None).with_note("no relation with the requested properties generates the choices"),
        };
        emit(verdict, t, &a.output)
    })
}

fn default_points(dim: usize) -> Vec<Alternative<Q>> {
    let q = |n: i64, m: i64| Q::new(n.into(), m.into());
    let rows = [[q(1, 1), q(2, 1), q(0, 1)], [q(3, 1), q(1, 2), q(1, 1)], [q(-2, 3), q(5, 1), q(2, 1)], [q(0, 1), q(0, 1), q(7, 3)]];
    rows.iter().map(|r| Alternative::Vector(r[..dim].to_vec())).collect()
}

fn laws(a: LawsArgs) -> Run {
    let spec = a.theory.spec(TheoryName::Trivial);
    let universe = match &a.input {
        Some(p) => load(p)?.universe().clone(),
        None => match spec.name {
            TheoryName::Permutation => {
                let n = spec.generators.first().map_or(0, Vec::len);
                Universe::labels((0..n).map(|i| format!("x{i}")))?
            }
            TheoryName::Trivial => Universe::labels(["a", "b", "c"])?,
            TheoryName::Affine => {
                let dim = spec.elements.first().map_or(2, AffineElement::dimension);
                Universe::new(default_points(dim.min(3)))?
            }
            _ => Universe::new(default_points(2))?,
        },
    };
    let theory = spec.build(&universe)?;
    with_theory!(&theory, t => laws_with(t, &universe, &a.output))
}

fn law_samples<G: Theory<Q>>(theory: &G) -> Vec<G::Element> {
    if let Some(e) = theory.elements() {
        return e.to_vec();
    }
    let params = ["1/3", "1/2", "1", "2", "5/2", "3"].map(|s| aarp::Scalar::parse_exact(s).expect("literal rational"));
    params
        .iter()
        .map(|p: &Q| {
            let v = json!(p.to_string());
            let element = json!({ "alpha": v.clone(), "t": v });
            theory.element_from_json(&element, "sample").unwrap_or_else(|_| theory.identity())
        })
        .collect()
}

fn laws_with<G: Theory<Q>>(theory: &G, universe: &Universe<Q>, output: &OutputArgs) -> Run {
    let samples = law_samples(theory);
    let points = universe.alternatives().to_vec();
    let mut report: LawReport = verify_group_laws(theory, &samples, &points);
    if theory.is_ordered() {
        let ordered = verify_ordered_group_laws(theory, &samples)?;
        report.checked += ordered.checked;
        report.failures.extend(ordered.failures);
    }
    let closure = closure_laws(theory, &samples, universe)?;
    let failures: Vec<String> = report
        .failures
        .iter()
        .map(|f| format!("{} [{}]{}", f.law, f.elements.join(", "), f.point.as_ref().map_or(String::new(), |p| format!(" at {p}"))))
        .chain(closure.1.iter().cloned())
        .collect();
    let text = match output.format {
        Format::Json => format!(
            "{:#}\n",
            json!({
                "theory": theory.name(),
                "samples": samples.len(),
                "group_law_checks": report.checked,
                "closure_law_checks": closure.0,
                "failures": failures,
            })
        ),
        Format::Human => {
            let mut s = format!(
                "{}: {} group-law checks, {} closure-law checks on {} samples\n",
                theory.name(),
                report.checked,
                closure.0,
                samples.len()
            );
            for f in &failures {
                s.push_str(&format!("  failed: {f}\n"));
            }
            if failures.is_empty() {
                s.push_str("  all laws hold\n");
            }
            s
        }
    };
    write(output, text)?;
    Ok(if failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Increasing and monotone on every singleton relation; idempotent as well
/// when the samples act on the universe as a finite group.
fn closure_laws<G: Theory<Q>>(theory: &G, samples: &[G::Element], universe: &Universe<Q>) -> Result<(usize, Vec<String>), Usage> {
    let n = universe.len();
    let strict = theory.elements().is_some_and(|e| e.len() == samples.len())
        && matches!(theory.name(), "trivial" | "permutation");
    let table = ActionTable::build(theory, samples, universe, EscapePolicy::Restrict)?;
    let mut checked = 0;
    let mut failures = Vec::new();
    let singles: Vec<Relation> =
        (0..n).flat_map(|x| (0..n).map(move |y| Relation::from_pairs(n, [(x, y)]))).collect();
    let mut ops: Vec<(&str, Box<dyn Fn(&Relation) -> aarp::Result<Relation>>)> =
        vec![("F", Box::new(|r: &Relation| theory_closure(r, &table)))];
    if theory.is_ordered() {
        ops.push(("F-bar", Box::new(|r: &Relation| ordered_theory_closure(r, &table))));
    }
    for (name, op) in &ops {
        for (i, r) in singles.iter().enumerate() {
            let image = op(r)?;
            checked += 1;
            if !r.is_subset(&image)? {
                failures.push(format!("{name} is not increasing on pair {i}"));
            }
            let bigger = r.union(&singles[(i * 7 + 3) % singles.len()])?;
            checked += 1;
            if !image.is_subset(&op(&bigger)?)? {
                failures.push(format!("{name} is not monotone on pair {i}"));
            }
            if strict {
                checked += 1;
                if op(&image)? != image {
                    failures.push(format!("{name} is not idempotent on pair {i}"));
                }
            }
        }
    }
    Ok((checked, failures))
}
