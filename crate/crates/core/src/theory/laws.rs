//! Pointwise checks of the group and ordered-group axioms on samples.

use std::cmp::Ordering;

use super::Theory;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::universe::Alternative;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawFailure {
    pub law: &'static str,
    pub elements: Vec<String>,
    pub point: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checked: usize,
    pub failures: Vec<LawFailure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, law: &'static str, elements: Vec<String>, point: Option<String>) {
        self.checked += 1;
        if !ok {
            self.failures.push(LawFailure { law, elements, point });
        }
    }
}

/// Partner indices for sample `i`; spreads the pairs and triples over the
/// whole sample without a quadratic or cubic sweep.
fn partners(i: usize, s: usize) -> (usize, usize) {
    ((i * 31 + 7) % s, (i * 17 + 3) % s)
}

fn same_map<T: Scalar, G: Theory<T>>(
    th: &G,
    a: &G::Element,
    b: &G::Element,
    x: &Alternative<T>,
) -> bool {
    matches!((th.apply(a, x), th.apply(b, x)), (Ok(p), Ok(q)) if p == q)
}

/// Identity, closure (the composite acts as "outer after inner"), inverse and
/// associativity, each evaluated pointwise on `points`.
pub fn verify_group_laws<T: Scalar, G: Theory<T>>(
    th: &G,
    samples: &[G::Element],
    points: &[Alternative<T>],
) -> LawReport {
    let mut report = LawReport::default();
    let id = th.identity();
    let s = samples.len();
    for x in points {
        report.record(
            matches!(th.apply(&id, x), Ok(ref y) if y == x),
            "identity",
            vec![th.describe(&id)],
            Some(x.to_string()),
        );
    }
    for (i, f) in samples.iter().enumerate() {
        let (j, k) = partners(i, s);
        let (g, h) = (&samples[j], &samples[k]);
        let inv = th.inverse(f);
        let fg = th.compose(f, g);
        let left = th.compose(&fg, h);
        let right = th.compose(f, &th.compose(g, h));
        for x in points {
            let at = || Some(x.to_string());
            report.record(
                same_map(th, &th.compose(f, &id), f, x) && same_map(th, &th.compose(&id, f), f, x),
                "identity",
                vec![th.describe(f)],
                at(),
            );
            let pointwise = th.apply(g, x).and_then(|gx| th.apply(f, &gx));
            report.record(
                matches!((th.apply(&fg, x), pointwise), (Ok(a), Ok(b)) if a == b),
                "closure",
                vec![th.describe(f), th.describe(g)],
                at(),
            );
            report.record(
                same_map(th, &th.compose(f, &inv), &id, x) && same_map(th, &th.compose(&inv, f), &id, x),
                "inverse",
                vec![th.describe(f), th.describe(&inv)],
                at(),
            );
            report.record(
                same_map(th, &left, &right, x),
                "associativity",
                vec![th.describe(f), th.describe(g), th.describe(h)],
                at(),
            );
        }
    }
    report
}

/// Totality of the order, left and right translation invariance, and the two
/// consequences: composing ordered pairs preserves the order, and inversion
/// reverses it.
pub fn verify_ordered_group_laws<T: Scalar, G: Theory<T>>(
    th: &G,
    samples: &[G::Element],
) -> Result<LawReport> {
    if !th.is_ordered() {
        return Err(Error::OrderMissing(th.name().to_string()));
    }
    let mut report = LawReport::default();
    let s = samples.len();
    let ge = |a: &G::Element, b: &G::Element| th.compare(a, b).map(|o| o != Ordering::Less);
    for (i, f) in samples.iter().enumerate() {
        let (j, k) = partners(i, s);
        let (f2, h) = (&samples[j], &samples[k]);
        let names = |xs: &[&G::Element]| xs.iter().map(|e| th.describe(e)).collect::<Vec<_>>();

        let forward = th.compare(f, f2);
        let backward = th.compare(f2, f);
        report.record(
            matches!((forward, backward), (Some(a), Some(b)) if a == b.reverse()),
            "totality",
            names(&[f, f2]),
            None,
        );
        let (hi, lo) = if ge(f, f2) == Some(true) { (f, f2) } else { (f2, f) };
        report.record(
            ge(&th.compose(h, hi), &th.compose(h, lo)) == Some(true),
            "left invariance",
            names(&[hi, lo, h]),
            None,
        );
        report.record(
            ge(&th.compose(hi, h), &th.compose(lo, h)) == Some(true),
            "right invariance",
            names(&[hi, lo, h]),
            None,
        );
        report.record(
            ge(&th.inverse(lo), &th.inverse(hi)) == Some(true),
            "inverse reverses order",
            names(&[hi, lo]),
            None,
        );
        // second ordered pair built from h and the next sample
        let g2 = &samples[(k + 1) % s];
        let (hi2, lo2) = if ge(h, g2) == Some(true) { (h, g2) } else { (g2, h) };
        report.record(
            ge(&th.compose(hi, hi2), &th.compose(lo, lo2)) == Some(true),
            "composition preserves order",
            names(&[hi, hi2, lo, lo2]),
            None,
        );
    }
    Ok(report)
}

/// Whether `f` and `g` commute on every sample point.
pub fn commute_on<T: Scalar, G: Theory<T>>(
    th: &G,
    f: &G::Element,
    g: &G::Element,
    points: &[Alternative<T>],
) -> bool {
    let fg = th.compose(f, g);
    let gf = th.compose(g, f);
    points.iter().all(|x| same_map(th, &fg, &gf, x))
}
