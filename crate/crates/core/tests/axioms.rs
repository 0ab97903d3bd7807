mod common;

use aarp::axioms::{check_harp, check_iarp, check_qarp, check_saarp_generic, check_sarp, check_waarp, SearchLimits};
use aarp::data::{Budget, DataSet, Observation};
use aarp::theory::{AffineElement, Permutation, PermutationGroup, ScalingTheory, TranslationTheory, TrivialTheory};
use aarp::{Error, Universe};
use common::*;

fn warp_violation() -> DataSet<Q> {
    linear(&[(&["1", "1"], "10", &["10", "0"]), (&["1", "2"], "10", &["0", "5"])])
}

#[test]
fn empty_data_pass_everything() {
    let d = explicit(3, &[]);
    assert!(check_waarp(&d, &TrivialTheory::new()).unwrap().passed());
    assert!(check_saarp_generic(&d, &TrivialTheory::new(), &SearchLimits::default()).unwrap().passed());
    assert!(check_sarp(&d).passed());
}

#[test]
fn classic_warp_failure() {
    let d = warp_violation();
    let verdict = check_waarp(&d, &TrivialTheory::new()).unwrap();
    let w = verdict.witness.expect("violation");
    // x_2 = (0,5) costs 5 < 10 at the first budget, where it is not chosen
    assert_eq!(w.landing, alt(&["0", "5"]));
    assert_eq!(w.observations, vec![1, 0]);
    assert!(check_sarp(&d).is_violation());
    assert!(check_saarp_generic(&d, &TrivialTheory::new(), &SearchLimits::default()).unwrap().is_violation());
}

#[test]
fn sarp_no_edges_pass() {
    let d = linear(&[(&["1", "2"], "10", &["10", "0"]), (&["2", "1"], "10", &["0", "10"])]);
    assert!(check_sarp(&d).passed());
}

#[test]
fn harp_product_two() {
    let d = linear(&[(&["1", "1"], "4", &["4", "0"]), (&["1", "2"], "4", &["0", "2"])]);
    let verdict = check_harp(&d).unwrap();
    let w = verdict.witness.expect("violation");
    assert_eq!(w.cycle, Some(vec![0, 1]));
    assert_eq!(w.weights, Some(("alphas".to_string(), vec![q("2"), q("1")])));
    assert_eq!(w.observations, vec![0, 1, 0]);
    assert_eq!(w.landing, alt(&["2", "0"]));
}

#[test]
fn harp_self_loop_on_boundary_passes() {
    let d = linear(&[(&["1", "1"], "4", &["4", "0"])]);
    assert!(check_harp(&d).unwrap().passed());
}

#[test]
fn harp_rejects_zero_choice_and_explicit_budgets() {
    let d = linear(&[(&["1", "1"], "4", &["0", "0"])]);
    assert_eq!(check_harp(&d).unwrap_err(), Error::ZeroChoice(1));
    assert_eq!(check_harp(&explicit(2, &[(&[0, 1], &[0])])).unwrap_err(), Error::NonLinearBudget(1));
}

#[test]
fn harp_zero_price_makes_unbounded_edge() {
    // p·x = 0 at the second budget: every multiple of x_1 is affordable there
    let d = linear(&[(&["1", "1"], "4", &["4", "0"]), (&["0", "1"], "4", &["0", "4"])]);
    let w = check_harp(&d).unwrap().witness.expect("violation");
    assert_eq!(w.cycle.as_deref(), Some(&[0usize, 1][..]));
}

#[test]
fn harp_equality_cycle_with_unchosen_landing() {
    // both budgets contain the other's choice exactly on the boundary, so the
    // product is 1 and the landing (the other point) is not chosen
    let d = linear(&[(&["1", "1"], "2", &["2", "0"]), (&["1", "1"], "2", &["0", "2"])]);
    let w = check_harp(&d).unwrap().witness.expect("violation");
    assert_eq!(w.observations.len(), 2);
    assert!(w.landing == alt(&["2", "0"]) || w.landing == alt(&["0", "2"]));
}

#[test]
fn qarp_sum_three() {
    let d = linear(&[(&["1", "2"], "6", &["2", "2"]), (&["2", "1"], "12", &["6", "0"])]);
    let w = check_qarp(&d).unwrap().witness.expect("violation");
    assert_eq!(w.cycle, Some(vec![0, 1]));
    let ts = &w.weights.as_ref().unwrap().1;
    assert_eq!(ts.iter().fold(q("0"), |a, t| a + t.clone()), q("3"));
}

#[test]
fn qarp_boundary_pass_and_zero_numeraire() {
    let d = linear(&[(&["1", "2"], "10", &["10", "0"]), (&["2", "1"], "10", &["0", "10"])]);
    assert!(check_qarp(&d).unwrap().passed());
    let z = linear(&[(&["0", "1"], "10", &["0", "10"])]);
    assert_eq!(check_qarp(&z).unwrap_err(), Error::ZeroNumerairePrice(1));
}

#[test]
fn waarp_symbolic_scaling_matches_harp_on_two_cycle() {
    let d = linear(&[(&["1", "1"], "4", &["4", "0"]), (&["1", "2"], "4", &["0", "2"])]);
    let verdict = check_waarp(&d, &ScalingTheory::new()).unwrap();
    let w = verdict.witness.expect("violation");
    assert!(d.in_unchosen(w.observations[1], &w.landing));
    let qd = linear(&[(&["1", "2"], "6", &["2", "2"]), (&["2", "1"], "12", &["6", "0"])]);
    assert!(check_waarp(&qd, &TranslationTheory::new()).unwrap().is_violation());
}

#[test]
fn waarp_needs_enumerable_theory() {
    let d = explicit(2, &[(&[0, 1], &[0])]);
    assert!(matches!(check_waarp(&d, &ScalingTheory::new()), Err(Error::NotEnumerable(_))));
}

#[test]
fn single_observation_permutation_group_passes() {
    let d = explicit(3, &[(&[0, 1], &[0, 1])]);
    let g = PermutationGroup::generate(d.universe(), vec![Permutation::new(vec![1, 0, 2]).unwrap()]).unwrap();
    assert!(check_saarp_generic(&d, &g, &SearchLimits::default()).unwrap().passed());
}

#[test]
fn engineered_three_cycle_under_rotation() {
    // r rotates (a b c) and (d e f). The data reveal a > d, e > c and f > b;
    // rotating the last two gives d > b and e > a, so a > d > b > e > a.
    let d = explicit(
        6,
        &[
            (&[0, 3], &[0]), // a over d
            (&[4, 2], &[4]), // e over c
            (&[1, 5], &[5]), // f over b
        ],
    );
    let g = PermutationGroup::generate(d.universe(), vec![Permutation::new(vec![1, 2, 0, 4, 5, 3]).unwrap()]).unwrap();
    let verdict = check_saarp_generic(&d, &g, &SearchLimits::default()).unwrap();
    assert!(verdict.is_violation());
    // the identity alone sees nothing
    assert!(check_sarp(&d).passed());
}

#[test]
fn iarp_identity_reduces_to_sarp() {
    let d = warp_violation();
    let id = AffineElement::identity(2);
    assert!(check_iarp(&d, vec![id.clone()], &SearchLimits::default()).unwrap().is_violation());
    let ok = linear(&[(&["1", "2"], "10", &["10", "0"]), (&["2", "1"], "10", &["0", "10"])]);
    assert!(check_iarp(&ok, vec![id], &SearchLimits::default()).unwrap().passed());
    assert_eq!(check_iarp(&ok, vec![], &SearchLimits::default()).unwrap_err(), Error::EmptyElementList);
}

#[test]
fn iarp_mixing_exposes_reversal() {
    let u = Universe::vectors([v(&["2", "2"]), v(&["1", "1"]), v(&["1", "2"]), v(&["3", "4"])]).unwrap();
    let d = DataSet::new(
        u,
        vec![
            Observation::new(Budget::explicit([0, 1]), [0]),
            Observation::new(Budget::explicit([2, 3]), [2]),
        ],
    )
    .unwrap();
    let plain = check_iarp(&d, vec![AffineElement::identity(2)], &SearchLimits::default()).unwrap();
    assert!(plain.passed());
    let mix = AffineElement::mixture(q("1/2"), v(&["1", "0"])).unwrap();
    let verdict = check_iarp(&d, vec![mix], &SearchLimits::default()).unwrap();
    assert!(verdict.is_violation(), "{verdict:?}");
}
