//! The supporting lemma checks at moderate sizes, and the behaviour of the
//! literal coprime reading of the slow-edge rule.

use geoslice::verify::{
    check_block_excursions, check_distinguished_geodesics, check_level_bounds, check_parent_locality,
    check_partial_slice_bounds, ladder_pairs, region_pairs, run_suite, sampled_pairs, CheckConfig, SuiteScale,
};
use geoslice::{SlowRule, Window};

fn square(lo: i64, hi: i64) -> Window {
    Window::new(lo, hi, lo, hi).unwrap()
}

#[test]
fn block_excursions_on_a_twelve_square() {
    let r = check_block_excursions(&CheckConfig::default(), &square(0, 12));
    assert!(r.pass, "{}", r.to_text());
    assert!(r.notes.iter().any(|n| n.contains("self-test")));
}

#[test]
fn parent_locality_at_two_scales() {
    let cfg = CheckConfig::default();
    let r = check_parent_locality(&cfg, 1, &region_pairs(&square(0, 12)));
    assert!(r.pass, "{}", r.to_text());
    let r = check_parent_locality(&cfg, 2, &sampled_pairs(&cfg, "parents", &square(0, 81), 60));
    assert!(r.pass, "{}", r.to_text());
}

#[test]
fn level_sets_across_scales() {
    let cfg = CheckConfig::default();
    let r = check_level_bounds(&cfg, &ladder_pairs(&cfg, "levels", 5, 10));
    assert!(r.pass, "{}", r.to_text());
    assert!(r.extremes["max_|N_H|"] <= 9.0);
}

#[test]
fn partial_slices_on_a_ten_square() {
    let r = check_partial_slice_bounds(&CheckConfig::default(), &region_pairs(&square(0, 10)));
    assert!(r.pass, "{}", r.to_text());
    assert!(r.extremes["max_s1"] <= 2880.0 && r.extremes["max_s2n"] <= 432.0);
}

#[test]
fn literal_coprime_rule_breaks_distinguished_closure() {
    let cfg = CheckConfig::default();
    let literal = CheckConfig { params: cfg.params.with_rule(SlowRule::CoprimeMidpoint), ..cfg };
    let r = check_distinguished_geodesics(&literal, &square(0, 9));
    assert!(!r.pass);
    let w = &r.failures[0];
    assert!(w.u.is_some() && w.vertex.is_some() && w.path.is_some());
    assert!(check_distinguished_geodesics(&cfg, &square(0, 9)).pass);
}

#[test]
fn quick_suite_is_green_and_reproducible() {
    let cfg = CheckConfig::quick();
    let a = run_suite(&cfg, &[], SuiteScale::Quick, None).unwrap();
    assert!(a.pass, "{}", a.to_text());
    let b = run_suite(&cfg, &[], SuiteScale::Quick, None).unwrap();
    assert_eq!(a.to_json(), b.to_json());
}
