//! Named checks and the instance sizes they run at.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{reduction_slice_bound, BoundSet};
use crate::extension::{AppendixGraph, ReductionSpec};
use crate::graph::{PlainGrid, WeightedLattice};
use crate::lattice::{SlowRule, Window};

use super::config::CheckConfig;
use super::extension_checks::{check_baselines, check_reduction_lemmas, check_tilings_and_appendix, ReductionPlan};
use super::lattice_checks::{
    check_block_excursions, check_classifier_equivalence, check_distinguished_geodesics, check_fractal_inheritance,
};
use super::report::{CheckResult, SuiteReport};
use super::slice_checks::{
    check_level_bounds, check_parent_locality, check_partial_slice_bounds, check_scale_stability, check_slice_bounds,
    check_strip_classification, ladder_pairs, region_pairs, sampled_pairs,
};

/// Full runs use the published instance sizes; quick runs shrink every instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteScale {
    Quick,
    Full,
}

impl FromStr for SuiteScale {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(SuiteScale::Quick),
            "full" => Ok(SuiteScale::Full),
            _ => Err(format!("unknown scale {s:?}; expected quick or full")),
        }
    }
}

pub const CHECK_NAMES: &[&str] = &[
    "classifier",
    "fractal",
    "distinguished",
    "blocks",
    "strips",
    "parents",
    "levels",
    "slices",
    "partial",
    "reduction",
    "baselines",
    "tilings",
    "stability",
];

fn full(scale: SuiteScale) -> bool {
    scale == SuiteScale::Full
}

fn square(lo: i64, hi: i64) -> Window {
    Window::new(lo, hi, lo, hi).expect("fixed window")
}

/// Run one named check. `golden` is the expected edge list of the length-4
/// extension on `[0, 36]^2`, if available.
pub fn run_check(name: &str, cfg: &CheckConfig, scale: SuiteScale, golden: Option<&str>) -> Result<Vec<CheckResult>, String> {
    let f = full(scale);
    let out = match name {
        "classifier" => {
            let (e3, e5) = if f { (729, 625) } else { (81, 125) };
            vec![
                check_classifier_equivalence(3, e3, cfg.params.rule()),
                check_classifier_equivalence(5, e5, cfg.params.rule()),
            ]
        }
        "fractal" => {
            let (pairs, bound) = if f { (200, 10) } else { (20, 4) };
            (1..=2).map(|n| check_fractal_inheritance(cfg, n, pairs, bound, 10_000)).collect()
        }
        "distinguished" => vec![check_distinguished_geodesics(cfg, &square(0, if f { 27 } else { 9 }))],
        "blocks" => vec![check_block_excursions(cfg, &square(0, if f { 12 } else { 6 }))],
        "strips" => {
            let near = region_pairs(&square(0, if f { 27 } else { 9 }));
            let far = sampled_pairs(cfg, "strips", &square(0, 81), if f { 300 } else { 20 });
            vec![check_strip_classification(cfg, 1, &near), check_strip_classification(cfg, 2, &far)]
        }
        "parents" => {
            let near = region_pairs(&square(0, if f { 18 } else { 8 }));
            let far = sampled_pairs(cfg, "parents", &square(0, 81), if f { 200 } else { 10 });
            vec![check_parent_locality(cfg, 1, &near), check_parent_locality(cfg, 2, &far)]
        }
        "levels" => {
            let pairs = if f { ladder_pairs(cfg, "levels", 5, 40) } else { ladder_pairs(cfg, "levels", 3, 5) };
            vec![check_level_bounds(cfg, &pairs)]
        }
        "slices" => vec![check_slice_bounds(cfg)],
        "partial" => vec![check_partial_slice_bounds(cfg, &region_pairs(&square(0, if f { 12 } else { 5 })))],
        "reduction" => {
            let spec = ReductionSpec::with_default_scale(cfg.params, 1).map_err(|e| e.to_string())?;
            let mut plan = ReductionPlan::for_spec(&spec);
            if !f {
                plan = ReductionPlan { distance_radius: 2, special_extent: spec.n, far_pairs: Vec::new(), ..plan };
            }
            vec![check_reduction_lemmas(cfg, &spec, &plan)]
        }
        "baselines" => vec![check_baselines()],
        "tilings" => vec![check_tilings_and_appendix(cfg, golden)],
        "stability" => {
            let (bands, per) = if f { (4, 30) } else { (2, 3) };
            let total = BoundSet::for_params(&cfg.params).total_bound;
            let appendix_bound = reduction_slice_bound(4, BoundSet::for_params(&cfg.params.with_rule(SlowRule::EveryMidpoint)).total_bound);
            vec![
                check_scale_stability(cfg, "H", &WeightedLattice::new(cfg.params), Some(total), false, bands, per),
                check_scale_stability(cfg, "appendix", &AppendixGraph, Some(appendix_bound), false, bands, per),
                check_scale_stability(cfg, "grid", &PlainGrid, None, true, bands, per),
            ]
        }
        other => return Err(format!("unknown check {other:?}; known: {}", CHECK_NAMES.join(", "))),
    };
    Ok(out)
}

/// Run the named checks (all of them when `names` is empty) in a fixed order.
pub fn run_suite(cfg: &CheckConfig, names: &[String], scale: SuiteScale, golden: Option<&str>) -> Result<SuiteReport, String> {
    let selected: Vec<&str> = if names.is_empty() { CHECK_NAMES.to_vec() } else { names.iter().map(String::as_str).collect() };
    let mut checks = Vec::new();
    for name in selected {
        checks.extend(run_check(name, cfg, scale, golden)?);
    }
    Ok(SuiteReport::new(cfg.seed, checks))
}
