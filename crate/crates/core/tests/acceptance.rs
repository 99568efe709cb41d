//! Acceptance gate: one line per criterion, exit status 1 if any is red.
//!
//! Run alone with `cargo test -p geoslice-core --test acceptance`.

use std::time::{Duration, Instant};

use geoslice::bounds::BoundSet;
use geoslice::verify::{
    check_baselines, check_classifier_equivalence, check_distinguished_geodesics, check_fractal_inheritance,
    check_reduction_lemmas, check_scale_stability, check_tilings_and_appendix, check_slice_bounds,
    check_strip_classification, region_pairs, sampled_pairs, CheckConfig, CheckResult, ReductionPlan,
};
use geoslice::{PlainGrid, ReductionSpec, SlowRule, WeightedLattice, Window};

const GOLDEN: &str = include_str!("data/appendix_0_36.edges");

struct Gate {
    failed: Vec<u32>,
}

impl Gate {
    fn criterion(&mut self, id: u32, title: &str, budget: Option<Duration>, run: impl FnOnce() -> Vec<CheckResult>) {
        let start = Instant::now();
        let results = run();
        let elapsed = start.elapsed();
        let within = budget.is_none_or(|b| elapsed <= b);
        let pass = within && results.iter().all(|r| r.pass);
        let budget_text = budget.map_or(String::new(), |b| format!(" (budget {}s)", b.as_secs()));
        println!("{} criterion {id}: {title} [{:.1}s{budget_text}]", if pass { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
        for r in &results {
            print!("{}", indent(&r.to_text()));
        }
        if !pass {
            self.failed.push(id);
        }
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}\n")).collect()
}

fn square(lo: i64, hi: i64) -> Window {
    Window::new(lo, hi, lo, hi).unwrap()
}

fn main() {
    let cfg = CheckConfig::default();
    let mut gate = Gate { failed: Vec::new() };

    gate.criterion(1, "closed-form edge classes match the enumerated definition", Some(Duration::from_secs(120)), || {
        vec![
            check_classifier_equivalence(3, 729, cfg.params.rule()),
            check_classifier_equivalence(5, 625, cfg.params.rule()),
        ]
    });

    gate.criterion(2, "distances and counts survive p^n scaling", Some(Duration::from_secs(300)), || {
        (1..=2).map(|n| check_fractal_inheritance(&cfg, n, 200, 10, 10_000)).collect()
    });

    gate.criterion(3, "unaligned distinguished pairs keep geodesics distinguished", None, || {
        vec![check_distinguished_geodesics(&cfg, &square(0, 27))]
    });

    gate.criterion(4, "strip avoidance is equivalent to meeting the lattice", None, || {
        vec![
            check_strip_classification(&cfg, 1, &region_pairs(&square(0, 27))),
            check_strip_classification(&cfg, 2, &sampled_pairs(&cfg, "strips", &square(0, 81), 300)),
        ]
    });

    gate.criterion(5, "slice sizes stay within the closed-form total", Some(Duration::from_secs(1800)), || {
        let mut r = check_slice_bounds(&cfg);
        let ceiling = BoundSet::for_params(&cfg.params).total_ceiling();
        r.note(format!("integer ceiling of the total bound: {ceiling}"));
        vec![r]
    });

    gate.criterion(6, "band maxima bounded, grid control grows", None, || {
        let total = BoundSet::for_params(&cfg.params).total_bound;
        let appendix = geoslice::bounds::reduction_slice_bound(4, total);
        vec![
            check_scale_stability(&cfg, "H", &WeightedLattice::new(cfg.params), Some(total), false, 4, 30),
            check_scale_stability(&cfg, "appendix", &geoslice::extension::AppendixGraph, Some(appendix), false, 4, 30),
            check_scale_stability(&cfg, "grid", &PlainGrid, None, true, 4, 30),
        ]
    });

    gate.criterion(7, "scale-22 emulation: distances, spans, special closure", None, || {
        let spec = ReductionSpec::new(cfg.params, 1, 22).unwrap();
        vec![check_reduction_lemmas(&cfg, &spec, &ReductionPlan::for_spec(&spec))]
    });

    gate.criterion(8, "grid balls, diagonal slices, diagonal counts", None, || vec![check_baselines()]);

    gate.criterion(9, "hexagonal, triangular and length-4 extension edge sets", None, || {
        vec![check_tilings_and_appendix(&cfg, Some(GOLDEN))]
    });

    // Informational: the literal coprime reading of the slow-edge rule.
    let literal = CheckConfig { params: cfg.params.with_rule(SlowRule::CoprimeMidpoint), ..cfg };
    let r = check_distinguished_geodesics(&literal, &square(0, 12));
    println!(
        "INFO literal coprime rule: {} of {} distinguished-pair instances fail on [0,12]^2 (not a criterion)",
        r.failure_count, r.instances
    );

    if gate.failed.is_empty() {
        println!("acceptance: all 9 criteria passed");
    } else {
        println!("acceptance: criteria {:?} FAILED", gate.failed);
        std::process::exit(1);
    }
}
