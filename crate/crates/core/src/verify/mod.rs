//! Executable checks of the lattice lemmas, with replayable witnesses.

mod config;
mod driver;
mod extension_checks;
mod lattice_checks;
pub mod oracle;
mod report;
mod slice_checks;
mod suite;

pub use config::{all_pairs, random_pair_at_separation, random_pairs_in_box, CheckConfig};
pub use driver::{group_by_source, pair_profile, per_source};
pub use extension_checks::{check_baselines, check_reduction_lemmas, check_tilings_and_appendix, ReductionPlan};
pub use lattice_checks::{
    check_block_excursions, check_classifier_equivalence, check_distinguished_geodesics, check_fractal_inheritance,
    excursion_violations, is_p_straight_chain,
};
pub use report::{CheckResult, SuiteReport, Witness, MAX_WITNESSES};
pub use slice_checks::{
    check_level_bounds, check_parent_locality, check_partial_slice_bounds, check_scale_stability, check_slice_bounds,
    check_strip_classification, ladder_pairs, level_sets, region_pairs, sampled_pairs, spacing_holds,
};
pub use suite::{run_check, run_suite, SuiteScale, CHECK_NAMES};
