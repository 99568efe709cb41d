//! Exact windowed shortest paths, geodesic slices, counting and segmentation.

mod dag;
mod field;
mod partial;
mod query;
mod report;
mod segment;
mod window;

pub use dag::{for_each_geodesic_vertex, DagScratch, GeodesicDag};
pub use field::{dist_map, dist_map_limited, DistanceField};
pub use partial::{partial_slice_table, partial_slices, PartialSlices};
pub use query::{
    count_geodesics, distance, enumerate_geodesics, geodesic_dag, pair_fields, slice, slice_profile, PairFields,
};
pub use report::{PartialCounts, SliceReport, Verdict};
pub use segment::{segment_geodesic, Level, Segmentation};
pub use window::{
    inflation_for, inflation_with_bound, window_for, window_for_capped, window_for_region, window_with_bound,
    DEFAULT_CELL_CAP,
};
