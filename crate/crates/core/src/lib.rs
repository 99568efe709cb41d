//! Bounded extensions of the square lattice with bounded geodesic slices.
//!
//! * [`lattice`]: coordinates, p-adic edge classes and the weighted lattice `H_{a,b}`.
//! * [`extension`]: unweighted extensions of `Z^2` and their export formats.
//! * [`engine`]: exact windowed distances, slices, geodesic counting and segmentation.
//! * [`verify`]: executable checks with replayable witnesses.

pub mod bounds;
pub mod engine;
pub mod error;
pub mod extension;
pub mod graph;
pub mod lattice;
pub mod verify;

pub use bounds::BoundSet;
pub use engine::{DistanceField, GeodesicDag, Level, Segmentation, SliceReport};
pub use error::{GeoError, Result};
pub use extension::{ExtensionGraph, ExtensionKind, ReductionGraph, ReductionSpec};
pub use graph::{Cost, ImplicitGraph, PlainGrid, WeightedLattice};
pub use lattice::{Edge, EdgeClass, SlowRule, Vertex, WeightParams, Window};
