//! Unweighted bounded extensions of `Z^2`.

mod appendix;
pub mod export;
mod reduction;
mod tilings;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use appendix::AppendixGraph;
pub use reduction::{ReductionGraph, ReductionSpec};
pub use tilings::{HexBrickGraph, TriangularGraph};

use crate::error::Result;
use crate::graph::{Cost, ImplicitGraph, PlainGrid};
use crate::lattice::{Vertex, Window};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionKind {
    Reduction,
    Appendix,
    Triangular,
    HexBrick,
    PlainGrid,
}

impl ExtensionKind {
    pub fn name(self) -> &'static str {
        match self {
            ExtensionKind::Reduction => "reduction",
            ExtensionKind::Appendix => "appendix",
            ExtensionKind::Triangular => "triangular",
            ExtensionKind::HexBrick => "hex",
            ExtensionKind::PlainGrid => "grid",
        }
    }
}

impl fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExtensionKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "reduction" => Ok(ExtensionKind::Reduction),
            "appendix" => Ok(ExtensionKind::Appendix),
            "triangular" | "tri" => Ok(ExtensionKind::Triangular),
            "hex" | "hex-brick" => Ok(ExtensionKind::HexBrick),
            "grid" | "plain" => Ok(ExtensionKind::PlainGrid),
            other => Err(format!("unknown extension kind {other:?}")),
        }
    }
}

/// A concrete unweighted extension of `Z^2`.
#[derive(Debug, Clone)]
pub enum ExtensionGraph {
    Reduction(ReductionGraph),
    Appendix(AppendixGraph),
    Triangular(TriangularGraph),
    HexBrick(HexBrickGraph),
    PlainGrid(PlainGrid),
}

pub fn build_reduction(spec: ReductionSpec, base: Arc<dyn ImplicitGraph>) -> Result<ExtensionGraph> {
    Ok(ExtensionGraph::Reduction(ReductionGraph::new(spec, base)?))
}

pub fn appendix_graph() -> ExtensionGraph {
    ExtensionGraph::Appendix(AppendixGraph)
}

pub fn triangular_graph() -> ExtensionGraph {
    ExtensionGraph::Triangular(TriangularGraph)
}

pub fn hex_brick_graph() -> ExtensionGraph {
    ExtensionGraph::HexBrick(HexBrickGraph)
}

/// The hexagonal lattice with its missing verticals restored, which is `Z^2`.
pub fn hex_completion() -> ExtensionGraph {
    ExtensionGraph::PlainGrid(PlainGrid)
}

/// Vertical unit edges of `Z^2` absent from the hexagonal lattice, lower endpoint in `window`.
pub fn hex_chords(window: &Window) -> Vec<(Vertex, Vertex)> {
    window
        .vertices()
        .filter(|&v| !HexBrickGraph::has_vertical(v) && v.y < window.y_max)
        .map(|v| (v, Vertex::new(v.x, v.y + 1)))
        .collect()
}

impl ExtensionGraph {
    pub fn kind(&self) -> ExtensionKind {
        match self {
            ExtensionGraph::Reduction(_) => ExtensionKind::Reduction,
            ExtensionGraph::Appendix(_) => ExtensionKind::Appendix,
            ExtensionGraph::Triangular(_) => ExtensionKind::Triangular,
            ExtensionGraph::HexBrick(_) => ExtensionKind::HexBrick,
            ExtensionGraph::PlainGrid(_) => ExtensionKind::PlainGrid,
        }
    }

    fn inner(&self) -> &dyn ImplicitGraph {
        match self {
            ExtensionGraph::Reduction(g) => g,
            ExtensionGraph::Appendix(g) => g,
            ExtensionGraph::Triangular(g) => g,
            ExtensionGraph::HexBrick(g) => g,
            ExtensionGraph::PlainGrid(g) => g,
        }
    }

    /// Largest `Z^2`-distance spanned by an edge.
    pub fn bound_k(&self) -> u64 {
        self.inner().max_span()
    }

    /// Whether `uv` is an edge of this graph that is not a unit edge of `Z^2`.
    pub fn is_new_edge(&self, u: Vertex, v: Vertex) -> bool {
        match self {
            ExtensionGraph::Reduction(g) => g.is_new_edge(u, v),
            ExtensionGraph::Appendix(g) => g.is_new_edge(u, v),
            ExtensionGraph::Triangular(_) => {
                let d = (v.x as i128 - u.x as i128, v.y as i128 - u.y as i128);
                d == (1, 1) || d == (-1, -1)
            }
            ExtensionGraph::HexBrick(_) | ExtensionGraph::PlainGrid(_) => false,
        }
    }

    /// Endpoints of new edges.
    pub fn is_special(&self, v: Vertex) -> bool {
        match self {
            ExtensionGraph::Reduction(g) => g.is_special(v),
            ExtensionGraph::Appendix(g) => !g.new_edge_neighbors(v).is_empty(),
            ExtensionGraph::Triangular(_) => true,
            ExtensionGraph::HexBrick(_) | ExtensionGraph::PlainGrid(_) => false,
        }
    }
}

impl ImplicitGraph for ExtensionGraph {
    #[inline]
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>) {
        match self {
            ExtensionGraph::Reduction(g) => g.neighbors(v, out),
            ExtensionGraph::Appendix(g) => g.neighbors(v, out),
            ExtensionGraph::Triangular(g) => g.neighbors(v, out),
            ExtensionGraph::HexBrick(g) => g.neighbors(v, out),
            ExtensionGraph::PlainGrid(g) => g.neighbors(v, out),
        }
    }
    fn max_span(&self) -> u64 {
        self.inner().max_span()
    }
    fn min_cost(&self) -> Cost {
        self.inner().min_cost()
    }
    fn max_cost(&self) -> Cost {
        self.inner().max_cost()
    }
    fn grid_stretch(&self) -> Cost {
        self.inner().grid_stretch()
    }
    fn name(&self) -> String {
        self.inner().name()
    }
    fn distance_upper_bound(&self, u: Vertex, v: Vertex) -> Cost {
        self.inner().distance_upper_bound(u, v)
    }
}
