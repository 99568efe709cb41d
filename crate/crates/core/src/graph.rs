//! Implicit graphs on the vertex set `Z^2`.
//!
//! Nothing is materialised: a graph is a neighbour function plus a few
//! constants the engine uses to size windows.

use crate::lattice::{push_weighted_neighbors, Vertex, WeightParams};

/// Path costs. All edge weights are positive integers.
pub type Cost = u64;

pub trait ImplicitGraph: Send + Sync {
    /// Append every `(neighbour, edge cost)` of `v`. The relation must be symmetric.
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>);

    /// Largest `d_{Z^2}` between the endpoints of an edge.
    fn max_span(&self) -> u64;

    fn min_cost(&self) -> Cost;

    fn max_cost(&self) -> Cost;

    /// A constant `s` with `d_G(u, v) <= s * d_{Z^2}(u, v)` for all pairs.
    fn grid_stretch(&self) -> Cost;

    fn name(&self) -> String;

    /// Any upper bound on `d_G(u, v)`; used to size search windows.
    fn distance_upper_bound(&self, u: Vertex, v: Vertex) -> Cost {
        self.grid_stretch().saturating_mul(u.l1(v))
    }

    fn neighbor_list(&self, v: Vertex) -> Vec<(Vertex, Cost)> {
        let mut out = Vec::new();
        self.neighbors(v, &mut out);
        out
    }
}

impl<G: ImplicitGraph + ?Sized> ImplicitGraph for &G {
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>) {
        (**self).neighbors(v, out)
    }
    fn max_span(&self) -> u64 {
        (**self).max_span()
    }
    fn min_cost(&self) -> Cost {
        (**self).min_cost()
    }
    fn max_cost(&self) -> Cost {
        (**self).max_cost()
    }
    fn grid_stretch(&self) -> Cost {
        (**self).grid_stretch()
    }
    fn name(&self) -> String {
        (**self).name()
    }
    fn distance_upper_bound(&self, u: Vertex, v: Vertex) -> Cost {
        (**self).distance_upper_bound(u, v)
    }
}

impl<G: ImplicitGraph + ?Sized> ImplicitGraph for Box<G> {
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>) {
        (**self).neighbors(v, out)
    }
    fn max_span(&self) -> u64 {
        (**self).max_span()
    }
    fn min_cost(&self) -> Cost {
        (**self).min_cost()
    }
    fn max_cost(&self) -> Cost {
        (**self).max_cost()
    }
    fn grid_stretch(&self) -> Cost {
        (**self).grid_stretch()
    }
    fn name(&self) -> String {
        (**self).name()
    }
    fn distance_upper_bound(&self, u: Vertex, v: Vertex) -> Cost {
        (**self).distance_upper_bound(u, v)
    }
}

/// The weighted lattice `H_{a,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedLattice {
    params: WeightParams,
}

impl WeightedLattice {
    pub fn new(params: WeightParams) -> Self {
        WeightedLattice { params }
    }

    pub fn params(&self) -> &WeightParams {
        &self.params
    }
}

impl ImplicitGraph for WeightedLattice {
    #[inline]
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>) {
        push_weighted_neighbors(v, &self.params, out);
    }
    fn max_span(&self) -> u64 {
        1
    }
    fn min_cost(&self) -> Cost {
        self.params.a()
    }
    fn max_cost(&self) -> Cost {
        self.params.b()
    }
    fn grid_stretch(&self) -> Cost {
        self.params.b()
    }
    fn name(&self) -> String {
        format!("H(p={}, a={}, b={}, {})", self.params.p(), self.params.a(), self.params.b(), self.params.rule().name())
    }
}

/// The square lattice with unit costs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PlainGrid;

impl ImplicitGraph for PlainGrid {
    #[inline]
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>) {
        out.extend(v.unit_neighbors().map(|w| (w, 1)));
    }
    fn max_span(&self) -> u64 {
        1
    }
    fn min_cost(&self) -> Cost {
        1
    }
    fn max_cost(&self) -> Cost {
        1
    }
    fn grid_stretch(&self) -> Cost {
        1
    }
    fn name(&self) -> String {
        "grid".to_string()
    }
}
