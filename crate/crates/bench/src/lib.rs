//! Benchmark fixtures.

use geoslice::engine::window_for_capped;
use geoslice::extension::appendix_graph;
use geoslice::{ExtensionGraph, ImplicitGraph, Vertex, WeightParams, WeightedLattice, Window};

pub fn h12() -> WeightedLattice {
    WeightedLattice::new(WeightParams::new(3, 1, 2).expect("valid parameters"))
}

pub fn appendix() -> ExtensionGraph {
    appendix_graph()
}

/// A pair at `Z^2` separation `2 s` off the lattice axes, with its search window.
pub fn diagonal_pair<G: ImplicitGraph + ?Sized>(graph: &G, s: i64) -> (Vertex, Vertex, Window) {
    let u = Vertex::new(1, 2);
    let v = Vertex::new(1 + s, 2 + s);
    (u, v, window_for_capped(graph, u, v, 1 << 26).expect("window fits the bench cap"))
}

/// Separations used across the benches.
pub const SEPARATIONS: [i64; 3] = [27, 81, 243];
