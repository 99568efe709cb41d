//! Search windows that provably contain every geodesic of a pair.
//!
//! A path of cost at most `D` has at most `D / min_cost` edges, each spanning
//! at most `K` in `Z^2`, so it never leaves the bounding box of its endpoints
//! inflated by `K * ceil(D / min_cost)`. One extra `K` of margin is added.

use crate::error::{GeoError, Result};
use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::{Vertex, Window};

/// Default cap on window cells (about 64 MiB of `u32` costs).
pub const DEFAULT_CELL_CAP: u64 = 1 << 24;

/// Inflation for pairs whose distance is at most `d_upper`.
pub fn inflation_with_bound<G: ImplicitGraph + ?Sized>(graph: &G, d_upper: Cost) -> u64 {
    let k = graph.max_span();
    let hops = d_upper.div_ceil(graph.min_cost().max(1));
    k.saturating_mul(hops).saturating_add(k)
}

pub fn inflation_for<G: ImplicitGraph + ?Sized>(graph: &G, u: Vertex, v: Vertex) -> u64 {
    inflation_with_bound(graph, graph.distance_upper_bound(u, v))
}

fn checked_window(w: Window, cap: u64) -> Result<Window> {
    let required = w.cells();
    if required > cap {
        return Err(GeoError::WindowTooLarge { required, cap });
    }
    Ok(w)
}

pub fn window_for<G: ImplicitGraph + ?Sized>(graph: &G, u: Vertex, v: Vertex) -> Result<Window> {
    window_for_capped(graph, u, v, DEFAULT_CELL_CAP)
}

pub fn window_for_capped<G: ImplicitGraph + ?Sized>(graph: &G, u: Vertex, v: Vertex, cap: u64) -> Result<Window> {
    checked_window(Window::bounding(u, v)?.inflate(inflation_for(graph, u, v))?, cap)
}

/// Window for a pair whose distance is known to be at most `d_upper`.
pub fn window_with_bound<G: ImplicitGraph + ?Sized>(
    graph: &G,
    u: Vertex,
    v: Vertex,
    d_upper: Cost,
    cap: u64,
) -> Result<Window> {
    checked_window(Window::bounding(u, v)?.inflate(inflation_with_bound(graph, d_upper))?, cap)
}

/// One window serving every pair drawn from `region`.
pub fn window_for_region<G: ImplicitGraph + ?Sized>(graph: &G, region: &Window, cap: u64) -> Result<Window> {
    let corner_a = Vertex::new(region.x_min, region.y_min);
    let corner_b = Vertex::new(region.x_max, region.y_max);
    let d = graph.distance_upper_bound(corner_a, corner_b);
    checked_window(region.inflate(inflation_with_bound(graph, d))?, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::AppendixGraph;
    use crate::graph::{PlainGrid, WeightedLattice};
    use crate::lattice::WeightParams;

    #[test]
    fn inflation_examples() {
        let h = WeightedLattice::new(WeightParams::new(3, 1, 2).unwrap());
        assert_eq!(inflation_for(&h, Vertex::new(0, 0), Vertex::new(6, 0)), 13);
        assert_eq!(inflation_for(&h, Vertex::new(5, 5), Vertex::new(5, 5)), 1);
        assert_eq!(inflation_for(&AppendixGraph, Vertex::new(0, 0), Vertex::new(10, 0)), 44);
        assert_eq!(inflation_for(&AppendixGraph, Vertex::new(3, 3), Vertex::new(3, 3)), 4);
        let w = window_for(&h, Vertex::new(0, 0), Vertex::new(6, 0)).unwrap();
        assert_eq!(w, Window::new(-13, 19, -13, 13).unwrap());
    }

    #[test]
    fn cap_is_reported() {
        let err = window_for_capped(&PlainGrid, Vertex::new(0, 0), Vertex::new(100, 0), 1000).unwrap_err();
        match err {
            GeoError::WindowTooLarge { required, cap } => {
                assert_eq!(cap, 1000);
                assert_eq!(required, 303 * 203);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
