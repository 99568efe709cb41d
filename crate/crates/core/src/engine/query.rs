//! Pair queries: distance, slices, counts and enumeration.

use crate::error::{GeoError, Result};
use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::{Vertex, Window};

use super::dag::GeodesicDag;
use super::field::{dist_map_limited, DistanceField};
use super::report::SliceReport;

/// Both single-source fields of a pair, truncated at `d(u, v)`.
#[derive(Debug, Clone)]
pub struct PairFields {
    pub u: Vertex,
    pub v: Vertex,
    pub d: Cost,
    pub from_u: DistanceField,
    pub from_v: DistanceField,
}

pub fn pair_fields<G: ImplicitGraph + ?Sized>(graph: &G, u: Vertex, v: Vertex, window: &Window) -> Result<PairFields> {
    if !window.contains(v) {
        return Err(GeoError::SourceOutsideWindow(v));
    }
    let from_u = dist_map_limited(graph, u, window, None, Some(v))?;
    let d = from_u.require(v)?;
    let from_v = dist_map_limited(graph, v, window, Some(d), None)?;
    Ok(PairFields { u, v, d, from_u, from_v })
}

impl PairFields {
    #[inline]
    pub fn on_geodesic(&self, w: Vertex) -> bool {
        matches!((self.from_u.cost(w), self.from_v.cost(w)), (Some(a), Some(b)) if a + b == self.d)
    }

    /// `{w : d(u, w) = k, d(u, w) + d(w, v) = d(u, v)}` in row-major order.
    pub fn slice(&self, k: i64) -> Vec<Vertex> {
        if k < 0 || k as u64 > self.d {
            return Vec::new();
        }
        let k = k as Cost;
        self.from_u.reached().filter(|&(w, c)| c == k && self.on_geodesic(w)).map(|(w, _)| w).collect()
    }

    /// Slice sizes for `k = 0..=d`.
    pub fn profile(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.d as usize + 1];
        for (w, c) in self.from_u.reached() {
            if c <= self.d && self.on_geodesic(w) {
                sizes[c as usize] += 1;
            }
        }
        sizes
    }

    /// Every geodesic vertex, row-major.
    pub fn geodesic_vertices(&self) -> Vec<Vertex> {
        self.from_u.reached().filter(|&(w, _)| self.on_geodesic(w)).map(|(w, _)| w).collect()
    }
}

pub fn distance<G: ImplicitGraph + ?Sized>(graph: &G, u: Vertex, v: Vertex, window: &Window) -> Result<Cost> {
    dist_map_limited(graph, u, window, None, Some(v))?.require(v)
}

pub fn slice<G: ImplicitGraph + ?Sized>(graph: &G, u: Vertex, v: Vertex, k: i64, window: &Window) -> Result<Vec<Vertex>> {
    Ok(pair_fields(graph, u, v, window)?.slice(k))
}

pub fn slice_profile<G: ImplicitGraph + ?Sized>(graph: &G, u: Vertex, v: Vertex, window: &Window) -> Result<SliceReport> {
    let pf = pair_fields(graph, u, v, window)?;
    Ok(SliceReport::new(u, v, pf.d, pf.profile()))
}

pub fn geodesic_dag<G: ImplicitGraph + ?Sized>(graph: &G, u: Vertex, v: Vertex, window: &Window) -> Result<GeodesicDag> {
    let field = dist_map_limited(graph, u, window, None, Some(v))?;
    GeodesicDag::build(graph, &field, v)
}

/// Number of geodesics, or `None` when it exceeds `cap`.
pub fn count_geodesics<G: ImplicitGraph + ?Sized>(
    graph: &G,
    u: Vertex,
    v: Vertex,
    window: &Window,
    cap: u64,
) -> Result<Option<u64>> {
    Ok(geodesic_dag(graph, u, v, window)?.count(cap))
}

pub fn enumerate_geodesics<G: ImplicitGraph + ?Sized>(
    graph: &G,
    u: Vertex,
    v: Vertex,
    window: &Window,
    cap: u64,
) -> Result<Vec<Vec<Vertex>>> {
    geodesic_dag(graph, u, v, window)?.enumerate(cap)
}
