//! Per-source batching: one distance field serves every target of a source.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::engine::{
    dist_map_limited, for_each_geodesic_vertex, inflation_with_bound, window_for_capped, DagScratch, DistanceField,
};
use crate::error::{GeoError, Result};
use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::{Vertex, Window};

use super::report::{CheckResult, Witness};

/// Pairs grouped by source, targets sorted.
pub fn group_by_source(pairs: &[(Vertex, Vertex)]) -> Vec<(Vertex, Vec<Vertex>)> {
    let mut map: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(u, v) in pairs {
        map.entry(u).or_default().push(v);
    }
    map.into_iter()
        .map(|(u, mut vs)| {
            vs.sort();
            vs.dedup();
            (u, vs)
        })
        .collect()
}

/// A window containing every geodesic from `u` to any of `targets`, given an
/// upper bound on each distance.
pub fn source_window<G, B>(graph: &G, u: Vertex, targets: &[Vertex], cap: u64, bound: B) -> Result<(Window, Cost)>
where
    G: ImplicitGraph + ?Sized,
    B: Fn(Vertex, Vertex) -> Cost,
{
    let mut window = Window::bounding(u, u)?;
    let mut limit = 0;
    for &v in targets {
        let d = bound(u, v);
        limit = limit.max(d);
        window = window.union(&Window::bounding(u, v)?.inflate(inflation_with_bound(graph, d))?)?;
    }
    if window.cells() > cap {
        return Err(GeoError::WindowTooLarge { required: window.cells(), cap });
    }
    Ok((window, limit))
}

/// Run `f` on one field per source, in parallel over sources, and merge the
/// partial results. Sources whose window exceeds `cap` are skipped and noted.
pub fn per_source<G, F>(name: &str, graph: &G, pairs: &[(Vertex, Vertex)], cap: u64, f: F) -> CheckResult
where
    G: ImplicitGraph + ?Sized,
    F: Fn(&DistanceField, &[Vertex], &mut DagScratch, &mut CheckResult) + Sync,
{
    per_source_bounded(name, graph, pairs, cap, |u, v| graph.distance_upper_bound(u, v), f)
}

pub fn per_source_bounded<G, B, F>(
    name: &str,
    graph: &G,
    pairs: &[(Vertex, Vertex)],
    cap: u64,
    bound: B,
    f: F,
) -> CheckResult
where
    G: ImplicitGraph + ?Sized,
    B: Fn(Vertex, Vertex) -> Cost + Sync,
    F: Fn(&DistanceField, &[Vertex], &mut DagScratch, &mut CheckResult) + Sync,
{
    let jobs = group_by_source(pairs);
    let parts: Vec<CheckResult> = jobs
        .par_iter()
        .map(|(u, targets)| {
            let mut part = CheckResult::new(name);
            let field = source_window(graph, *u, targets, cap, &bound)
                .and_then(|(w, limit)| dist_map_limited(graph, *u, &w, Some(limit), None));
            match field {
                Ok(field) => f(&field, targets, &mut DagScratch::default(), &mut part),
                Err(e) => {
                    part.skipped += targets.len() as u64;
                    part.note(format!("source {u} skipped: {e}"));
                }
            }
            part
        })
        .collect();
    let mut out = CheckResult::new(name);
    for p in parts {
        out.absorb(p);
    }
    out
}

/// `|S(u, v, k)|` for every `k`, from one early-stopping field on a provable window.
pub fn pair_profile<G: ImplicitGraph + ?Sized>(graph: &G, u: Vertex, v: Vertex, cap: u64) -> Result<Vec<usize>> {
    let window = window_for_capped(graph, u, v, cap)?;
    let field = dist_map_limited(graph, u, &window, None, Some(v))?;
    profile_from(graph, &field, v, &mut DagScratch::default())
}

/// Slice sizes towards `v` from an existing field.
pub fn profile_from<G: ImplicitGraph + ?Sized>(
    graph: &G,
    field: &DistanceField,
    v: Vertex,
    scratch: &mut DagScratch,
) -> Result<Vec<usize>> {
    let d = field.require(v)?;
    let mut sizes = vec![0usize; d as usize + 1];
    for_each_geodesic_vertex(graph, field, v, scratch, |_, c| sizes[c as usize] += 1)?;
    Ok(sizes)
}

/// Record an engine error against a pair as a failure.
pub fn engine_failure(r: &mut CheckResult, u: Vertex, v: Vertex, e: GeoError) {
    r.fail(Witness::pair(u, v, format!("engine error: {e}")));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedLattice;
    use crate::lattice::WeightParams;

    #[test]
    fn grouping() {
        let a = Vertex::new(0, 0);
        let b = Vertex::new(1, 0);
        let g = group_by_source(&[(b, a), (a, b), (a, a), (a, b)]);
        assert_eq!(g, vec![(a, vec![a, b]), (b, vec![a])]);
    }

    #[test]
    fn batched_fields_match_single_pair_distances() {
        let h = WeightedLattice::new(WeightParams::new(3, 1, 2).unwrap());
        let pairs = vec![(Vertex::new(0, 0), Vertex::new(6, 0)), (Vertex::new(0, 0), Vertex::new(1, 1))];
        let r = per_source("t", &h, &pairs, 1 << 20, |field, targets, _, r| {
            for &v in targets {
                r.instances += 1;
                r.record_max(&format!("d{}", v.x), field.cost(v).unwrap() as f64);
            }
        });
        assert_eq!(r.instances, 2);
        assert_eq!(r.extremes["d6"], 6.0);
        assert_eq!(r.extremes["d1"], 3.0);
    }
}
