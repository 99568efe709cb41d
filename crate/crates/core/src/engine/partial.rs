//! Slices split by the segment of the geodesic a vertex lies on.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::ImplicitGraph;
use crate::lattice::{Vertex, Window};

use super::dag::GeodesicDag;
use super::query::geodesic_dag;
use super::segment::{segment_geodesic, Level};

/// Partial slices at one `k`. Vertex sets are row-major.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialSlices {
    pub s1: Vec<Vertex>,
    pub s2: Vec<Vertex>,
    pub s3: Vec<Vertex>,
    /// `S(2, n)` keyed by the level of the geodesic.
    pub s2_by_level: BTreeMap<Level, Vec<Vertex>>,
}

impl PartialSlices {
    pub fn union(&self) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = self.s1.iter().chain(&self.s2).chain(&self.s3).copied().collect();
        all.sort_by_key(|w| (w.y, w.x));
        all.dedup();
        all
    }
}

#[derive(Default)]
struct Acc {
    s1: BTreeSet<(i64, i64)>,
    s2: BTreeSet<(i64, i64)>,
    s3: BTreeSet<(i64, i64)>,
    by_level: BTreeMap<Level, BTreeSet<(i64, i64)>>,
}

fn rows(set: BTreeSet<(i64, i64)>) -> Vec<Vertex> {
    set.into_iter().map(|(y, x)| Vertex::new(x, y)).collect()
}

/// Partial slices for every `k` in `0..=d`, from the enumerated geodesics.
pub fn partial_slice_table(dag: &GeodesicDag, p: i64, cap: u64) -> Result<Vec<PartialSlices>> {
    let d = dag.distance() as usize;
    let cost_of: std::collections::HashMap<Vertex, u64> =
        dag.vertices().iter().copied().zip(dag.costs().iter().copied()).collect();
    let mut acc: Vec<Acc> = (0..=d).map(|_| Acc::default()).collect();
    dag.for_each_geodesic(cap, |path| {
        let seg = segment_geodesic(path, p).expect("geodesics are non-empty");
        for (i, &w) in path.iter().enumerate() {
            let a = &mut acc[cost_of[&w] as usize];
            let key = (w.y, w.x);
            match seg.segment_of(i) {
                1 => {
                    a.s1.insert(key);
                }
                2 => {
                    a.s2.insert(key);
                    a.by_level.entry(seg.n).or_default().insert(key);
                }
                _ => {
                    a.s3.insert(key);
                }
            }
        }
    })?;
    Ok(acc
        .into_iter()
        .map(|a| PartialSlices {
            s1: rows(a.s1),
            s2: rows(a.s2),
            s3: rows(a.s3),
            s2_by_level: a.by_level.into_iter().map(|(n, s)| (n, rows(s))).collect(),
        })
        .collect())
}

pub fn partial_slices<G: ImplicitGraph + ?Sized>(
    graph: &G,
    u: Vertex,
    v: Vertex,
    k: i64,
    p: i64,
    window: &Window,
    cap: u64,
) -> Result<PartialSlices> {
    let dag = geodesic_dag(graph, u, v, window)?;
    if k < 0 || k as u64 > dag.distance() {
        return Ok(PartialSlices::default());
    }
    let mut table = partial_slice_table(&dag, p, cap)?;
    Ok(table.swap_remove(k as usize))
}
