//! Shortest-path DAGs between a pair, geodesic counting and enumeration.

use std::collections::HashMap;

use crate::error::{GeoError, Result};
use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::Vertex;

use super::field::DistanceField;

/// Reusable marks for repeated DAG extraction from one distance field.
#[derive(Debug, Default)]
pub struct DagScratch {
    mark: Vec<u32>,
    stamp: u32,
    stack: Vec<usize>,
    buf: Vec<(Vertex, Cost)>,
}

impl DagScratch {
    fn reset(&mut self, cells: usize) {
        if self.mark.len() != cells {
            self.mark = vec![0; cells];
            self.stamp = 0;
        }
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
    }
}

/// Visit every vertex on a geodesic from the field's source to `v`, with its
/// cost from the source. Returns `d(source, v)`.
pub fn for_each_geodesic_vertex<G, F>(
    graph: &G,
    field: &DistanceField,
    v: Vertex,
    scratch: &mut DagScratch,
    mut f: F,
) -> Result<Cost>
where
    G: ImplicitGraph + ?Sized,
    F: FnMut(Vertex, Cost),
{
    let window = *field.window();
    let d = field.require(v)?;
    let vi = window.index(v).ok_or(GeoError::Unreached(v))?;
    scratch.reset(window.cells() as usize);
    let stamp = scratch.stamp;
    scratch.mark[vi] = stamp;
    scratch.stack.clear();
    scratch.stack.push(vi);
    while let Some(i) = scratch.stack.pop() {
        let w = window.vertex_at(i);
        let cw = field.cost_at(i).expect("marked vertices are reached");
        f(w, cw);
        scratch.buf.clear();
        graph.neighbors(w, &mut scratch.buf);
        for &(x, c) in &scratch.buf {
            let Some(j) = window.index(x) else { continue };
            if scratch.mark[j] != stamp && field.cost_at(j).is_some_and(|cx| cx + c == cw) {
                scratch.mark[j] = stamp;
                scratch.stack.push(j);
            }
        }
    }
    Ok(d)
}

/// Every edge `xy` with `d(u, x) + w(xy) = d(u, y)` lying on a geodesic from `u` to `v`.
///
/// Nodes are sorted by `(cost from u, vertex)`, so node order is a topological order.
#[derive(Debug, Clone)]
pub struct GeodesicDag {
    u: Vertex,
    v: Vertex,
    d: Cost,
    nodes: Vec<Vertex>,
    cost: Vec<Cost>,
    pred_off: Vec<u32>,
    pred: Vec<u32>,
    succ_off: Vec<u32>,
    succ: Vec<u32>,
}

impl GeodesicDag {
    pub fn build<G: ImplicitGraph + ?Sized>(graph: &G, field: &DistanceField, v: Vertex) -> Result<Self> {
        Self::build_with(graph, field, v, &mut DagScratch::default())
    }

    /// Walk back from `v` along tight edges of `field`.
    pub fn build_with<G: ImplicitGraph + ?Sized>(
        graph: &G,
        field: &DistanceField,
        v: Vertex,
        scratch: &mut DagScratch,
    ) -> Result<Self> {
        let mut found: Vec<(Cost, Vertex)> = Vec::new();
        let d = for_each_geodesic_vertex(graph, field, v, scratch, |w, c| found.push((c, w)))?;
        found.sort_unstable();
        let nodes: Vec<Vertex> = found.iter().map(|&(_, w)| w).collect();
        let cost: Vec<Cost> = found.iter().map(|&(c, _)| c).collect();
        let index: HashMap<Vertex, u32> = nodes.iter().enumerate().map(|(i, &w)| (w, i as u32)).collect();

        let mut pred_off = Vec::with_capacity(nodes.len() + 1);
        let mut pred = Vec::new();
        pred_off.push(0);
        for (i, &w) in nodes.iter().enumerate() {
            scratch.buf.clear();
            graph.neighbors(w, &mut scratch.buf);
            let mut ps: Vec<u32> = scratch
                .buf
                .iter()
                .filter_map(|&(x, c)| index.get(&x).filter(|&&j| cost[j as usize] + c == cost[i]).copied())
                .collect();
            ps.sort_unstable();
            ps.dedup();
            pred.extend(ps);
            pred_off.push(pred.len() as u32);
        }

        let n = nodes.len();
        let mut deg = vec![0u32; n + 1];
        for &p in &pred {
            deg[p as usize + 1] += 1;
        }
        for i in 0..n {
            deg[i + 1] += deg[i];
        }
        let succ_off = deg.clone();
        let mut fill = deg;
        let mut succ = vec![0u32; pred.len()];
        for i in 0..n {
            for &p in &pred[pred_off[i] as usize..pred_off[i + 1] as usize] {
                succ[fill[p as usize] as usize] = i as u32;
                fill[p as usize] += 1;
            }
        }
        // Successors in vertex order so enumeration is lexicographic.
        for i in 0..n {
            succ[succ_off[i] as usize..succ_off[i + 1] as usize].sort_unstable_by_key(|&s| nodes[s as usize]);
        }
        Ok(GeodesicDag { u: field.source(), v, d, nodes, cost, pred_off, pred, succ_off, succ })
    }

    pub fn source(&self) -> Vertex {
        self.u
    }

    pub fn target(&self) -> Vertex {
        self.v
    }

    pub fn distance(&self) -> Cost {
        self.d
    }

    /// Vertices lying on some geodesic, sorted by cost then coordinates.
    pub fn vertices(&self) -> &[Vertex] {
        &self.nodes
    }

    pub fn costs(&self) -> &[Cost] {
        &self.cost
    }

    pub fn edge_count(&self) -> usize {
        self.pred.len()
    }

    pub fn predecessors(&self, i: usize) -> &[u32] {
        &self.pred[self.pred_off[i] as usize..self.pred_off[i + 1] as usize]
    }

    pub fn successors(&self, i: usize) -> &[u32] {
        &self.succ[self.succ_off[i] as usize..self.succ_off[i + 1] as usize]
    }

    /// `|S(u, v, k)|` for `k = 0..=d`.
    pub fn profile(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.d as usize + 1];
        for &c in &self.cost {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// `S(u, v, k)` in row-major order.
    pub fn slice(&self, k: i64) -> Vec<Vertex> {
        if k < 0 {
            return Vec::new();
        }
        let mut out: Vec<Vertex> =
            self.nodes.iter().zip(&self.cost).filter(|&(_, &c)| c == k as Cost).map(|(&w, _)| w).collect();
        out.sort_by_key(|w| (w.y, w.x));
        out
    }

    /// Fold `step` along every geodesic and return the set of states reached at
    /// the target, as a bitmask over states `0..32`. `step(state, vertex)`
    /// returns the next state, or `None` to discard the path. The fold starts
    /// from `init` before the source vertex.
    pub fn reachable_states<F: Fn(u8, Vertex) -> Option<u8>>(&self, init: u8, step: F) -> u32 {
        let mut masks = vec![0u32; self.nodes.len()];
        let mut end_mask = 0;
        for i in 0..self.nodes.len() {
            let w = self.nodes[i];
            let incoming = if w == self.u {
                1u32 << init
            } else {
                self.predecessors(i).iter().fold(0u32, |m, &p| m | masks[p as usize])
            };
            let mut out = 0u32;
            for s in 0..32u8 {
                if incoming & (1 << s) != 0 {
                    if let Some(t) = step(s, w) {
                        debug_assert!(t < 32);
                        out |= 1 << t;
                    }
                }
            }
            masks[i] = out;
            if w == self.v {
                end_mask = out;
            }
        }
        end_mask
    }

    /// A geodesic through node `i`, assembled from predecessor and successor links.
    pub fn geodesic_through(&self, i: usize) -> Vec<Vertex> {
        let mut back = vec![self.nodes[i]];
        let mut cur = i;
        while self.nodes[cur] != self.u {
            cur = self.predecessors(cur)[0] as usize;
            back.push(self.nodes[cur]);
        }
        back.reverse();
        let mut cur = i;
        while self.nodes[cur] != self.v {
            cur = self.successors(cur)[0] as usize;
            back.push(self.nodes[cur]);
        }
        back
    }

    pub fn index_of(&self, w: Vertex) -> Option<usize> {
        self.nodes.iter().position(|&x| x == w)
    }

    /// Number of geodesics ending at each node, saturating at `cap + 1`.
    fn path_counts(&self, cap: u64) -> Vec<u64> {
        let ceiling = cap.saturating_add(1);
        let mut cnt = vec![0u64; self.nodes.len()];
        for i in 0..self.nodes.len() {
            cnt[i] = if self.nodes[i] == self.u {
                1
            } else {
                self.predecessors(i).iter().fold(0u64, |acc, &p| acc.saturating_add(cnt[p as usize]).min(ceiling))
            };
        }
        cnt
    }

    /// Exact number of geodesics, or `None` if it exceeds `cap`.
    pub fn count(&self, cap: u64) -> Option<u64> {
        let cnt = self.path_counts(cap);
        let total = self.nodes.iter().position(|&w| w == self.v).map_or(0, |i| cnt[i]);
        (total <= cap).then_some(total)
    }

    /// Call `f` on every geodesic in lexicographic order. Fails up front if
    /// there are more than `cap` of them.
    pub fn for_each_geodesic<F: FnMut(&[Vertex])>(&self, cap: u64, mut f: F) -> Result<u64> {
        let total = self.count(cap).ok_or(GeoError::CapExceeded(cap))?;
        let Some(start) = self.nodes.iter().position(|&w| w == self.u) else {
            return Ok(0);
        };
        let end = self.nodes.iter().position(|&w| w == self.v).expect("target is a node");
        let mut path = vec![self.nodes[start]];
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if node == end {
                f(&path);
                stack.pop();
                path.pop();
                continue;
            }
            let succ = self.successors(node);
            if *next < succ.len() {
                let s = succ[*next] as usize;
                *next += 1;
                stack.push((s, 0));
                path.push(self.nodes[s]);
            } else {
                stack.pop();
                path.pop();
            }
        }
        Ok(total)
    }

    pub fn enumerate(&self, cap: u64) -> Result<Vec<Vec<Vertex>>> {
        let mut out = Vec::new();
        self.for_each_geodesic(cap, |p| out.push(p.to_vec()))?;
        Ok(out)
    }
}
