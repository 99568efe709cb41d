//! Exact single-source distances on a window, by a bucket queue over integer costs.

use crate::error::{GeoError, Result};
use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::{Vertex, Window};

const UNREACHED: u32 = u32::MAX;

/// Costs from `source` to every vertex of `window`, in the graph restricted to
/// the window.
#[derive(Debug, Clone)]
pub struct DistanceField {
    source: Vertex,
    window: Window,
    costs: Vec<u32>,
    limit: Option<Cost>,
    confined: bool,
}

impl DistanceField {
    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Search stopped after settling every vertex of cost at most this value.
    pub fn limit(&self) -> Option<Cost> {
        self.limit
    }

    /// Whether the window was sized so that the relevant geodesics cannot leave it.
    pub fn confined(&self) -> bool {
        self.confined
    }

    pub fn mark_confined(&mut self, confined: bool) {
        self.confined = confined;
    }

    #[inline]
    pub fn cost(&self, v: Vertex) -> Option<Cost> {
        self.window.index(v).and_then(|i| self.cost_at(i))
    }

    #[inline]
    pub fn cost_at(&self, idx: usize) -> Option<Cost> {
        match self.costs[idx] {
            UNREACHED => None,
            c => Some(c as Cost),
        }
    }

    pub fn require(&self, v: Vertex) -> Result<Cost> {
        self.cost(v).ok_or(GeoError::Unreached(v))
    }

    /// Reached vertices with their costs, row-major.
    pub fn reached(&self) -> impl Iterator<Item = (Vertex, Cost)> + '_ {
        self.costs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != UNREACHED)
            .map(|(i, &c)| (self.window.vertex_at(i), c as Cost))
    }
}

/// Exact distances from `source` inside `window`.
pub fn dist_map<G: ImplicitGraph + ?Sized>(graph: &G, source: Vertex, window: &Window) -> Result<DistanceField> {
    dist_map_limited(graph, source, window, None, None)
}

/// As [`dist_map`], stopping once every vertex of cost `<= limit` is settled. If
/// `target` is given, the limit tightens to its distance when it is settled.
pub fn dist_map_limited<G: ImplicitGraph + ?Sized>(
    graph: &G,
    source: Vertex,
    window: &Window,
    limit: Option<Cost>,
    target: Option<Vertex>,
) -> Result<DistanceField> {
    let src = window.index(source).ok_or(GeoError::SourceOutsideWindow(source))?;
    let cells = usize::try_from(window.cells()).map_err(|_| GeoError::Overflow("window cells"))?;
    let target_idx = target.and_then(|t| window.index(t));
    let max_cost = graph.max_cost();
    let ring = usize::try_from(max_cost + 1).map_err(|_| GeoError::Overflow("bucket ring"))?;

    let mut costs = vec![UNREACHED; cells];
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); ring];
    let mut limit = limit;
    let mut buf = Vec::with_capacity(8);
    let mut pending = 1usize;
    costs[src] = 0;
    buckets[0].push(src as u32);
    let mut cur: u64 = 0;

    'outer: while pending > 0 {
        if limit.is_some_and(|l| cur > l) {
            break;
        }
        let slot = (cur % ring as u64) as usize;
        while let Some(i) = buckets[slot].pop() {
            pending -= 1;
            let i = i as usize;
            if costs[i] as u64 != cur {
                continue;
            }
            if Some(i) == target_idx {
                limit = Some(limit.map_or(cur, |l| l.min(cur)));
            }
            buf.clear();
            graph.neighbors(window.vertex_at(i), &mut buf);
            for &(w, c) in &buf {
                debug_assert!(c >= 1 && c <= max_cost, "edge cost {c} outside [1, {max_cost}]");
                let Some(j) = window.index(w) else { continue };
                let nd = cur + c;
                if nd >= UNREACHED as u64 {
                    return Err(GeoError::Overflow("distance exceeds u32"));
                }
                if (nd as u32) < costs[j] {
                    costs[j] = nd as u32;
                    buckets[(nd % ring as u64) as usize].push(j as u32);
                    pending += 1;
                }
            }
        }
        cur += 1;
        if cur > u32::MAX as u64 {
            break 'outer;
        }
    }

    // Entries above the limit were only tentatively labelled; drop them.
    if let Some(l) = limit {
        for c in costs.iter_mut() {
            if *c != UNREACHED && *c as u64 > l {
                *c = UNREACHED;
            }
        }
    }
    Ok(DistanceField { source, window: *window, costs, limit, confined: false })
}
